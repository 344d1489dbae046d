#pragma once

#include <vector>

#include "szeta/approx.hpp"
#include "szeta/tableaux.hpp"

namespace szeta {

enum class ChainKind {
    strict,          // 0 < m_1 < ... < m_r
    weak,            // 0 < m_1 <= ... <= m_r
    weak_from_zero,  // 0 <= m_1 <= ... <= m_r
};

// truncated chain sum with tails; empty s gives exactly 1
Approx ez_chain(ChainKind kind, const std::vector<cplx>& s, const std::vector<double>& y, const EvalConfig& cfg);

Approx ez_zeta(const std::vector<cplx>& s, const std::vector<double>& y, const EvalConfig& cfg);
Approx ez_zeta_star(const std::vector<cplx>& s, const std::vector<double>& y, const EvalConfig& cfg);
Approx ez_zeta_star_star(const std::vector<cplx>& s, const std::vector<double>& y, const EvalConfig& cfg);
Approx hurwitz(cplx s, double x, const EvalConfig& cfg);

}  // namespace szeta
