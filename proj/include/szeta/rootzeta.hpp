#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "szeta/approx.hpp"

namespace szeta {

struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kMaxRootRank = 4;

// exponents s(i,j), 1 <= i < j <= r+1, one per positive root of A_r
class RootExponents {
public:
    explicit RootExponents(int r = 1);
    // ordered by root height, then by i: s(1,2), s(2,3), ..., s(r,r+1), s(1,3), ..., s(1,r+1)
    static RootExponents from_flat(int r, const std::vector<cplx>& flat);
    static RootExponents from_pairs(int r, const std::map<std::pair<int, int>, cplx>& pairs);
    // s(1,k+1) = z_k, all other exponents 0
    static RootExponents first_row(const std::vector<cplx>& z);

    int rank() const { return r_; }
    cplx operator()(int i, int j) const { return s_[slot(i, j)]; }
    cplx& operator()(int i, int j) { return s_[slot(i, j)]; }
    std::vector<cplx> flat() const;
    // all s(i,j) with i >= 2 vanish
    bool reduced() const;

private:
    std::size_t slot(int i, int j) const;
    int r_;
    std::vector<cplx> s_;
};

enum class RootMethod { automatic, literal };

Approx zeta_Ar(const RootExponents& e, const EvalConfig& cfg, RootMethod method = RootMethod::automatic);
Approx zeta_bullet(const RootExponents& e, int d, const EvalConfig& cfg, RootMethod method = RootMethod::automatic);
Approx zeta_H(const RootExponents& e, double x, const EvalConfig& cfg, RootMethod method = RootMethod::automatic);
Approx zeta_bullet_H(const RootExponents& e, int d, double x, const EvalConfig& cfg,
                     RootMethod method = RootMethod::automatic);

struct ReductionCheck {
    Approx lhs;
    Approx rhs;
    double discrepancy = 0;
    double budget = 0;
    bool pass = false;
};

struct ReductionReport {
    ReductionCheck star_star;  // zeta_bullet_H with d = p  vs  zeta** (z_1..z_p | m..m)
    ReductionCheck strict;     // zeta_H  vs  zeta (z_-1..z_-q | m..m)
    bool pass() const { return star_star.pass && strict.pass; }
};

ReductionReport check_reductions(const std::vector<cplx>& z_plus, const std::vector<cplx>& z_minus, double m,
                                 const EvalConfig& cfg, double slack = 1e-9);

}  // namespace szeta
