#pragma once

#include <vector>

#include "szeta/approx.hpp"
#include "szeta/tableaux.hpp"
#include "szeta/transfer.hpp"

namespace szeta {

struct SchurInstance {
    SkewShape shape;
    ExponentTableau s;
    ShiftTableau x;
    bool allow_outside_domain = false;
};

SchurInstance make_instance(const SkewShape& shape, const ContentSpec& spec);
SchurInstance make_instance(ExponentTableau s, ShiftTableau x);

Approx schur_eval(const SchurInstance& inst, const EvalConfig& cfg);
// sum over SSYT with entries <= n, no tail
cplx schur_truncated(const SchurInstance& inst, long n);

cplx schur_weight(const ExponentTableau& s, const ShiftTableau& t);

SchurInstance shift_exponent(const SchurInstance& inst, const std::vector<Cell>& cells, int a);

struct DerivativeEstimate {
    Approx estimate;            // err_bound propagates only the truncation bounds
    double discretization = 0;  // |extrapolated - plain central difference|, an O(h^2) indicator
};

// d/dy_ell of the content-parametrized value, central differences with one Richardson step
DerivativeEstimate d_dy(const SkewShape& shape, const ContentSpec& spec, int ell, double h, const EvalConfig& cfg,
                        bool richardson = true);

}  // namespace szeta
