#pragma once

#include <map>
#include <string>
#include <vector>

#include "szeta/approx.hpp"
#include "szeta/schurzeta.hpp"
#include "szeta/tableaux.hpp"

namespace szeta {

enum class IdentityId {
    jacobi_trudi_h,
    jacobi_trudi_e,
    extended_jacobi_trudi,
    giambelli,
    skew_giambelli_hash,
    hook_expansion_star,
    hook_expansion_zeta,
    frobenius_expansion,
    dirichlet_series,
    derivative_identity,
    root_reduction,
};

std::string to_string(IdentityId id);
IdentityId parse_identity_id(const std::string& text);

struct IdentityConfig {
    EvalConfig eval;
    double slack = 1e-9;
    long outer_cutoff = 1000;  // diagonal sum of the Dirichlet-series form
};

struct IdentityReport {
    IdentityId id{};
    std::string shape;
    Approx lhs;
    Approx rhs;
    double discrepancy = 0;
    double budget = 0;
    bool pass = false;
    std::map<std::string, long> cutoffs;
    double runtime_ms = 0;
    std::string note;
};

// signed permutation expansion with error propagation
Approx determinant(const std::vector<std::vector<Approx>>& m);

IdentityReport jacobi_trudi_H(const ContentSpec& spec, const Partition& lam, const IdentityConfig& cfg);
IdentityReport jacobi_trudi_E(const ContentSpec& spec, const Partition& lam, const IdentityConfig& cfg);
// determinant side built from the top cell of each content diagonal; LHS is the tableau as given
IdentityReport jacobi_trudi_H_tableau(const SchurInstance& inst, const IdentityConfig& cfg);

// argument cells of the (i,j) entry for lambda = (m, n, 1^(X-2)); depth 0 -> empty list with
// *depth = 0, negative depth -> *depth < 0
std::vector<Cell> extended_entry_cells(const Partition& lam, int i, int j, int* depth);
bool is_extended_family(const Partition& lam);
IdentityReport extended_jacobi_trudi(const ExponentTableau& s, const ShiftTableau& x, const IdentityConfig& cfg,
                                     bool sum_diag = true);

IdentityReport giambelli(const ContentSpec& spec, const Partition& lam, const IdentityConfig& cfg);

// entry shapes (p_i | q_j)^# of the skew determinant
std::vector<std::vector<SkewShape>> skew_giambelli_entry_shapes(const Partition& lam);
IdentityReport skew_giambelli_hash(const IntTableau& gamma, const ShiftTableau& x, const IdentityConfig& cfg);

IdentityReport hook_expansion_star(const ContentSpec& spec, int p, int q, const IdentityConfig& cfg);
IdentityReport hook_expansion_zeta(const ContentSpec& spec, int p, int q, const IdentityConfig& cfg);
IdentityReport frobenius_expansion(const ContentSpec& spec, const Partition& lam, const IdentityConfig& cfg);

IdentityReport dirichlet_series_expr(const ContentSpec& spec, const Partition& lam, const IdentityConfig& cfg);
// literal N-fold diagonal sum with entries <= outer (no tail), for cross-checking the factorized form
cplx dirichlet_literal_sum(const ContentSpec& spec, const Partition& lam, long outer, const EvalConfig& inner);
cplx dirichlet_factorized_sum(const ContentSpec& spec, const Partition& lam, long outer, const EvalConfig& inner);

IdentityReport derivative_identity(const ContentSpec& spec, int p, int q, int ell, int order,
                                   const IdentityConfig& cfg);

struct DerivativeCheck {
    DerivativeEstimate fd;  // d/dy_ell of the direct value
    Approx predicted;       // -z_ell * (sum of single-shifted values)
    double gap = 0;
    bool pass = false;
};

DerivativeCheck derivative_fd_check(const ContentSpec& spec, int p, int q, int ell, double h, double tol,
                                    const IdentityConfig& cfg);

}  // namespace szeta
