#include "szeta/identities.hpp"

#include <chrono>
#include <set>

#include "szeta/ezzeta.hpp"

namespace szeta {

namespace {

const std::map<IdentityId, std::string>& id_names() {
    static const std::map<IdentityId, std::string> names{
        {IdentityId::jacobi_trudi_h, "jacobi_trudi_h"},
        {IdentityId::jacobi_trudi_e, "jacobi_trudi_e"},
        {IdentityId::extended_jacobi_trudi, "extended_jacobi_trudi"},
        {IdentityId::giambelli, "giambelli"},
        {IdentityId::skew_giambelli_hash, "skew_giambelli_hash"},
        {IdentityId::hook_expansion_star, "hook_expansion_star"},
        {IdentityId::hook_expansion_zeta, "hook_expansion_zeta"},
        {IdentityId::frobenius_expansion, "frobenius_expansion"},
        {IdentityId::dirichlet_series, "dirichlet_series"},
        {IdentityId::derivative_identity, "derivative_identity"},
        {IdentityId::root_reduction, "root_reduction"},
    };
    return names;
}

using Clock = std::chrono::steady_clock;

IdentityReport finish(IdentityId id, std::string shape, Approx lhs, Approx rhs, const IdentityConfig& cfg,
                      Clock::time_point start) {
    IdentityReport r;
    r.id = id;
    r.shape = std::move(shape);
    r.lhs = lhs;
    r.rhs = rhs;
    r.discrepancy = std::abs(lhs.value - rhs.value);
    r.budget = lhs.err_bound + rhs.err_bound;
    r.pass = r.discrepancy <= r.budget + cfg.slack;
    r.cutoffs["series"] = cfg.eval.cutoff;
    r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
}

std::vector<cplx> z_of(const ContentSpec& spec, const std::vector<int>& contents) {
    std::vector<cplx> out;
    for (int k : contents) {
        auto it = spec.z.find(k);
        if (it == spec.z.end()) throw DomainError("no exponent z_" + std::to_string(k));
        out.push_back(it->second);
    }
    return out;
}

std::vector<double> y_of(const ContentSpec& spec, const std::vector<int>& contents) {
    std::vector<double> out;
    for (int k : contents) {
        auto it = spec.y.find(k);
        out.push_back(it == spec.y.end() ? 0.0 : it->second);
    }
    return out;
}

// contents a, a+1, ..., b (empty when b < a)
std::vector<int> up(int a, int b) {
    std::vector<int> v;
    for (int k = a; k <= b; ++k) v.push_back(k);
    return v;
}

// contents a, a-1, ..., b (empty when b > a)
std::vector<int> down(int a, int b) {
    std::vector<int> v;
    for (int k = a; k >= b; --k) v.push_back(k);
    return v;
}

Approx chain_on(ChainKind kind, const ContentSpec& spec, const std::vector<int>& contents, const EvalConfig& cfg) {
    return ez_chain(kind, z_of(spec, contents), y_of(spec, contents), cfg);
}

Approx direct_value(const ContentSpec& spec, const SkewShape& shape, const EvalConfig& cfg) {
    return schur_eval(make_instance(shape, spec), cfg);
}

ContentSpec fill_shifts(ContentSpec spec, const SkewShape& shape) {
    for (auto c : shape.cells()) spec.y.emplace(c.content(), 0.0);
    return spec;
}

Approx jt_h_det(const ContentSpec& spec, const Partition& lam, const EvalConfig& cfg) {
    int r = lam.rows();
    std::vector<std::vector<Approx>> m(r, std::vector<Approx>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            int d = lam(i) - i + j;
            if (auto c = depth_convention(d)) m[i - 1][j - 1] = *c;
            else m[i - 1][j - 1] = chain_on(ChainKind::weak, spec, up(-j + 1, -j + d), cfg);
        }
    return determinant(m);
}

}  // namespace

std::string to_string(IdentityId id) { return id_names().at(id); }

IdentityId parse_identity_id(const std::string& text) {
    for (const auto& [id, name] : id_names())
        if (name == text) return id;
    throw ParseError("unknown identity id '" + text + "'");
}

Approx determinant(const std::vector<std::vector<Approx>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return Approx::exact(1);
    Approx total = Approx::exact(0);
    for (const auto& p : all_permutations(n)) {
        Approx term = Approx::exact(sign(p));
        bool zero = false;
        for (int i = 0; i < n && !zero; ++i) {
            const Approx& e = m[i][p[i] - 1];
            if (e.value == cplx(0) && e.err_bound == 0) zero = true;
            else term *= e;
        }
        if (!zero) total += term;
    }
    return total;
}

IdentityReport jacobi_trudi_H(const ContentSpec& spec0, const Partition& lam, const IdentityConfig& cfg) {
    auto start = Clock::now();
    ContentSpec spec = fill_shifts(spec0, SkewShape(lam));
    Approx lhs = direct_value(spec, SkewShape(lam), cfg.eval);
    Approx rhs = jt_h_det(spec, lam, cfg.eval);
    return finish(IdentityId::jacobi_trudi_h, to_string(lam), lhs, rhs, cfg, start);
}

IdentityReport jacobi_trudi_E(const ContentSpec& spec0, const Partition& lam, const IdentityConfig& cfg) {
    auto start = Clock::now();
    ContentSpec spec = fill_shifts(spec0, SkewShape(lam));
    Approx lhs = direct_value(spec, SkewShape(lam), cfg.eval);
    Partition conj = conjugate(lam);
    int r = conj.rows();
    std::vector<std::vector<Approx>> m(r, std::vector<Approx>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            int d = conj(i) - i + j;
            if (auto c = depth_convention(d)) m[i - 1][j - 1] = *c;
            else m[i - 1][j - 1] = chain_on(ChainKind::strict, spec, down(j - 1, j - d), cfg.eval);
        }
    Approx rhs = determinant(m);
    return finish(IdentityId::jacobi_trudi_e, to_string(lam), lhs, rhs, cfg, start);
}

IdentityReport jacobi_trudi_H_tableau(const SchurInstance& inst, const IdentityConfig& cfg) {
    auto start = Clock::now();
    if (!inst.shape.is_straight()) throw std::invalid_argument("Jacobi-Trudi needs a straight shape");
    ContentSpec spec;
    for (const auto& [k, cells] : diagonal_sets(inst.shape)) {
        spec.z[k] = inst.s[cells.front()];
        spec.y[k] = inst.x[cells.front()];
    }
    Approx lhs = schur_eval(inst, cfg.eval);
    Approx rhs = jt_h_det(spec, inst.shape.outer(), cfg.eval);
    auto r = finish(IdentityId::jacobi_trudi_h, to_string(inst.shape), lhs, rhs, cfg, start);
    if (!is_diagonal_constant(inst.s) || !is_diagonal_constant(inst.x)) r.note = "not diagonal-constant";
    return r;
}

bool is_extended_family(const Partition& lam) {
    if (lam.rows() < 2) return false;
    for (int i = 3; i <= lam.rows(); ++i)
        if (lam(i) != 1) return false;
    return true;
}

std::vector<Cell> extended_entry_cells(const Partition& lam, int i, int j, int* depth) {
    if (!is_extended_family(lam)) throw std::invalid_argument("shape is not of the form (m,n,1^(X-2))");
    int m = lam(1), n = lam(2);
    std::vector<Cell> cells;
    auto row1 = [&](int a, int b) { for (int c = a; c <= b; ++c) cells.push_back({1, c}); };
    auto row2 = [&](int a, int b) { for (int c = a; c <= b; ++c) cells.push_back({2, c}); };
    auto col1 = [&](int a, int b) { for (int r = a; r >= b; --r) cells.push_back({r, 1}); };
    if (i == 1) {
        if (j == 1) row1(1, m);
        else {
            if (j >= 3) col1(j, 3);
            row2(1, n);
            row1(n, m);
        }
    } else if (i == 2) {
        if (j == 1) row1(1, n - 1);
        else {
            if (j >= 3) col1(j, 3);
            row2(1, n);
        }
    } else {
        int d = j - i + 1;
        *depth = d;
        if (d > 0) col1(j, i);
        return cells;
    }
    *depth = static_cast<int>(cells.size());
    return cells;
}

IdentityReport extended_jacobi_trudi(const ExponentTableau& s, const ShiftTableau& x, const IdentityConfig& cfg,
                                     bool sum_diag) {
    auto start = Clock::now();
    const SkewShape& shape = s.shape();
    if (!shape.is_straight() || !is_extended_family(shape.outer()))
        throw std::invalid_argument("shape is not of the form (m,n,1^(X-2))");
    if (!cfg.eval.allow_outside_domain)
        if (auto v = w_lambda_h_violation(s)) throw DomainError("exponents outside W_{lambda,H}: " + *v);
    const Partition& lam = shape.outer();
    int X = lam.rows();
    auto orbit = sum_diag ? diagonal_orbit(shape) : std::vector<DiagonalOrbit>{diagonal_orbit(shape).front()};
    Approx lhs = Approx::exact(0), rhs = Approx::exact(0);
    for (const auto& o : orbit) {
        auto so = apply_orbit(o, s);
        auto xo = apply_orbit(o, x);
        lhs += schur_eval(make_instance(so, xo), cfg.eval);
        std::vector<std::vector<Approx>> m(X, std::vector<Approx>(X));
        for (int i = 1; i <= X; ++i)
            for (int j = 1; j <= X; ++j) {
                int d = 0;
                auto cells = extended_entry_cells(lam, i, j, &d);
                if (auto c = depth_convention(d)) {
                    m[i - 1][j - 1] = *c;
                    continue;
                }
                std::vector<cplx> zs;
                std::vector<double> ys;
                for (auto c : cells) {
                    zs.push_back(so[c]);
                    ys.push_back(xo[c]);
                }
                m[i - 1][j - 1] = ez_zeta_star(zs, ys, cfg.eval);
            }
        rhs += determinant(m);
    }
    auto r = finish(IdentityId::extended_jacobi_trudi, to_string(lam), lhs, rhs, cfg, start);
    r.note = sum_diag ? "orbit size " + std::to_string(orbit.size()) : "single term";
    return r;
}

IdentityReport giambelli(const ContentSpec& spec0, const Partition& lam, const IdentityConfig& cfg) {
    auto start = Clock::now();
    ContentSpec spec = fill_shifts(spec0, SkewShape(lam));
    Approx lhs = direct_value(spec, SkewShape(lam), cfg.eval);
    auto f = frobenius(lam);
    int n = f.depth();
    std::vector<std::vector<Approx>> m(n, std::vector<Approx>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = direct_value(spec, SkewShape(hook(f.p[i], f.q[j])), cfg.eval);
    Approx rhs = determinant(m);
    return finish(IdentityId::giambelli, to_string(lam), lhs, rhs, cfg, start);
}

std::vector<std::vector<SkewShape>> skew_giambelli_entry_shapes(const Partition& lam) {
    auto f = frobenius(lam);
    int n = f.depth();
    std::vector<std::vector<SkewShape>> out(n, std::vector<SkewShape>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = hash_transpose(SkewShape(hook(f.p[i], f.q[j]))).shape;
    return out;
}

IdentityReport skew_giambelli_hash(const IntTableau& gamma, const ShiftTableau& x, const IdentityConfig& cfg) {
    auto start = Clock::now();
    if (!gamma.shape().is_straight() || !(x.shape() == gamma.shape()))
        throw std::invalid_argument("gamma and x must live on the same partition");
    if (!is_diagonal_constant(gamma) || !is_diagonal_constant(x))
        throw DomainError("gamma and x must be constant along diagonals");
    const Partition& lam = gamma.shape().outer();
    auto h = hash_transpose(gamma.shape());
    IntTableau gh(h.shape);
    ShiftTableau xh(h.shape);
    for (auto [c, t] : h.bijection) {
        gh[t] = gamma[c];
        xh[t] = x[c];
    }
    if (!in_I_theta(gh)) throw DomainError("transported exponents violate the I-condition on the # shape");
    ContentSpec spec;
    for (auto c : gamma.cells()) {
        spec.z[c.content()] = double(gamma[c]);
        spec.y[c.content()] = x[c];
    }
    Approx lhs = schur_eval(make_instance(gh.map<cplx>([](int v) { return cplx(v); }), xh), cfg.eval);
    auto shapes = skew_giambelli_entry_shapes(lam);
    int n = static_cast<int>(shapes.size());
    std::vector<std::vector<Approx>> m(n, std::vector<Approx>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = direct_value(spec, shapes[i][j], cfg.eval);
    Approx rhs = determinant(m);
    return finish(IdentityId::skew_giambelli_hash, to_string(lam), lhs, rhs, cfg, start);
}

IdentityReport hook_expansion_star(const ContentSpec& spec0, int p, int q, const IdentityConfig& cfg) {
    auto start = Clock::now();
    SkewShape shape(hook(p, q));
    ContentSpec spec = fill_shifts(spec0, shape);
    Approx lhs = direct_value(spec, shape, cfg.eval);
    Approx rhs = Approx::exact(0);
    for (int j = 0; j <= q; ++j) {
        Approx t = chain_on(ChainKind::weak, spec, up(-j, p), cfg.eval) *
                   chain_on(ChainKind::strict, spec, down(-j - 1, -q), cfg.eval);
        rhs += (j % 2 ? -1.0 : 1.0) * t;
    }
    return finish(IdentityId::hook_expansion_star, to_string(shape), lhs, rhs, cfg, start);
}

IdentityReport hook_expansion_zeta(const ContentSpec& spec0, int p, int q, const IdentityConfig& cfg) {
    auto start = Clock::now();
    SkewShape shape(hook(p, q));
    ContentSpec spec = fill_shifts(spec0, shape);
    Approx lhs = direct_value(spec, shape, cfg.eval);
    Approx rhs = Approx::exact(0);
    for (int j = 0; j <= p; ++j) {
        Approx t = chain_on(ChainKind::strict, spec, down(j, -q), cfg.eval) *
                   chain_on(ChainKind::weak, spec, up(j + 1, p), cfg.eval);
        rhs += (j % 2 ? -1.0 : 1.0) * t;
    }
    return finish(IdentityId::hook_expansion_zeta, to_string(shape), lhs, rhs, cfg, start);
}

IdentityReport frobenius_expansion(const ContentSpec& spec0, const Partition& lam, const IdentityConfig& cfg) {
    auto start = Clock::now();
    ContentSpec spec = fill_shifts(spec0, SkewShape(lam));
    Approx lhs = direct_value(spec, SkewShape(lam), cfg.eval);
    auto f = frobenius(lam);
    int n = f.depth();
    std::map<std::pair<int, int>, Approx> star, strict;
    auto star_at = [&](int a, int b) {
        auto key = std::make_pair(a, b);
        auto it = star.find(key);
        if (it == star.end()) it = star.emplace(key, chain_on(ChainKind::weak, spec, up(a, b), cfg.eval)).first;
        return it->second;
    };
    auto strict_at = [&](int a, int b) {
        auto key = std::make_pair(a, b);
        auto it = strict.find(key);
        if (it == strict.end()) it = strict.emplace(key, chain_on(ChainKind::strict, spec, down(a, b), cfg.eval)).first;
        return it->second;
    };
    Approx rhs = Approx::exact(0);
    for (const auto& sigma : all_permutations(n)) {
        std::vector<int> js(n, 0);
        while (true) {
            Approx term = Approx::exact(sign(sigma));
            int parity = 0;
            for (int k = 0; k < n; ++k) {
                parity += js[k];
                term *= star_at(-js[k], f.p[sigma[k] - 1]);
                term *= strict_at(-js[k] - 1, -f.q[k]);
            }
            rhs += (parity % 2 ? -1.0 : 1.0) * term;
            int k = 0;
            while (k < n && js[k] == f.q[k]) js[k++] = 0;
            if (k == n) break;
            ++js[k];
        }
    }
    return finish(IdentityId::frobenius_expansion, to_string(lam), lhs, rhs, cfg, start);
}

namespace {

struct DiagonalFactors {
    std::vector<int> p, q;
    cplx z0;
    double y0;
    std::vector<cplx> zp, zm;
    std::vector<double> yp, ym;
};

DiagonalFactors diagonal_factors(const ContentSpec& spec, const Partition& lam) {
    auto f = frobenius(lam);
    DiagonalFactors d{f.p, f.q, z_of(spec, {0})[0], y_of(spec, {0})[0], {}, {}, {}, {}};
    int pmax = f.depth() ? f.p[0] : 0, qmax = f.depth() ? f.q[0] : 0;
    d.zp = z_of(spec, up(1, pmax));
    d.yp = y_of(spec, up(1, pmax));
    d.zm = z_of(spec, down(-1, -qmax));
    d.ym = y_of(spec, down(-1, -qmax));
    return d;
}

std::vector<double> shifted(const std::vector<double>& y, int len, double by) {
    std::vector<double> out(y.begin(), y.begin() + len);
    for (auto& v : out) v += by;
    return out;
}

std::vector<cplx> head(const std::vector<cplx>& z, int len) { return {z.begin(), z.begin() + len}; }

// A_k(m) and B_j(m) at diagonal value m
void diagonal_values(const DiagonalFactors& d, long m, const EvalConfig& cfg, std::vector<Approx>& A,
                     std::vector<Approx>& B) {
    int n = static_cast<int>(d.p.size());
    A.resize(n);
    B.resize(n);
    for (int k = 0; k < n; ++k) A[k] = ez_zeta_star_star(head(d.zp, d.p[k]), shifted(d.yp, d.p[k], double(m)), cfg);
    for (int j = 0; j < n; ++j) B[j] = ez_zeta(head(d.zm, d.q[j]), shifted(d.ym, d.q[j], double(m)), cfg);
}

}  // namespace

IdentityReport dirichlet_series_expr(const ContentSpec& spec0, const Partition& lam, const IdentityConfig& cfg) {
    auto start = Clock::now();
    ContentSpec spec = fill_shifts(spec0, SkewShape(lam));
    Approx lhs = direct_value(spec, SkewShape(lam), cfg.eval);
    auto d = diagonal_factors(spec, lam);
    int n = static_cast<int>(d.p.size());
    long outer = cfg.outer_cutoff;
    std::vector<std::vector<Approx>> F(n, std::vector<Approx>(n, Approx::exact(0)));
    std::vector<Approx> A, B;
    for (long m = 1; m <= outer; ++m) {
        diagonal_values(d, m, cfg.eval, A, B);
        cplx w = inv_power(double(m) + d.y0, d.z0);
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) F[k][j] += w * (A[k] * B[j]);
    }
    // m > outer: factors are dominated by their real-exponent values at shift outer + 1
    EvalConfig bound_cfg = cfg.eval;
    bound_cfg.allow_outside_domain = false;
    auto real_parts = [](const std::vector<cplx>& z) {
        std::vector<cplx> out;
        for (auto v : z) out.push_back(v.real());
        return out;
    };
    Approx w_tail = hurwitz_tail(d.z0.real(), double(outer + 1) + d.y0);
    double wt = std::abs(w_tail.value) + w_tail.err_bound;
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            if (d.p[k] == 0 && d.q[j] == 0) {
                // both factors are identically 1
                F[k][j] += hurwitz_tail(d.z0, double(outer + 1) + d.y0);
                continue;
            }
            Approx a = ez_zeta_star_star(real_parts(head(d.zp, d.p[k])), shifted(d.yp, d.p[k], double(outer + 1)), bound_cfg);
            Approx b = ez_zeta(real_parts(head(d.zm, d.q[j])), shifted(d.ym, d.q[j], double(outer + 1)), bound_cfg);
            F[k][j].err_bound += wt * (std::abs(a.value) + a.err_bound) * (std::abs(b.value) + b.err_bound);
        }
    Approx rhs = determinant(F);
    auto r = finish(IdentityId::dirichlet_series, to_string(lam), lhs, rhs, cfg, start);
    r.cutoffs["outer"] = outer;
    return r;
}

cplx dirichlet_factorized_sum(const ContentSpec& spec0, const Partition& lam, long outer, const EvalConfig& inner) {
    ContentSpec spec = fill_shifts(spec0, SkewShape(lam));
    auto d = diagonal_factors(spec, lam);
    int n = static_cast<int>(d.p.size());
    std::vector<std::vector<Approx>> F(n, std::vector<Approx>(n, Approx::exact(0)));
    std::vector<Approx> A, B;
    for (long m = 1; m <= outer; ++m) {
        diagonal_values(d, m, inner, A, B);
        cplx w = inv_power(double(m) + d.y0, d.z0);
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) F[k][j] += w * (A[k] * B[j]);
    }
    return determinant(F).value;
}

cplx dirichlet_literal_sum(const ContentSpec& spec0, const Partition& lam, long outer, const EvalConfig& inner) {
    ContentSpec spec = fill_shifts(spec0, SkewShape(lam));
    auto d = diagonal_factors(spec, lam);
    int n = static_cast<int>(d.p.size());
    std::vector<std::vector<Approx>> A(outer + 1), B(outer + 1);
    for (long m = 1; m <= outer; ++m) diagonal_values(d, m, inner, A[m], B[m]);
    auto perms = all_permutations(n);
    std::vector<long> idx(n, 1);
    cplx total = 0;
    while (true) {
        cplx w = 1;
        for (int j = 0; j < n; ++j) w *= inv_power(double(idx[j]) + d.y0, d.z0);
        cplx inner_sum = 0;
        for (const auto& sigma : perms) {
            cplx t = double(sign(sigma));
            for (int k = 0; k < n; ++k) t *= A[idx[sigma[k] - 1]][k].value;
            for (int j = 0; j < n; ++j) t *= B[idx[j]][j].value;
            inner_sum += t;
        }
        total += w * inner_sum;
        int k = 0;
        while (k < n && idx[k] == outer) idx[k++] = 1;
        if (k == n) break;
        ++idx[k];
    }
    return total;
}

IdentityReport derivative_identity(const ContentSpec& spec0, int p, int q, int ell, int order,
                                   const IdentityConfig& cfg) {
    auto start = Clock::now();
    if (ell < 0 || ell > p) throw std::invalid_argument("ell must lie in 0..p");
    if (order != 1 && order != 2) throw std::invalid_argument("order must be 1 or 2");
    SkewShape shape(hook(p, q));
    ContentSpec spec = fill_shifts(spec0, shape);
    SchurInstance inst = make_instance(shape, spec);
    std::vector<Cell> same;
    for (auto c : shape.cells())
        if (c.content() == ell) same.push_back(c);
    Approx lhs = Approx::exact(0);
    for (auto c : same) lhs += schur_eval(shift_exponent(inst, {c}, order), cfg.eval);
    if (order == 2)
        for (std::size_t a = 0; a < same.size(); ++a)
            for (std::size_t b = a + 1; b < same.size(); ++b)
                lhs += 2.0 * schur_eval(shift_exponent(inst, {same[a], same[b]}, 1), cfg.eval);
    ContentSpec raised = spec;
    raised.z[ell] += double(order);
    Approx rhs = Approx::exact(0);
    for (int j = 0; j <= q; ++j) {
        Approx t = chain_on(ChainKind::weak, raised, up(-j, p), cfg.eval) *
                   chain_on(ChainKind::strict, raised, down(-j - 1, -q), cfg.eval);
        rhs += (j % 2 ? -1.0 : 1.0) * t;
    }
    auto r = finish(IdentityId::derivative_identity, to_string(shape), lhs, rhs, cfg, start);
    r.note = "ell=" + std::to_string(ell) + " order=" + std::to_string(order);
    return r;
}

DerivativeCheck derivative_fd_check(const ContentSpec& spec0, int p, int q, int ell, double h, double tol,
                                    const IdentityConfig& cfg) {
    SkewShape shape(hook(p, q));
    ContentSpec spec = fill_shifts(spec0, shape);
    SchurInstance inst = make_instance(shape, spec);
    DerivativeCheck out;
    out.fd = d_dy(shape, spec, ell, h, cfg.eval);
    Approx sum = Approx::exact(0);
    for (auto c : shape.cells())
        if (c.content() == ell) sum += schur_eval(shift_exponent(inst, {c}, 1), cfg.eval);
    out.predicted = (-spec.z.at(ell)) * sum;
    out.gap = std::abs(out.fd.estimate.value - out.predicted.value);
    out.pass = out.gap <= tol;
    return out;
}

}  // namespace szeta
