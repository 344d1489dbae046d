#include "szeta/rootzeta.hpp"

#include <sstream>

#include "szeta/ezzeta.hpp"
#include "szeta/tableaux.hpp"

namespace szeta {

RootExponents::RootExponents(int r) : r_(r), s_(static_cast<std::size_t>(r * (r + 1) / 2), cplx(0)) {
    if (r < 0) throw std::invalid_argument("rank must be nonnegative");
}

std::size_t RootExponents::slot(int i, int j) const {
    if (!(1 <= i && i < j && j <= r_ + 1)) throw std::out_of_range("no root (" + std::to_string(i) + "," +
                                                                   std::to_string(j) + ") in A_" + std::to_string(r_));
    int h = j - i;
    // roots of height < h come first: sum_{t<h} (r + 1 - t)
    std::size_t before = 0;
    for (int t = 1; t < h; ++t) before += static_cast<std::size_t>(r_ + 1 - t);
    return before + static_cast<std::size_t>(i - 1);
}

RootExponents RootExponents::from_flat(int r, const std::vector<cplx>& flat) {
    RootExponents e(r);
    if (flat.size() != e.s_.size())
        throw std::invalid_argument("A_" + std::to_string(r) + " needs " + std::to_string(e.s_.size()) + " exponents");
    e.s_ = flat;
    return e;
}

RootExponents RootExponents::from_pairs(int r, const std::map<std::pair<int, int>, cplx>& pairs) {
    RootExponents e(r);
    for (const auto& [ij, v] : pairs) e(ij.first, ij.second) = v;
    return e;
}

RootExponents RootExponents::first_row(const std::vector<cplx>& z) {
    RootExponents e(static_cast<int>(z.size()));
    for (std::size_t k = 0; k < z.size(); ++k) e(1, static_cast<int>(k) + 2) = z[k];
    return e;
}

std::vector<cplx> RootExponents::flat() const { return s_; }

bool RootExponents::reduced() const {
    for (int i = 2; i <= r_; ++i)
        for (int j = i + 1; j <= r_ + 1; ++j)
            if ((*this)(i, j) != cplx(0)) return false;
    return true;
}

namespace {

constexpr double kLiteralTermBudget = 2e7;

void check_root_domain(const RootExponents& e, int d, double x, bool primed, const EvalConfig& cfg) {
    if (e.rank() > kMaxRootRank)
        throw CapabilityError("A_" + std::to_string(e.rank()) + " exceeds the supported rank " +
                              std::to_string(kMaxRootRank));
    if (d < 0 || d > e.rank()) throw std::invalid_argument("d must lie in 0..r");
    if (x < 0 || (!primed && !(x > 0) && d > 0)) throw DomainError("shift must be positive");
    if (cfg.allow_outside_domain) return;
    for (int i = 1; i <= e.rank(); ++i)
        for (int j = i + 1; j <= e.rank() + 1; ++j) {
            double re = e(i, j).real();
            std::ostringstream os;
            if (re < 0) {
                os << "Re s(" << i << "," << j << ") = " << re << " is negative";
                throw DomainError(os.str());
            }
            if (i == 1 && !(re > 1)) {
                os << "Re s(1," << j << ") = " << re << " must exceed 1";
                throw DomainError(os.str());
            }
        }
}

// reduced case: sum over partial sums P_1 <= P_2 <= ... (strict steps where m_k >= 1)
Approx partial_sum_chain(const RootExponents& e, int d, double x, bool primed, long M, TailMode mode) {
    const int r = e.rank();
    std::vector<cplx> z(r);
    for (int k = 1; k <= r; ++k) z[k - 1] = e(1, k + 1);
    std::vector<cplx> g(r + 1, 0), old(r + 1, 0);
    for (long P = 0; P <= M; ++P) {
        old = g;
        g[0] = 1;
        for (int k = 1; k <= r; ++k) {
            bool weak = k <= d;
            cplx f = (P == 0 && primed && x == 0) ? cplx(1) : (x + double(P) > 0 ? inv_power(x + double(P), z[k - 1]) : cplx(0));
            g[k] += f * (weak ? g[k - 1] : old[k - 1]);
        }
    }
    Approx out{g[r], 0};
    for (int j = 0; j < r; ++j) {
        if (std::abs(g[j]) == 0) continue;
        double base = double(M + 1) + x;
        if (j == r - 1 && mode == TailMode::integral_correction) {
            out = out + Approx{g[j], 0} * hurwitz_tail(z[r - 1], base);
            continue;
        }
        std::vector<double> sig;
        for (int t = j; t < r; ++t) sig.push_back(z[t].real());
        out.err_bound += std::abs(g[j]) * weak_chain_tail_bound(sig, base);
    }
    return out;
}

double upper(const Approx& a) { return std::abs(a.value) + a.err_bound; }

// literal nested sum over the box [start, B]^r with the per-term omission predicate
Approx literal_box(const RootExponents& e, int d, double x, bool primed, long cutoff) {
    const int r = e.rank();
    long B = std::min<long>(cutoff, static_cast<long>(std::floor(std::pow(kLiteralTermBudget, 1.0 / r))));
    B = std::max<long>(B, 1);
    // pw[(i,j)][n] = (x + n)^(-s(i,j)) for segment sums n
    std::vector<std::vector<cplx>> pw;
    std::vector<std::pair<int, int>> roots;
    long maxsum = r * B;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r + 1; ++j) {
            roots.emplace_back(i, j);
            std::vector<cplx> t(maxsum + 1);
            for (long n = 0; n <= maxsum; ++n) t[n] = x + double(n) > 0 ? inv_power(x + double(n), e(i, j)) : cplx(0);
            pw.push_back(std::move(t));
        }
    std::vector<long> m(r + 1, 0), prefix(r + 2, 0);
    cplx total = 0;
    std::function<void(int)> rec = [&](int k) {
        if (k > r) {
            cplx term = 1;
            for (std::size_t a = 0; a < roots.size(); ++a) {
                auto [i, j] = roots[a];
                long seg = prefix[j] - prefix[i];
                // primed rule: drop the factor when i < j <= d+1 and m_i = ... = m_{j-1} = 0
                if (primed && seg == 0 && j <= d + 1) continue;
                term *= pw[a][seg];
            }
            total += term;
            return;
        }
        for (long v = k <= d ? 0 : 1; v <= B; ++v) {
            m[k] = v;
            prefix[k + 1] = prefix[k] + v;
            rec(k + 1);
        }
    };
    prefix[1] = 0;
    rec(1);

    // outside the box P_r > B; bound by the first-row chain with the other factors at most kappa
    double K = 1;
    for (int i = 2; i <= r; ++i)
        for (int j = i + 1; j <= r + 1; ++j)
            if (j - 1 <= d && x > 0 && x < 1) K *= std::pow(x, -e(i, j).real());
    double bound = K * upper(hurwitz_tail(e(1, r + 1).real(), double(B + 1) + x));
    for (int k = 1; k < r; ++k) {
        double sigma = e(1, k + 1).real();
        double phi = upper(hurwitz_tail(sigma, x + 1));
        if (k <= d) phi += x > 0 ? std::pow(x, -sigma) : 1.0;
        bound *= phi;
    }
    return {total, bound};
}

Approx root_eval(const RootExponents& e, int d, double x, bool primed, const EvalConfig& cfg, RootMethod method) {
    check_root_domain(e, d, x, primed, cfg);
    if (e.rank() == 0) return Approx::exact(1);
    if (method == RootMethod::automatic && e.reduced())
        return refine_cutoff(cfg, [&](const EvalConfig& c) { return partial_sum_chain(e, d, x, primed, c.cutoff, c.tail_mode); });
    return literal_box(e, d, x, primed, cfg.cutoff);
}

ReductionCheck compare(Approx lhs, Approx rhs, double slack) {
    ReductionCheck c{lhs, rhs, std::abs(lhs.value - rhs.value), lhs.err_bound + rhs.err_bound, false};
    c.pass = c.discrepancy <= c.budget + slack;
    return c;
}

}  // namespace

Approx zeta_Ar(const RootExponents& e, const EvalConfig& cfg, RootMethod method) {
    return root_eval(e, 0, 0, true, cfg, method);
}

Approx zeta_bullet(const RootExponents& e, int d, const EvalConfig& cfg, RootMethod method) {
    return root_eval(e, d, 0, true, cfg, method);
}

Approx zeta_H(const RootExponents& e, double x, const EvalConfig& cfg, RootMethod method) {
    if (!(x > 0)) throw DomainError("shift must be positive");
    return root_eval(e, 0, x, false, cfg, method);
}

Approx zeta_bullet_H(const RootExponents& e, int d, double x, const EvalConfig& cfg, RootMethod method) {
    if (!(x > 0)) throw DomainError("shift must be positive");
    return root_eval(e, d, x, false, cfg, method);
}

ReductionReport check_reductions(const std::vector<cplx>& z_plus, const std::vector<cplx>& z_minus, double m,
                                 const EvalConfig& cfg, double slack) {
    ReductionReport rep;
    int p = static_cast<int>(z_plus.size()), q = static_cast<int>(z_minus.size());
    rep.star_star = compare(zeta_bullet_H(RootExponents::first_row(z_plus), p, m, cfg),
                            ez_zeta_star_star(z_plus, std::vector<double>(p, m), cfg), slack);
    rep.strict = compare(zeta_H(RootExponents::first_row(z_minus), m, cfg),
                         ez_zeta(z_minus, std::vector<double>(q, m), cfg), slack);
    return rep;
}

}  // namespace szeta
