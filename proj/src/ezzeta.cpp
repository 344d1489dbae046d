#include "szeta/ezzeta.hpp"

#include <sstream>

namespace szeta {

namespace {

void check_domain(ChainKind kind, const std::vector<cplx>& s, const std::vector<double>& y, const EvalConfig& cfg) {
    if (s.size() != y.size()) throw std::invalid_argument("exponent and shift lists differ in length");
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] < 0) throw DomainError("shift y_" + std::to_string(i + 1) + " is negative");
        if (kind == ChainKind::weak_from_zero && !(y[i] > 0))
            throw DomainError("shift y_" + std::to_string(i + 1) + " must be positive when indices start at 0");
    }
    if (cfg.allow_outside_domain) return;
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool last = i + 1 == s.size();
        double re = s[i].real();
        if (last ? !(re > 1) : !(re >= 1)) {
            std::ostringstream os;
            os << "Re s_" << i + 1 << " = " << re << (last ? " must exceed 1" : " must be at least 1");
            throw DomainError(os.str());
        }
    }
}

Approx chain_once(ChainKind kind, const std::vector<cplx>& s, const std::vector<double>& y, long M, TailMode mode) {
    const int r = static_cast<int>(s.size());
    std::vector<cplx> g(r + 1, 0);
    g[0] = 1;
    const long m0 = kind == ChainKind::weak_from_zero ? 0 : 1;
    for (long m = m0; m <= M; ++m) {
        if (kind == ChainKind::strict) {
            for (int j = r; j >= 1; --j) g[j] += inv_power(double(m) + y[j - 1], s[j - 1]) * g[j - 1];
        } else {
            for (int j = 1; j <= r; ++j) g[j] += inv_power(double(m) + y[j - 1], s[j - 1]) * g[j - 1];
        }
    }
    Approx out{g[r], 0};
    for (int j = 0; j < r; ++j) {
        // elements j+1..r all exceed M
        if (std::abs(g[j]) == 0) continue;
        if (j == r - 1 && mode == TailMode::integral_correction) {
            Approx t = hurwitz_tail(s[r - 1], double(M + 1) + y[r - 1]);
            out = out + Approx{g[j], 0} * t;
            continue;
        }
        std::vector<double> sig;
        double ymin = y[j];
        for (int t = j; t < r; ++t) {
            sig.push_back(s[t].real());
            ymin = std::min(ymin, y[t]);
        }
        out.err_bound += std::abs(g[j]) * weak_chain_tail_bound(sig, double(M + 1) + ymin);
    }
    return out;
}

}  // namespace

Approx ez_chain(ChainKind kind, const std::vector<cplx>& s, const std::vector<double>& y, const EvalConfig& cfg) {
    check_domain(kind, s, y, cfg);
    if (s.empty()) return Approx::exact(1);
    return refine_cutoff(cfg, [&](const EvalConfig& c) { return chain_once(kind, s, y, c.cutoff, c.tail_mode); });
}

Approx ez_zeta(const std::vector<cplx>& s, const std::vector<double>& y, const EvalConfig& cfg) {
    return ez_chain(ChainKind::strict, s, y, cfg);
}

Approx ez_zeta_star(const std::vector<cplx>& s, const std::vector<double>& y, const EvalConfig& cfg) {
    return ez_chain(ChainKind::weak, s, y, cfg);
}

Approx ez_zeta_star_star(const std::vector<cplx>& s, const std::vector<double>& y, const EvalConfig& cfg) {
    return ez_chain(ChainKind::weak_from_zero, s, y, cfg);
}

Approx hurwitz(cplx s, double x, const EvalConfig& cfg) {
    if (!(x > 0)) throw DomainError("Hurwitz shift must be positive");
    return ez_zeta_star_star({s}, {x}, cfg);
}

}  // namespace szeta
