#include "szeta/schurzeta.hpp"

#include <map>

namespace szeta {

SchurInstance make_instance(const SkewShape& shape, const ContentSpec& spec) {
    auto [s, x] = expand_content(spec, shape);
    return {shape, std::move(s), std::move(x)};
}

SchurInstance make_instance(ExponentTableau s, ShiftTableau x) {
    if (!(s.shape() == x.shape())) throw std::invalid_argument("exponent and shift tableaux have different shapes");
    SkewShape sh = s.shape();
    return {sh, std::move(s), std::move(x)};
}

namespace {

void validate(const SchurInstance& inst) {
    if (!(inst.s.shape() == inst.shape) || !(inst.x.shape() == inst.shape))
        throw std::invalid_argument("tableau shapes do not match the instance shape");
    for (std::size_t i = 0; i < inst.x.size(); ++i)
        if (inst.x.values()[i] < 0) throw DomainError("shift at " + to_string(inst.x.cells()[i]) + " is negative");
    if (inst.allow_outside_domain) return;
    if (auto v = w_lambda_violation(inst.s)) throw DomainError("exponents outside W_lambda: " + *v);
}

auto numeric_weight(const SchurInstance& inst) {
    return [&inst](long m, std::vector<cplx>& w) {
        for (std::size_t c = 0; c < w.size(); ++c) w[c] = inv_power(double(m) + inst.x.values()[c], inst.s.values()[c]);
    };
}

Approx eval_once(const SchurInstance& inst, const StripGraph& g, long M, TailMode mode) {
    std::vector<cplx> v(g.states.size(), 0);
    v[g.initial] = 1;
    transfer_sweep<cplx>(g, 1, M, numeric_weight(inst), v);

    const auto& sv = inst.s.values();
    const auto& xv = inst.x.values();

    // completion factors over linear extensions of each remaining upper set
    std::vector<double> ext(g.states.size(), 0);
    std::vector<std::vector<int>> successors(g.states.size());
    for (std::size_t t = 0; t < g.states.size(); ++t)
        for (const auto& e : g.into[t])
            if (e.cells.size() == 1) successors[e.source].push_back(static_cast<int>(t));
    ext[g.final] = 1;
    for (int s : g.order) {
        if (s == g.final) continue;
        double sum_sigma = 0;
        auto miss = g.missing_cells(s);
        for (int c : miss) sum_sigma += sv[c].real();
        double acc = 0;
        for (int t : successors[s]) acc += ext[t];
        ext[s] = suffix_factor(sum_sigma, static_cast<int>(miss.size())) * acc;
    }

    Approx out{v[g.final], 0};
    for (std::size_t s = 0; s < g.states.size(); ++s) {
        if (static_cast<int>(s) == g.final || std::abs(v[s]) == 0) continue;
        auto miss = g.missing_cells(static_cast<int>(s));
        int k = static_cast<int>(miss.size());
        if (k == 1 && mode == TailMode::integral_correction) {
            out = out + Approx{v[s], 0} * hurwitz_tail(sv[miss[0]], double(M + 1) + xv[miss[0]]);
            continue;
        }
        double sum_sigma = 0, xmin = xv[miss[0]];
        bool negative = false;
        for (int c : miss) {
            sum_sigma += sv[c].real();
            xmin = std::min(xmin, xv[c]);
            negative |= sv[c].real() < 0;
        }
        double bound = negative ? std::numeric_limits<double>::infinity()
                                : ext[s] * std::pow(double(M + 1) + xmin, k - sum_sigma);
        out.err_bound += std::abs(v[s]) * bound;
    }
    return out;
}

}  // namespace

Approx schur_eval(const SchurInstance& inst, const EvalConfig& cfg) {
    validate(inst);
    if (inst.shape.size() == 0) return Approx::exact(1);
    StripGraph g = build_strip_graph(inst.shape);
    return refine_cutoff(cfg, [&](const EvalConfig& c) { return eval_once(inst, g, c.cutoff, c.tail_mode); });
}

cplx schur_truncated(const SchurInstance& inst, long n) {
    StripGraph g = build_strip_graph(inst.shape);
    return truncated_skew_sum<cplx>(g, n, numeric_weight(inst));
}

cplx schur_weight(const ExponentTableau& s, const ShiftTableau& t) {
    if (!(s.shape() == t.shape())) throw std::invalid_argument("tableau shapes differ");
    cplx w = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        double b = t.values()[i];
        if (!(b > 0)) throw DomainError("weight base at " + to_string(t.cells()[i]) + " is not positive");
        w *= inv_power(b, s.values()[i]);
    }
    return w;
}

SchurInstance shift_exponent(const SchurInstance& inst, const std::vector<Cell>& cells, int a) {
    SchurInstance out = inst;
    for (auto c : cells) {
        if (!inst.shape.contains(c)) throw std::out_of_range("cell " + to_string(c) + " is not in the shape");
        out.s[c] += double(a);
    }
    return out;
}

DerivativeEstimate d_dy(const SkewShape& shape, const ContentSpec& spec, int ell, double h, const EvalConfig& cfg,
                        bool richardson) {
    bool present = false;
    for (auto c : shape.cells()) present |= c.content() == ell;
    if (!present) return {Approx::exact(0), 0};
    if (!(h > 0)) throw std::invalid_argument("step must be positive");
    double y = spec.y.count(ell) ? spec.y.at(ell) : 0.0;
    double reach = richardson ? 2 * h : h;
    if (y - reach < 0) throw DomainError("finite-difference step would make shift y_" + std::to_string(ell) + " negative");
    auto at = [&](double dy) {
        ContentSpec sp = spec;
        sp.y[ell] = y + dy;
        return schur_eval(make_instance(shape, sp), cfg);
    };
    auto central = [&](double step) {
        Approx d = at(step) - at(-step);
        return (1.0 / (2 * step)) * d;
    };
    Approx d1 = central(h);
    if (!richardson) return {d1, 0};
    Approx d2 = central(2 * h);
    Approx ext = (4.0 / 3.0) * d1 - (1.0 / 3.0) * d2;
    return {ext, std::abs(ext.value - d1.value)};
}

}  // namespace szeta
