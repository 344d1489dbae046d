#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <vector>

namespace szeta {

using cplx = std::complex<double>;

// value with a rigorous bound on |value - true value|
struct Approx {
    cplx value{};
    double err_bound = 0;

    static Approx exact(cplx v) { return {v, 0}; }
    double real() const { return value.real(); }
    double imag() const { return value.imag(); }
    // [value - err, value + err] contains the true value
    bool contains(cplx v, double slack = 0) const { return std::abs(v - value) <= err_bound + slack; }
};

inline Approx operator+(const Approx& a, const Approx& b) { return {a.value + b.value, a.err_bound + b.err_bound}; }
inline Approx operator-(const Approx& a, const Approx& b) { return {a.value - b.value, a.err_bound + b.err_bound}; }
inline Approx operator-(const Approx& a) { return {-a.value, a.err_bound}; }
inline Approx operator*(const Approx& a, const Approx& b) {
    return {a.value * b.value,
            std::abs(a.value) * b.err_bound + std::abs(b.value) * a.err_bound + a.err_bound * b.err_bound};
}
inline Approx operator*(cplx c, const Approx& a) { return {c * a.value, std::abs(c) * a.err_bound}; }
inline Approx& operator+=(Approx& a, const Approx& b) { return a = a + b; }
inline Approx& operator*=(Approx& a, const Approx& b) { return a = a * b; }

enum class TailMode { bound_only, integral_correction };

struct EvalConfig {
    long cutoff = 2000;
    TailMode tail_mode = TailMode::integral_correction;
    // when set, the cutoff is doubled until err_bound falls below this (up to max_cutoff)
    std::optional<double> target_abs_err;
    long max_cutoff = 1L << 21;
    bool allow_outside_domain = false;
};

// Remark-style convention: depth 0 -> exactly 1, negative depth -> exactly 0
inline std::optional<Approx> depth_convention(int depth) {
    if (depth < 0) return Approx::exact(0);
    if (depth == 0) return Approx::exact(1);
    return std::nullopt;
}

// (m + y)^(-s) for m + y > 0
inline cplx inv_power(double base, cplx s) {
    if (s.imag() == 0) return std::pow(base, -s.real());
    return std::exp(-s * std::log(base));
}

// sum_{n >= 0} (X + n)^(-s) for Re s > 1, X > 0, with Euler-Maclaurin remainder bound
Approx hurwitz_tail(cplx s, double X);

// bound on sum_{M < n_1 <= ... <= n_k} prod (n_i + y)^(-sigma_i) given sigmas listed bottom-to-top;
// infinite when some suffix fails to converge
double weak_chain_tail_bound(const std::vector<double>& sigmas, double base);

// a / (a - 1) for a = sum_sigma - (count - 1), infinite if a <= 1
double suffix_factor(double sum_sigma, int count);

template <class F>
Approx refine_cutoff(const EvalConfig& cfg, F eval) {
    EvalConfig c = cfg;
    Approx r = eval(c);
    if (!cfg.target_abs_err) return r;
    while (r.err_bound > *cfg.target_abs_err && c.cutoff * 2 <= cfg.max_cutoff) {
        c.cutoff *= 2;
        r = eval(c);
    }
    return r;
}

}  // namespace szeta
