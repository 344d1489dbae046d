#include "szeta/approx.hpp"

#include <numbers>

namespace szeta {

namespace {

// B_2, B_4, ..., B_20
constexpr double kBernoulli[] = {1.0 / 6,       -1.0 / 30,     1.0 / 42,          -1.0 / 30,
                                 5.0 / 66,      -691.0 / 2730, 7.0 / 6,           -3617.0 / 510,
                                 43867.0 / 798, -174611.0 / 330};
constexpr int kTerms = 10;

}  // namespace

Approx hurwitz_tail(cplx s, double X) {
    double sigma = s.real();
    if (!(sigma > 1) || !(X > 0)) return {0, std::numeric_limits<double>::infinity()};
    double threshold = std::max(20.0, 1.5 * std::abs(s) + 10);
    cplx direct = 0;
    double T = X;
    if (T < threshold) {
        long k = static_cast<long>(std::ceil(threshold - X));
        for (long n = 0; n < k; ++n) direct += inv_power(X + n, s);
        T = X + k;
    }
    cplx lead = std::exp((1.0 - s) * std::log(T)) / (s - 1.0);
    cplx tail = lead + 0.5 * inv_power(T, s);
    // poch = (s)_{2k-1}, fact = (2k)!
    cplx poch = s;
    double fact = 2;
    double logT = std::log(T);
    for (int k = 1; k <= kTerms; ++k) {
        tail += kBernoulli[k - 1] / fact * poch * std::exp(-(s + double(2 * k - 1)) * logT);
        poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
        fact *= double(2 * k + 1) * double(2 * k + 2);
    }
    // poch now holds (s)_{2J+1}; recover (s)_{2J}
    cplx poch2J = poch / (s + double(2 * kTerms));
    double twoJ = 2.0 * kTerms;
    double zeta2J = 1.0 + std::pow(2.0, -twoJ) * 2;  // crude upper bound on zeta(2J)
    double err = 2 * zeta2J / std::pow(2 * std::numbers::pi, twoJ) * std::abs(poch2J) *
                 std::exp((1 - sigma - twoJ) * logT) / (sigma + twoJ - 1);
    return {direct + tail, err};
}

double suffix_factor(double sum_sigma, int count) {
    double a = sum_sigma - (count - 1);
    if (!(a > 1)) return std::numeric_limits<double>::infinity();
    return a / (a - 1);
}

double weak_chain_tail_bound(const std::vector<double>& sigmas, double base) {
    for (double s : sigmas)
        if (s < 0) return std::numeric_limits<double>::infinity();
    double factor = 1, sum = 0;
    int k = static_cast<int>(sigmas.size());
    for (int i = k - 1; i >= 0; --i) {
        sum += sigmas[i];
        factor *= suffix_factor(sum, k - i);
    }
    if (!std::isfinite(factor)) return factor;
    return factor * std::pow(base, k - sum);
}

}  // namespace szeta
