#include <doctest.h>

#include <numbers>

#include "szeta/ezzeta.hpp"

using namespace szeta;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double zeta3 = 1.2020569031595942854;

EvalConfig cfg(long cutoff = 2000) {
    EvalConfig c;
    c.cutoff = cutoff;
    return c;
}

// naive double loop with the same index rules, truncated at n
cplx naive2(ChainKind kind, cplx a, cplx b, double ya, double yb, long n) {
    cplx total = 0;
    long lo = kind == ChainKind::weak_from_zero ? 0 : 1;
    for (long m1 = lo; m1 <= n; ++m1)
        for (long m2 = kind == ChainKind::strict ? m1 + 1 : m1; m2 <= n; ++m2)
            total += std::pow(m1 + ya, -a) * std::pow(m2 + yb, -b);
    return total;
}

void require_close(const Approx& a, cplx expected, double tol) {
    CHECK(a.err_bound <= tol);
    CHECK(std::abs(a.value - expected) <= a.err_bound + 1e-12);
}

}  // namespace

TEST_CASE("single zeta and Hurwitz values") {
    require_close(hurwitz(2, 1, cfg()), pi * pi / 6, 1e-10);
    require_close(hurwitz(4, 1, cfg()), std::pow(pi, 4) / 90, 1e-10);
    require_close(hurwitz(3, 1, cfg()), zeta3, 1e-10);
    for (double s : {2.0, 3.0}) {
        Approx half = hurwitz(s, 0.5, cfg());
        Approx one = hurwitz(s, 1, cfg());
        CHECK(std::abs(half.value - (std::pow(2.0, s) - 1) * one.value) <= half.err_bound + 3 * one.err_bound + 1e-12);
    }
    // shift identity zeta(s, x) = x^-s + zeta(s, x + 1)
    cplx s(2.5, 3);
    Approx a = hurwitz(s, 0.3, cfg()), b = hurwitz(s, 1.3, cfg());
    CHECK(std::abs(a.value - (std::pow(0.3, -s) + b.value)) <= a.err_bound + b.err_bound + 1e-12);
}

TEST_CASE("depth-two values and Euler's relations") {
    auto c = cfg(20000);
    // sum_{m<n} m^-1 n^-2 = zeta(3)
    require_close(ez_zeta({1, 2}, {0, 0}, c), zeta3, 1e-3);
    Approx z22 = ez_zeta({2, 2}, {0, 0}, c);
    require_close(z22, 3 * std::pow(pi, 4) / 90 / 4, 1e-8);
    require_close(ez_zeta({2, 2}, {0, 0}, cfg()), 3 * std::pow(pi, 4) / 90 / 4, 1e-6);
    Approx s22 = ez_zeta_star({2, 2}, {0, 0}, c);
    Approx z4 = hurwitz(4, 1, c);
    CHECK(std::abs(s22.value - (z22.value + z4.value)) <= s22.err_bound + z22.err_bound + z4.err_bound + 1e-12);
}

TEST_CASE("stuffle products with a common shift") {
    for (double y : {0.0, 0.5}) {
        for (auto [a, b] : std::vector<std::pair<cplx, cplx>>{{2, 3}, {cplx(2, 1), 3}, {2.5, cplx(3, -2)}}) {
            auto c = cfg();
            Approx za = ez_zeta({a}, {y}, c), zb = ez_zeta({b}, {y}, c);
            Approx ab = ez_zeta({a, b}, {y, y}, c), ba = ez_zeta({b, a}, {y, y}, c), sum = ez_zeta({a + b}, {y}, c);
            Approx lhs = za * zb;
            Approx rhs = ab + ba + sum;
            CHECK(std::abs(lhs.value - rhs.value) <= lhs.err_bound + rhs.err_bound + 1e-12);
            Approx sa = ez_zeta_star({a}, {y}, c), sb = ez_zeta_star({b}, {y}, c);
            Approx sab = ez_zeta_star({a, b}, {y, y}, c), sba = ez_zeta_star({b, a}, {y, y}, c);
            Approx lhs2 = sa * sb, rhs2 = sab + sba - sum;
            CHECK(std::abs(lhs2.value - rhs2.value) <= lhs2.err_bound + rhs2.err_bound + 1e-12);
        }
    }
}

TEST_CASE("star-star splits off the zero index") {
    cplx a = 2, b = cplx(3, 0.5);
    double ya = 0.4, yb = 0.7;
    auto c = cfg();
    Approx ss = ez_zeta_star_star({a, b}, {ya, yb}, c);
    Approx st = ez_zeta_star({a, b}, {ya, yb}, c);
    Approx tail = ez_zeta_star_star({b}, {yb}, c);
    cplx expected = st.value + std::pow(ya, -a) * tail.value;
    CHECK(std::abs(ss.value - expected) <= ss.err_bound + st.err_bound + std::abs(std::pow(ya, -a)) * tail.err_bound + 1e-12);
}

TEST_CASE("truncations bracket naive partial sums") {
    // value(cutoff n) minus its tail is the naive partial sum; compare via bound-only mode without tails
    for (auto kind : {ChainKind::strict, ChainKind::weak, ChainKind::weak_from_zero}) {
        cplx a = 2, b = 3;
        double ya = 0.3, yb = 0.5;
        long n = 300;
        cplx naive = naive2(kind, a, b, ya, yb, n);
        EvalConfig c = cfg(n);
        c.tail_mode = TailMode::bound_only;
        Approx v = ez_chain(kind, {a, b}, {ya, yb}, c);
        CHECK(std::abs(v.value - naive) <= 1e-12);
        Approx precise = ez_chain(kind, {a, b}, {ya, yb}, cfg(50000));
        CHECK(v.contains(precise.value, precise.err_bound + 1e-12));
    }
}

TEST_CASE("error bounds are rigorous across cutoffs") {
    std::vector<std::vector<cplx>> lists{{2}, {1, 2}, {2, 1, 2}, {cplx(1.5, 4), cplx(2, -1)}, {1, 1, 3}};
    for (const auto& s : lists)
        for (auto mode : {TailMode::bound_only, TailMode::integral_correction}) {
            std::vector<double> y(s.size(), 0.25);
            EvalConfig lo = cfg(50), hi = cfg(40000);
            lo.tail_mode = hi.tail_mode = mode;
            for (auto kind : {ChainKind::strict, ChainKind::weak}) {
                Approx a = ez_chain(kind, s, y, lo), b = ez_chain(kind, s, y, hi);
                CHECK(std::abs(a.value - b.value) <= a.err_bound + b.err_bound + 1e-12);
                CHECK(b.err_bound <= a.err_bound);
            }
        }
}

TEST_CASE("target accuracy doubles the cutoff") {
    EvalConfig c = cfg(100);
    c.target_abs_err = 1e-5;
    Approx v = ez_zeta_star({1, 2}, {0, 0}, c);
    CHECK(v.err_bound <= 1e-5);
    CHECK(ez_zeta_star({1, 2}, {0, 0}, cfg(100)).err_bound > 1e-5);
    CHECK(std::abs(v.value - 2 * zeta3) <= v.err_bound + 1e-12);
}

TEST_CASE("conventions and domain errors") {
    CHECK(ez_zeta({}, {}, cfg()).value == cplx(1));
    CHECK(depth_convention(0)->value == cplx(1));
    CHECK(depth_convention(-2)->value == cplx(0));
    CHECK_FALSE(depth_convention(3));
    CHECK_THROWS_AS(ez_zeta({2, 1}, {0, 0}, cfg()), DomainError);
    CHECK_THROWS_AS(ez_zeta({0.5, 2}, {0, 0}, cfg()), DomainError);
    CHECK_THROWS_AS(ez_zeta({2}, {-1}, cfg()), DomainError);
    CHECK_THROWS_AS(ez_zeta_star_star({2}, {0}, cfg()), DomainError);
    CHECK_THROWS_AS(hurwitz(2, 0, cfg()), DomainError);
    CHECK_THROWS_AS(ez_zeta({2, 2}, {0}, cfg()), std::invalid_argument);
    EvalConfig loose = cfg();
    loose.allow_outside_domain = true;
    CHECK_NOTHROW(ez_zeta({0.5, 3}, {0, 0}, loose));
}
