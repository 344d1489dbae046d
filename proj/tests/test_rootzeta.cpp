#include <doctest.h>

#include <numbers>

#include "szeta/ezzeta.hpp"
#include "szeta/rootzeta.hpp"

using namespace szeta;

namespace {

constexpr double pi = std::numbers::pi;

EvalConfig cfg(long cutoff = 2000) {
    EvalConfig c;
    c.cutoff = cutoff;
    return c;
}

}  // namespace

TEST_CASE("exponent layout") {
    RootExponents e = RootExponents::from_flat(3, {1, 2, 3, 4, 5, 6});
    CHECK(e(1, 2) == cplx(1));
    CHECK(e(2, 3) == cplx(2));
    CHECK(e(3, 4) == cplx(3));
    CHECK(e(1, 3) == cplx(4));
    CHECK(e(2, 4) == cplx(5));
    CHECK(e(1, 4) == cplx(6));
    CHECK_FALSE(e.reduced());
    auto f = RootExponents::first_row({2, 3});
    CHECK(f.rank() == 2);
    CHECK(f(1, 2) == cplx(2));
    CHECK(f(1, 3) == cplx(3));
    CHECK(f(2, 3) == cplx(0));
    CHECK(f.reduced());
    CHECK(RootExponents::from_pairs(2, {{{2, 3}, 5}})(2, 3) == cplx(5));
    CHECK_THROWS_AS(e(2, 2), std::out_of_range);
    CHECK_THROWS_AS(RootExponents::from_flat(2, {1, 2}), std::invalid_argument);
}

TEST_CASE("rank one is the Riemann zeta") {
    Approx v = zeta_Ar(RootExponents::from_flat(1, {2}), cfg());
    CHECK(std::abs(v.value - pi * pi / 6) <= v.err_bound + 1e-12);
    CHECK(v.err_bound < 1e-9);
    Approx b = zeta_bullet(RootExponents::first_row({2}), 1, cfg());
    CHECK(std::abs(b.value - (1 + pi * pi / 6)) <= b.err_bound + 1e-12);
    Approx h = zeta_bullet_H(RootExponents::first_row({2}), 1, 0.5, cfg());
    CHECK(std::abs(h.value - pi * pi / 2) <= h.err_bound + 1e-12);
}

TEST_CASE("A2 with all exponents 2 is pi^6/2835") {
    auto e = RootExponents::from_flat(2, {2, 2, 2});
    Approx v = zeta_Ar(e, cfg(4000));
    CHECK(std::abs(v.value - std::pow(pi, 6) / 2835) <= v.err_bound + 1e-12);
    CHECK(v.err_bound < 1e-3);
}

TEST_CASE("reduced configurations: chain and literal methods agree") {
    for (auto z : std::vector<std::vector<cplx>>{{2, 3}, {3, 2}, {2, 2, 3}, {cplx(2, 1), 3}})
        for (int d = 0; d <= static_cast<int>(z.size()); ++d)
            for (double x : {0.5, 1.0, 2.0}) {
                auto e = RootExponents::first_row(z);
                Approx a = zeta_bullet_H(e, d, x, cfg(), RootMethod::automatic);
                Approx b = zeta_bullet_H(e, d, x, cfg(), RootMethod::literal);
                CHECK(std::abs(a.value - b.value) <= a.err_bound + b.err_bound + 1e-12);
                CHECK(a.err_bound <= b.err_bound + 1e-12);
            }
}

TEST_CASE("reductions to Euler-Zagier values") {
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            for (double m : {1.0, 2.0, 3.0}) {
                std::vector<cplx> zp, zm;
                for (int k = 1; k <= p; ++k) zp.push_back(k % 2 ? 2.0 : 3.0);
                for (int k = 1; k <= q; ++k) zm.push_back(k % 2 ? 3.0 : 2.0);
                auto rep = check_reductions(zp, zm, m, cfg());
                CHECK(rep.pass());
                CHECK(rep.star_star.budget <= 1e-6);
                CHECK(rep.strict.budget <= 1e-6);
            }
    // the strict reduction against a direct literal evaluation of the root sum
    std::vector<cplx> z{3, 2};
    Approx lit = zeta_H(RootExponents::first_row(z), 1.0, cfg(), RootMethod::literal);
    Approx ez = ez_zeta(z, {1.0, 1.0}, cfg());
    CHECK(std::abs(lit.value - ez.value) <= lit.err_bound + ez.err_bound + 1e-12);
}

TEST_CASE("capability and domain errors") {
    CHECK_THROWS_AS(zeta_Ar(RootExponents(5), cfg()), CapabilityError);
    CHECK_THROWS_AS(zeta_Ar(RootExponents::from_flat(2, {1, 2, 2}), cfg()), DomainError);
    CHECK_THROWS_AS(zeta_Ar(RootExponents::from_flat(2, {2, -1, 2}), cfg()), DomainError);
    CHECK_THROWS_AS(zeta_H(RootExponents::first_row({2}), 0, cfg()), DomainError);
    CHECK(zeta_Ar(RootExponents(0), cfg()).value == cplx(1));
}
