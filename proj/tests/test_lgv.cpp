#include <doctest.h>

#include <set>

#include "szeta/lgv.hpp"

using namespace szeta;

namespace {

LatticePath path(Point start, const std::string& moves) {
    LatticePath p{start, {}};
    for (char m : moves) p.steps.push_back(m == 'R' ? Step::Right : m == 'U' ? Step::Up : Step::NorthEast);
    return p;
}

Pattern make_pattern(const Partition& lam, int n, std::vector<LatticePath> paths) {
    Pattern L{PathKind::H, n, std::move(paths), {}};
    auto ends = end_points(lam, n, PathKind::H);
    for (const auto& p : L.paths)
        for (std::size_t k = 0; k < ends.size(); ++k)
            if (p.end() == ends[k]) L.type.push_back(static_cast<int>(k) + 1);
    return L;
}

struct Data {
    IntTableau s;
    RationalTableau x;
};

Data content_data(const Partition& lam, int variant) {
    SkewShape sh(lam);
    Data d{IntTableau(sh), RationalTableau(sh)};
    for (auto c : sh.cells()) {
        bool even = (c.content() + variant) % 2 == 0;
        d.s[c] = even ? 2 : 3;
        d.x[c] = even ? Rational(0) : Rational(1, 2);
    }
    return d;
}

}  // namespace

TEST_CASE("end points for (4,3,3,2)") {
    Partition lam{4, 3, 3, 2};
    CHECK(start_points(lam, 4, PathKind::H) == std::vector<Point>{{4, 1}, {3, 1}, {2, 1}, {1, 1}});
    CHECK(end_points(lam, 4, PathKind::H) == std::vector<Point>{{8, 4}, {6, 4}, {5, 4}, {3, 4}});
    // conjugate (4,4,3,1), E ends on row N+1
    CHECK(end_points(lam, 4, PathKind::E) == std::vector<Point>{{8, 5}, {7, 5}, {5, 5}, {2, 5}});
}

TEST_CASE("the worked (4,3,3,2) H-pattern and its weights") {
    Partition lam{4, 3, 3, 2};
    Pattern L = make_pattern(lam, 4,
                             {path({4, 1}, "RRUUU"), path({3, 1}, "UUU"), path({2, 1}, "URRRRRURU"),
                              path({1, 1}, "UURRRRU")});
    CHECK(L.type == Permutation{2, 4, 1, 3});
    CHECK(sign(L.type) == -1);
    CHECK_FALSE(is_nonintersecting(L));
    RimDecomposition expected{RimKind::H,
                              {{{1, 1}, {1, 2}},
                               {},
                               {{3, 1}, {2, 1}, {2, 2}, {2, 3}, {1, 3}, {1, 4}},
                               {{4, 1}, {4, 2}, {3, 2}, {3, 3}}}};
    CHECK(rim_for_type(lam, PathKind::H, L.type) == expected);
    CHECK(rim_type(lam, expected) == L.type);
    std::vector<std::pair<Cell, int>> edges{{{1, 1}, 1}, {{1, 2}, 1}, {{3, 1}, 2}, {{2, 1}, 2}, {{2, 2}, 2},
                                            {{2, 3}, 2}, {{1, 3}, 2}, {{1, 4}, 3}, {{4, 1}, 3}, {{4, 2}, 3},
                                            {{3, 2}, 3}, {{3, 3}, 3}};
    CHECK(weighted_edges(lam, L) == edges);
}

TEST_CASE("rim types are a bijection onto the realizable permutations") {
    for (const auto& lam : {Partition{4, 3, 3, 2}, Partition{3, 2}, Partition{2, 2, 1}}) {
        auto H = h_rim_decompositions(lam);
        std::set<Permutation> types;
        for (const auto& d : H) {
            auto t = rim_type(lam, d);
            types.insert(t);
            CHECK(rim_for_type(lam, PathKind::H, t) == d);
        }
        CHECK(types.size() == H.size());
        for (const auto& d : e_rim_decompositions(lam)) CHECK(rim_for_type(lam, PathKind::E, rim_type(lam, d)) == d);
    }
    CHECK_THROWS_AS(rim_for_type(Partition{1, 1, 1}, PathKind::H, Permutation{3, 2, 1}), std::invalid_argument);
}

TEST_CASE("tail swap of the (3,2) pair") {
    Partition lam{3, 2};
    Pattern L = make_pattern(lam, 4, {path({2, 1}, "URUU"), path({1, 1}, "UURRRRU")});
    Pattern Lbar = make_pattern(lam, 4, {path({2, 1}, "URURRU"), path({1, 1}, "UURRU")});
    CHECK(L.type == Permutation{2, 1});
    CHECK(Lbar.type == Permutation{1, 2});
    CHECK_FALSE(is_nonintersecting(L));
    CHECK_FALSE(is_nonintersecting(Lbar));
    Pattern swapped = tail_swap(L);
    CHECK(swapped == Lbar);
    CHECK(swapped.type == Lbar.type);
    CHECK(tail_swap(swapped) == L);
    // both carry the edge rows of a@2 and b,c,d,e@3
    auto wl = weighted_edges(lam, L), wb = weighted_edges(lam, Lbar);
    CHECK(wl == std::vector<std::pair<Cell, int>>{{{1, 1}, 2}, {{2, 1}, 3}, {{2, 2}, 3}, {{1, 2}, 3}, {{1, 3}, 3}});
    CHECK(wb == std::vector<std::pair<Cell, int>>{{{1, 1}, 2}, {{1, 2}, 3}, {{1, 3}, 3}, {{2, 1}, 3}, {{2, 2}, 3}});
}

TEST_CASE("H-model: signed sums cancel exactly and equal the truncated sum") {
    for (const auto& lam : {Partition{1, 1}, Partition{2, 1}, Partition{2, 2}, Partition{3, 1}, Partition{3, 2}})
        for (int n = 1; n <= 4; ++n)
            for (int variant = 0; variant < 2; ++variant) {
                auto d = content_data(lam, variant);
                auto rep = verify_cancellation(lam, n, d.s, d.x);
                CHECK(rep.pass());
                CHECK(rep.witness_ok);
                CHECK(rep.sums.nonintersecting_total == schur_truncated_exact(d.s, d.x, n));
                CHECK(rep.sums.nonintersecting == static_cast<long>(ssyt_list(SkewShape(lam), n).size()));
            }
}

TEST_CASE("E-model: nonintersecting patterns reproduce the truncated sum") {
    for (const auto& lam : {Partition{1, 1}, Partition{2, 1}, Partition{2, 2}, Partition{3, 1}, Partition{2, 1, 1}})
        for (int n = 1; n <= 4; ++n) {
            auto d = content_data(lam, 1);
            auto sums = signed_pattern_sums(lam, n, d.s, d.x, PathKind::E);
            CHECK(sums.nonintersecting_types_identity);
            CHECK(sums.nonintersecting_total == schur_truncated_exact(d.s, d.x, n));
            CHECK(sums.intersecting_signed_total == 0);
            CHECK(truncated_schur_via_paths(lam, n, d.s, d.x, PathKind::E) == sums.nonintersecting_total);
        }
}

TEST_CASE("non-diagonal exponents break cancellation; the diagonal orbit restores it") {
    Partition lam{2, 2};
    SkewShape sh(lam);
    IntTableau s(sh, 2);
    s[{2, 2}] = 3;
    RationalTableau x(sh, Rational(0));
    auto sums = signed_pattern_sums(lam, 3, s, x);
    CHECK(sums.intersecting_signed_total == Rational(-757, 3456));
    CHECK(orbit_intersecting_total(lam, 3, s, x) == 0);
    CHECK_THROWS_AS(verify_cancellation(lam, 3, s, x), std::invalid_argument);

    Partition l32{3, 2};
    IntTableau a(SkewShape(l32), std::vector<int>{2, 3, 2, 3, 4});
    RationalTableau xa{SkewShape(l32)};
    std::vector<Rational> xs{Rational(1, 2), 0, Rational(1, 3), Rational(1, 4), Rational(1, 5)};
    for (std::size_t i = 0; i < xs.size(); ++i) xa.values()[i] = xs[i];
    CHECK(signed_pattern_sums(l32, 3, a, xa).intersecting_signed_total != 0);
    CHECK(orbit_intersecting_total(l32, 3, a, xa) == 0);
}

TEST_CASE("pattern counts and rendering") {
    auto one = enumerate_patterns(Partition{1}, 1, PathKind::H);
    REQUIRE(one.size() == 1);
    CHECK(one[0].type == Permutation{1});
    std::map<Permutation, long> by_type;
    for (const auto& L : enumerate_patterns(Partition{3, 2}, 4, PathKind::H)) ++by_type[L.type];
    CHECK(by_type.size() == 2);
    CHECK(by_type.count(Permutation{1, 2}));
    CHECK(by_type.count(Permutation{2, 1}));
    Partition lam{3, 2};
    Pattern L = make_pattern(lam, 4, {path({2, 1}, "URUU"), path({1, 1}, "UURRRRU")});
    std::string a = render_pattern(L), b = render_pattern(L);
    CHECK(a == b);
    CHECK(a.find('*') != std::string::npos);
    CHECK(to_string(Permutation{2, 1}) == "[2,1]");
}
