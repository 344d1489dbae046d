#include <doctest.h>

#include <set>

#include "szeta/tableaux.hpp"

using namespace szeta;

namespace {

// all fillings with entries in 1..m, filtered by the row/column rules written out directly
long brute_ssyt_count(const SkewShape& shape, int m) {
    auto cells = shape.cells();
    std::vector<int> v(cells.size(), 1);
    long count = 0;
    auto at = [&](Cell c) -> int {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i] == c) return v[i];
        return -1;
    };
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < cells.size() && ok; ++i) {
            Cell c = cells[i];
            int right = at({c.row, c.col + 1}), below = at({c.row + 1, c.col});
            if (right != -1 && right < v[i]) ok = false;
            if (below != -1 && below <= v[i]) ok = false;
        }
        if (ok) ++count;
        std::size_t k = 0;
        while (k < v.size() && v[k] == m) v[k++] = 1;
        if (k == v.size()) break;
        ++v[k];
    }
    return count;
}

// hook-content formula for straight shapes: prod (m + c) / hook
long hook_content_count(const Partition& lam, int m) {
    Partition conj = conjugate(lam);
    double num = 1, den = 1;
    for (auto c : lam.cells()) {
        num *= m + c.content();
        den *= (lam(c.row) - c.col) + (conj(c.col) - c.row) + 1;
    }
    return std::lround(num / den);
}

template <class F>
void for_each_filling(const SkewShape& shape, int m, F f) {
    IntTableau t(shape, 1);
    while (true) {
        f(t);
        std::size_t k = 0;
        auto& v = t.values();
        while (k < v.size() && v[k] == m) v[k++] = 1;
        if (k == v.size()) break;
        ++v[k];
    }
}

}  // namespace

TEST_CASE("SSYT counts match brute force and the hook-content formula up to 6 cells") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (int m = 1; m <= (n <= 4 ? 5 : 4); ++m) {
                long c = static_cast<long>(ssyt_list(SkewShape(lam), m).size());
                CHECK(c == brute_ssyt_count(SkewShape(lam), m));
                CHECK(c == hook_content_count(lam, m));
            }
}

TEST_CASE("skew SSYT counts match brute force") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& outer : partitions_of(n))
            for (int k = 1; k < n; ++k)
                for (const auto& inner : partitions_of(k)) {
                    if (!outer.contains(inner)) continue;
                    SkewShape s(outer, inner);
                    if (s.size() > 5) continue;
                    for (int m = 1; m <= 4; ++m)
                        CHECK(static_cast<long>(ssyt_list(s, m).size()) == brute_ssyt_count(s, m));
                }
}

TEST_CASE("SSYT stream is valid and lexicographic in row-major reading") {
    SkewShape s(Partition{3, 2, 1}, Partition{1});
    auto all = ssyt_list(s, 4);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(is_ssyt(all[i]));
        if (i) CHECK(all[i - 1].values() < all[i].values());
    }
    auto again = ssyt_list(s, 4);
    CHECK(all == again);
}

TEST_CASE("is_ssyt") {
    IntTableau t(SkewShape(Partition{2, 1}), std::vector<int>{1, 1, 2});
    CHECK(is_ssyt(t));
    IntTableau bad(SkewShape(Partition{2, 1}), std::vector<int>{1, 1, 1});
    CHECK_FALSE(is_ssyt(bad));
    IntTableau bad_row(SkewShape(Partition{2}), std::vector<int>{2, 1});
    CHECK_FALSE(is_ssyt(bad_row));
}

TEST_CASE("content expansion") {
    ContentSpec spec;
    spec.z = {{-1, 3}, {0, 2.5}, {1, 2}};
    spec.y = {{-1, 0}, {0, 0.3}, {1, 0}};
    auto [s, x] = expand_content(spec, SkewShape(Partition{2, 2}));
    CHECK(s[{1, 1}] == cplx(2.5));
    CHECK(s[{2, 2}] == cplx(2.5));
    CHECK(s[{2, 1}] == cplx(3));
    CHECK(x[{2, 2}] == 0.3);
    CHECK(is_diagonal_constant(s));
    ContentSpec missing;
    missing.z = {{0, 2}, {1, 2}};
    missing.y = {{0, 0}, {1, 0}};
    try {
        expand_content(missing, SkewShape(Partition{2, 2}));
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("-1") != std::string::npos);
    }
    spec.y[0] = -0.5;
    CHECK_THROWS_AS(expand_content(spec, SkewShape(Partition{2, 2})), DomainError);
}

TEST_CASE("domain conditions") {
    SkewShape sh(Partition{2, 2});
    ExponentTableau s(sh, cplx(1));
    CHECK_FALSE(in_W_lambda(s));
    s[{2, 2}] = cplx(1.5, 7);
    CHECK(in_W_lambda(s));
    s[{1, 1}] = 0.9;
    auto why = w_lambda_violation(s);
    REQUIRE(why);
    CHECK(why->find("(1,1)") != std::string::npos);

    // H cells of (3,2): contents lambda_i - i = 2, 0
    Partition lam{3, 2};
    CHECK(h_cells(lam) == std::vector<Cell>{{1, 1}, {1, 3}, {2, 2}});
    ExponentTableau t(SkewShape(lam), cplx(1));
    for (auto c : h_cells(lam)) t[c] = 2;
    CHECK(in_W_lambda_H(t));
    t[{1, 1}] = 1;
    CHECK_FALSE(in_W_lambda_H(t));

    CHECK(in_I_theta(IntTableau(SkewShape(Partition{1}), std::vector<int>{2})));
    CHECK(in_I_theta(IntTableau(SkewShape(Partition{2}), std::vector<int>{1, 2})));
    CHECK_FALSE(in_I_theta(IntTableau(SkewShape(Partition{2}), std::vector<int>{2, 1})));
    CHECK(in_I_theta(IntTableau(SkewShape(Partition{2, 2}), std::vector<int>{1, 2, 2, 3})));
}

TEST_CASE("diagonal orbit of (4,3) lists the four permuted tableaux") {
    SkewShape sh(Partition{4, 3});
    auto orbit = diagonal_orbit(sh);
    REQUIRE(orbit.size() == 4);
    CHECK(orbit.front().diagonal_sets.at(0) == std::vector<Cell>{{1, 1}, {2, 2}});
    CHECK(orbit.front().diagonal_sets.at(1) == std::vector<Cell>{{1, 2}, {2, 3}});
    // a b c d / e f g  encoded as 1..7
    IntTableau t(sh, std::vector<int>{1, 2, 3, 4, 5, 6, 7});
    std::vector<std::vector<int>> expected{
        {1, 2, 3, 4, 5, 6, 7},  // a b c d / e f g
        {6, 2, 3, 4, 5, 1, 7},  // f b c d / e a g
        {1, 7, 3, 4, 5, 6, 2},  // a g c d / e f b
        {6, 7, 3, 4, 5, 1, 2},  // f g c d / e a b
    };
    for (std::size_t i = 0; i < 4; ++i) CHECK(apply_orbit(orbit[i], t).values() == expected[i]);
    CHECK(diagonal_orbit(SkewShape(Partition{5})).size() == 1);
}

TEST_CASE("orbit action preserves diagonal multisets and inverts") {
    SkewShape sh(Partition{3, 3, 2});
    IntTableau t(sh);
    for (std::size_t i = 0; i < t.size(); ++i) t.values()[i] = static_cast<int>(i) * 7 % 11;
    auto orbit = diagonal_orbit(sh);
    CHECK(orbit.size() == 8);
    for (const auto& o : orbit) {
        auto u = apply_orbit(o, t);
        for (const auto& [k, cells] : o.diagonal_sets) {
            std::multiset<int> a, b;
            for (auto c : cells) {
                a.insert(t[c]);
                b.insert(u[c]);
            }
            CHECK(a == b);
        }
        CHECK(apply_orbit(inverse(o), u) == t);
    }
}

TEST_CASE("permutations") {
    auto all = all_permutations(4);
    CHECK(all.size() == 24);
    int total = 0;
    for (const auto& p : all) {
        total += sign(p);
        CHECK(compose(p, inverse(p)) == Permutation{1, 2, 3, 4});
        for (const auto& q : all) CHECK(sign(compose(p, q)) == sign(p) * sign(q));
    }
    CHECK(total == 0);
    CHECK(sign(Permutation{2, 1, 3}) == -1);
    CHECK(compose(Permutation{2, 3, 1}, Permutation{2, 1, 3}) == Permutation{3, 2, 1});
}

TEST_CASE("sigma-tableaux versus SSYT, exhaustive to 6 cells and entries <= 5") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            SkewShape sh(lam);
            auto cells = sh.cells();
            std::multiset<Cell> all_cells(cells.begin(), cells.end());
            int N = frobenius(lam).depth();
            int m = n <= 5 ? 5 : 4;
            auto perms = all_permutations(N);
            for_each_filling(sh, m, [&](const IntTableau& t) {
                bool ssyt = is_ssyt(t);
                for (const auto& sigma : perms) {
                    bool identity = sigma == perms.front();
                    bool st = is_sigma_tableau(t, sigma);
                    if (ssyt) CHECK(st == identity);
                    if (!st) continue;
                    auto pieces = decompose_sigma_tableau(t, sigma);
                    REQUIRE(static_cast<int>(pieces.size()) == N);
                    std::multiset<Cell> used;
                    for (const auto& piece : pieces) {
                        CHECK(is_ssyt(piece.tableau));
                        for (auto [h, src] : piece.origin) used.insert(src);
                    }
                    CHECK(used == all_cells);
                }
            });
        }
}

TEST_CASE("sigma-tableau decomposition of a (2,2) SSYT") {
    IntTableau t(SkewShape(Partition{2, 2}), std::vector<int>{1, 2, 3, 4});
    auto pieces = decompose_sigma_tableau(t, Permutation{1, 2});
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0].tableau.shape() == SkewShape(Partition{2, 1}));
    CHECK(pieces[0].tableau.values() == std::vector<int>{1, 2, 3});
    CHECK(pieces[1].tableau.values() == std::vector<int>{4});
    IntTableau hook_t(SkewShape(Partition{3, 1}), std::vector<int>{1, 1, 2, 3});
    auto one = decompose_sigma_tableau(hook_t, Permutation{1});
    CHECK(one[0].tableau == hook_t);
    CHECK(is_sigma_tableau(IntTableau(SkewShape(Partition{2, 1}), std::vector<int>{1, 1, 2}), Permutation{1}));
}
