#include "szeta/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace szeta {

std::pair<ExponentTableau, ShiftTableau> expand_content(const ContentSpec& spec, const SkewShape& shape) {
    ExponentTableau s(shape);
    ShiftTableau x(shape);
    for (std::size_t i = 0; i < s.size(); ++i) {
        int k = s.cells()[i].content();
        auto zi = spec.z.find(k);
        if (zi == spec.z.end()) throw DomainError("no exponent z_" + std::to_string(k) + " for content " + std::to_string(k));
        auto yi = spec.y.find(k);
        if (yi == spec.y.end()) throw DomainError("no shift y_" + std::to_string(k) + " for content " + std::to_string(k));
        if (yi->second < 0) throw DomainError("shift y_" + std::to_string(k) + " is negative");
        s.values()[i] = zi->second;
        x.values()[i] = yi->second;
    }
    return {s, x};
}

namespace {

std::optional<std::string> strict_weak_violation(const ExponentTableau& s, const std::vector<Cell>& strict,
                                                 const char* strict_name) {
    std::set<Cell> st(strict.begin(), strict.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        Cell c = s.cells()[i];
        double re = s.values()[i].real();
        std::ostringstream os;
        if (st.count(c)) {
            if (!(re > 1)) {
                os << "Re s" << to_string(c) << " = " << re << " must exceed 1 on " << strict_name;
                return os.str();
            }
        } else if (!(re >= 1)) {
            os << "Re s" << to_string(c) << " = " << re << " must be at least 1";
            return os.str();
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> w_lambda_violation(const ExponentTableau& s) {
    return strict_weak_violation(s, corners(s.shape()), "corner cells");
}

std::vector<Cell> h_cells(const Partition& lam) {
    std::set<int> ks;
    for (int i = 1; i <= lam.rows(); ++i) ks.insert(lam(i) - i);
    std::vector<Cell> out;
    for (auto c : lam.cells())
        if (ks.count(c.content())) out.push_back(c);
    return out;
}

std::optional<std::string> w_lambda_h_violation(const ExponentTableau& s) {
    if (!s.shape().is_straight()) throw std::invalid_argument("W_{lambda,H} is defined for straight shapes");
    return strict_weak_violation(s, h_cells(s.shape().outer()), "cells with content in {lambda_i - i}");
}

bool in_W_lambda(const ExponentTableau& s) { return !w_lambda_violation(s); }
bool in_W_lambda_H(const ExponentTableau& s) { return !w_lambda_h_violation(s); }

bool in_I_theta(const IntTableau& gamma) {
    for (int v : gamma.values())
        if (v < 1) return false;
    for (auto c : corners(gamma.shape()))
        if (gamma[c] < 2) return false;
    return true;
}

void for_each_ssyt(const SkewShape& shape, int max_entry, const std::function<void(const IntTableau&)>& fn) {
    IntTableau t(shape, 0);
    const auto& cells = t.cells();
    std::vector<int> room(cells.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        Cell c = cells[i];
        for (int r = c.row + 1; shape.contains({r, c.col}); ++r) ++room[i];
    }
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == cells.size()) {
            fn(t);
            return;
        }
        Cell c = cells[i];
        int lo = 1;
        if (shape.contains({c.row, c.col - 1})) lo = std::max(lo, t[{c.row, c.col - 1}]);
        if (shape.contains({c.row - 1, c.col})) lo = std::max(lo, t[{c.row - 1, c.col}] + 1);
        for (int v = lo; v <= max_entry - room[i]; ++v) {
            t.values()[i] = v;
            fill(i + 1);
        }
        t.values()[i] = 0;
    };
    fill(0);
}

std::vector<IntTableau> ssyt_list(const SkewShape& shape, int max_entry) {
    std::vector<IntTableau> out;
    for_each_ssyt(shape, max_entry, [&](const IntTableau& t) { out.push_back(t); });
    return out;
}

bool is_ssyt(const IntTableau& t) {
    const auto& sh = t.shape();
    for (auto c : t.cells()) {
        if (t[c] < 1) return false;
        if (sh.contains({c.row, c.col + 1}) && t[{c.row, c.col + 1}] < t[c]) return false;
        if (sh.contains({c.row + 1, c.col}) && t[{c.row + 1, c.col}] <= t[c]) return false;
    }
    return true;
}

std::map<int, std::vector<Cell>> diagonal_sets(const SkewShape& shape) {
    std::map<int, std::vector<Cell>> out;
    for (auto c : shape.cells()) out[c.content()].push_back(c);
    for (auto& [k, v] : out) std::sort(v.begin(), v.end());
    return out;
}

std::vector<DiagonalOrbit> diagonal_orbit(const SkewShape& shape) {
    auto sets = diagonal_sets(shape);
    std::map<int, std::vector<int>> perm;
    for (auto& [k, v] : sets) {
        perm[k].resize(v.size());
        std::iota(perm[k].begin(), perm[k].end(), 0);
    }
    std::vector<DiagonalOrbit> out;
    // mixed-radix walk: the lowest content advances fastest
    while (true) {
        out.push_back({shape, sets, perm});
        auto it = perm.begin();
        for (; it != perm.end(); ++it) {
            if (std::next_permutation(it->second.begin(), it->second.end())) break;
        }
        if (it == perm.end()) break;
    }
    return out;
}

DiagonalOrbit inverse(const DiagonalOrbit& o) {
    DiagonalOrbit inv = o;
    for (auto& [k, p] : inv.permutation) {
        const auto& src = o.permutation.at(k);
        for (std::size_t a = 0; a < src.size(); ++a) p[src[a]] = static_cast<int>(a);
    }
    return inv;
}

std::vector<Permutation> all_permutations(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int sign(const Permutation& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i] - 1];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i] - 1] = static_cast<int>(i) + 1;
    return out;
}

namespace {

void require_sigma(const IntTableau& t, const Permutation& sigma, int n) {
    if (!t.shape().is_straight()) throw std::invalid_argument("sigma-tableaux live on straight shapes");
    if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("sigma must permute 1..N");
    auto sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i + 1) throw std::invalid_argument("sigma must permute 1..N");
}

}  // namespace

bool is_sigma_tableau(const IntTableau& t, const Permutation& sigma) {
    const Partition& lam = t.shape().outer();
    int n = frobenius(lam).depth();
    require_sigma(t, sigma, n);
    Partition conj = conjugate(lam);
    for (int v : t.values())
        if (v < 1) return false;
    // (I) rows strictly right of the diagonal
    for (int i = 1; i <= lam.rows(); ++i)
        for (int j = i + 1; j < lam(i); ++j)
            if (t[{i, j}] > t[{i, j + 1}]) return false;
    // (II) columns on and below the diagonal
    for (int j = 1; j <= lam(1); ++j)
        for (int i = j; i < conj(j); ++i)
            if (t[{i, j}] >= t[{i + 1, j}]) return false;
    // (III)
    for (int i = 1; i <= n; ++i)
        if (i + 1 <= lam(i) && t[{sigma[i - 1], sigma[i - 1]}] > t[{i, i + 1}]) return false;
    return true;
}

std::vector<HookPiece> decompose_sigma_tableau(const IntTableau& t, const Permutation& sigma) {
    if (!is_sigma_tableau(t, sigma)) throw std::invalid_argument("not a sigma-tableau for the given sigma");
    auto f = frobenius(t.shape().outer());
    std::vector<HookPiece> out;
    for (int k = 1; k <= f.depth(); ++k) {
        int sk = sigma[k - 1];
        int p = f.p[k - 1], q = f.q[sk - 1];
        HookPiece piece{IntTableau(SkewShape(hook(p, q))), {}};
        auto put = [&](Cell h, Cell src) {
            piece.tableau[h] = t[src];
            piece.origin.emplace_back(h, src);
        };
        put({1, 1}, {sk, sk});
        for (int a = 1; a <= p; ++a) put({1, 1 + a}, {k, k + a});
        for (int b = 1; b <= q; ++b) put({1 + b, 1}, {sk + b, sk});
        out.push_back(std::move(piece));
    }
    return out;
}

}  // namespace szeta
