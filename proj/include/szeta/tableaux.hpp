#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "szeta/shapes.hpp"

namespace szeta {

using cplx = std::complex<double>;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(SkewShape shape, T fill = T{}) : shape_(std::move(shape)) {
        cells_ = shape_.cells();
        values_.assign(cells_.size(), fill);
        build_offsets();
    }
    Tableau(SkewShape shape, std::vector<T> values) : Tableau(std::move(shape)) {
        if (values.size() != cells_.size()) throw std::invalid_argument("tableau value count does not match shape");
        values_ = std::move(values);
    }

    const SkewShape& shape() const { return shape_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<T>& values() const { return values_; }
    std::vector<T>& values() { return values_; }
    std::size_t size() const { return cells_.size(); }

    int index(Cell c) const {
        if (!shape_.contains(c)) return -1;
        return offsets_[c.row - 1] + (c.col - shape_.inner()(c.row) - 1);
    }
    bool contains(Cell c) const { return shape_.contains(c); }

    const T& operator[](Cell c) const { return values_[checked(c)]; }
    T& operator[](Cell c) { return values_[checked(c)]; }

    bool operator==(const Tableau& o) const { return shape_ == o.shape_ && values_ == o.values_; }

    template <class U, class F>
    Tableau<U> map(F f) const {
        Tableau<U> out(shape_);
        for (std::size_t i = 0; i < values_.size(); ++i) out.values()[i] = f(values_[i]);
        return out;
    }

private:
    std::size_t checked(Cell c) const {
        int i = index(c);
        if (i < 0) throw std::out_of_range("cell " + to_string(c) + " is not in the shape");
        return static_cast<std::size_t>(i);
    }
    void build_offsets() {
        offsets_.assign(shape_.outer().rows(), 0);
        int acc = 0;
        for (int r = 1; r <= shape_.outer().rows(); ++r) {
            offsets_[r - 1] = acc;
            acc += shape_.outer()(r) - shape_.inner()(r);
        }
    }

    SkewShape shape_;
    std::vector<Cell> cells_;
    std::vector<T> values_;
    std::vector<int> offsets_;
};

using ExponentTableau = Tableau<cplx>;
using ShiftTableau = Tableau<double>;
using IntTableau = Tableau<int>;

struct ContentSpec {
    std::map<int, cplx> z;
    std::map<int, double> y;
};

std::pair<ExponentTableau, ShiftTableau> expand_content(const ContentSpec& spec, const SkewShape& shape);

template <class T>
bool is_diagonal_constant(const Tableau<T>& t) {
    std::map<int, T> seen;
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto [it, fresh] = seen.emplace(t.cells()[i].content(), t.values()[i]);
        if (!fresh && !(it->second == t.values()[i])) return false;
    }
    return true;
}

// nullopt when the condition holds, otherwise a description of the first violation
std::optional<std::string> w_lambda_violation(const ExponentTableau& s);
std::optional<std::string> w_lambda_h_violation(const ExponentTableau& s);
bool in_W_lambda(const ExponentTableau& s);
bool in_W_lambda_H(const ExponentTableau& s);
bool in_I_theta(const IntTableau& gamma);
// cells whose content lies in {lambda_i - i}
std::vector<Cell> h_cells(const Partition& lam);

void for_each_ssyt(const SkewShape& shape, int max_entry, const std::function<void(const IntTableau&)>& fn);
std::vector<IntTableau> ssyt_list(const SkewShape& shape, int max_entry);
bool is_ssyt(const IntTableau& t);

struct DiagonalOrbit {
    SkewShape shape;
    std::map<int, std::vector<Cell>> diagonal_sets;
    // per content: image index for each position in the diagonal set
    std::map<int, std::vector<int>> permutation;
};

std::map<int, std::vector<Cell>> diagonal_sets(const SkewShape& shape);
std::vector<DiagonalOrbit> diagonal_orbit(const SkewShape& shape);

template <class T>
Tableau<T> apply_orbit(const DiagonalOrbit& o, const Tableau<T>& t) {
    Tableau<T> out = t;
    for (const auto& [k, cells] : o.diagonal_sets) {
        const auto& perm = o.permutation.at(k);
        for (std::size_t a = 0; a < cells.size(); ++a) out[cells[a]] = t[cells[perm[a]]];
    }
    return out;
}

DiagonalOrbit inverse(const DiagonalOrbit& o);

using Permutation = std::vector<int>;  // 1-indexed images: sigma(i) = perm[i-1]

std::vector<Permutation> all_permutations(int n);
int sign(const Permutation& p);
Permutation compose(const Permutation& a, const Permutation& b);  // (a o b)(i) = a(b(i))
Permutation inverse(const Permutation& p);

bool is_sigma_tableau(const IntTableau& t, const Permutation& sigma);

struct HookPiece {
    IntTableau tableau;
    // hook cell -> source cell of the full tableau
    std::vector<std::pair<Cell, Cell>> origin;
};

std::vector<HookPiece> decompose_sigma_tableau(const IntTableau& t, const Permutation& sigma);

}  // namespace szeta
