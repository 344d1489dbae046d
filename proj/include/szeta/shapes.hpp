#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace szeta {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Cell {
    int row = 1;
    int col = 1;

    int content() const { return col - row; }
    auto operator<=>(const Cell&) const = default;
};

class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    // 1-indexed, zero past the last row
    int operator()(int i) const { return i >= 1 && i <= rows() ? parts_[i - 1] : 0; }

    bool contains(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= (*this)(c.row); }
    bool contains(const Partition& mu) const;
    // row-major
    std::vector<Cell> cells() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);
std::vector<Cell> corners(const Partition& p);
bool is_hook(const Partition& p);
Partition hook(int arm, int leg);
// all partitions of n, in reverse lexicographic order
std::vector<Partition> partitions_of(int n);

class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner = {});
    static SkewShape from_cells(const std::vector<Cell>& cells);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    bool is_straight() const { return inner_.empty(); }
    int size() const { return outer_.size() - inner_.size(); }
    bool contains(Cell c) const { return outer_.contains(c) && !inner_.contains(c); }
    std::vector<Cell> cells() const;

    bool operator==(const SkewShape& o) const;

private:
    Partition outer_;
    Partition inner_;
};

std::vector<Cell> corners(const SkewShape& s);
bool is_ribbon(const SkewShape& s);
bool is_ribbon(const std::vector<Cell>& cells);

struct FrobeniusCoords {
    std::vector<int> p;
    std::vector<int> q;

    int depth() const { return static_cast<int>(p.size()); }
    bool valid() const;
    bool operator==(const FrobeniusCoords&) const = default;
};

FrobeniusCoords frobenius(const Partition& p);
Partition from_frobenius(const FrobeniusCoords& f);

struct HashTransposed {
    SkewShape shape;
    int box = 0;
    // input cell -> image cell, row-major over the input
    std::vector<std::pair<Cell, Cell>> bijection;

    Cell map(Cell c) const { return {box + 1 - c.col, box + 1 - c.row}; }
};

// reflection across the anti-diagonal of the smallest square box holding the shape
HashTransposed hash_transpose(const SkewShape& s);
HashTransposed hash_transpose(const SkewShape& s, int box);

enum class RimKind { H, E };

struct RimDecomposition {
    RimKind kind = RimKind::H;
    // ribbons[i-1] is theta_i, possibly empty; cells ordered along the ribbon
    // (H: from the south-west end, E: from the north-east end)
    std::vector<std::vector<Cell>> ribbons;

    int index_of(Cell c) const;
    bool operator==(const RimDecomposition&) const = default;
};

std::vector<RimDecomposition> h_rim_decompositions(const Partition& p);
std::vector<RimDecomposition> e_rim_decompositions(const Partition& p);
bool is_valid_rim(const Partition& p, const RimDecomposition& d);

std::string to_string(const Partition& p);
std::string to_string(const SkewShape& s);
std::string to_string(const FrobeniusCoords& f);
std::string to_string(Cell c);
Partition parse_partition(std::string_view text);
SkewShape parse_skew(std::string_view text);
FrobeniusCoords parse_frobenius(std::string_view text);

}  // namespace szeta
