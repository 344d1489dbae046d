#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "szeta/rational.hpp"
#include "szeta/shapes.hpp"
#include "szeta/tableaux.hpp"

namespace szeta {

enum class PathKind { H, E };
enum class Step { Right, Up, NorthEast };

struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
};

struct LatticePath {
    Point start;
    std::vector<Step> steps;

    std::vector<Point> vertices() const;
    Point end() const;
    bool operator==(const LatticePath&) const = default;
};

struct Pattern {
    PathKind kind = PathKind::H;
    int height = 0;  // N
    std::vector<LatticePath> paths;
    Permutation type;  // path i ends at the type(i)-th end point

    bool operator==(const Pattern& o) const { return kind == o.kind && height == o.height && paths == o.paths; }
};

std::vector<Point> start_points(const Partition& lam, int n, PathKind kind);
std::vector<Point> end_points(const Partition& lam, int n, PathKind kind);

void for_each_pattern(const Partition& lam, int n, PathKind kind, const std::function<void(const Pattern&)>& fn);
std::vector<Pattern> enumerate_patterns(const Partition& lam, int n, PathKind kind);
bool is_nonintersecting(const Pattern& L);

// rim decomposition whose type is sigma (inverse of the type map); throws if none
RimDecomposition rim_for_type(const Partition& lam, PathKind kind, const Permutation& sigma);
Permutation rim_type(const Partition& lam, const RimDecomposition& d);

// (cell, row) pairs contributing 1/(row + x_cell)^(s_cell), in path order
std::vector<std::pair<Cell, int>> weighted_edges(const Partition& lam, const Pattern& L);
Rational pattern_weight(const Pattern& L, const IntTableau& s, const RationalTableau& x);

// LGV tail swap at the first intersection of the lowest-index intersecting path
Pattern tail_swap(const Pattern& L);

struct SignedSums {
    Rational signed_total = 0;
    Rational nonintersecting_total = 0;
    Rational intersecting_signed_total = 0;
    long patterns = 0;
    long nonintersecting = 0;
    bool nonintersecting_types_identity = true;
};

SignedSums signed_pattern_sums(const Partition& lam, int n, const IntTableau& s, const RationalTableau& x,
                               PathKind kind = PathKind::H);

struct CancellationReport {
    SignedSums sums;
    long pairs_checked = 0;
    bool witness_ok = true;
    std::string witness_failure;

    bool pass() const {
        return sums.intersecting_signed_total == 0 && sums.signed_total == sums.nonintersecting_total && witness_ok &&
               sums.nonintersecting_types_identity;
    }
};

// requires diagonal-constant s and x
CancellationReport verify_cancellation(const Partition& lam, int n, const IntTableau& s, const RationalTableau& x,
                                       PathKind kind = PathKind::H);

Rational truncated_schur_via_paths(const Partition& lam, int n, const IntTableau& s, const RationalTableau& x,
                                   PathKind kind = PathKind::H);

// signed intersecting total summed over the diagonal orbit of (s, x)
Rational orbit_intersecting_total(const Partition& lam, int n, const IntTableau& s, const RationalTableau& x);

std::string render_pattern(const Pattern& L);
std::string to_string(const Permutation& p);

}  // namespace szeta
