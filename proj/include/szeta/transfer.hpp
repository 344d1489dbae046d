#pragma once

#include <vector>

#include "szeta/shapes.hpp"

namespace szeta {

// States are the partitions mu with inner <= mu <= outer; an entry value m moves the
// filled region mu (cells with entries < m) to mu' (entries <= m) along a horizontal strip.
struct StripGraph {
    struct Edge {
        int source;
        std::vector<int> cells;  // row-major cell indices of the shape
    };

    SkewShape shape;
    std::vector<std::vector<int>> states;  // row lengths, padded to the outer row count
    std::vector<int> filled;               // |mu / inner|
    std::vector<std::vector<Edge>> into;   // nonempty strips ending at each state
    std::vector<int> order;                // states by decreasing filled count
    int initial = 0;
    int final = 0;

    int cell_count() const { return shape.size(); }
    // cells of outer / mu as row-major indices
    std::vector<int> missing_cells(int state) const;
};

StripGraph build_strip_graph(const SkewShape& shape);

// v holds one value per state; adds all fillings with entries in [m_from, m_to].
// weight(m, w) fills w[c] with the factor of cell c carrying entry m.
template <class Scalar, class Weight>
void transfer_sweep(const StripGraph& g, long m_from, long m_to, Weight weight, std::vector<Scalar>& v) {
    std::vector<Scalar> w(g.cell_count());
    for (long m = m_from; m <= m_to; ++m) {
        weight(m, w);
        for (int t : g.order) {
            for (const auto& e : g.into[t]) {
                Scalar prod = v[e.source];
                for (int c : e.cells) prod *= w[c];
                v[t] += prod;
            }
        }
    }
}

template <class Scalar, class Weight>
Scalar truncated_skew_sum(const StripGraph& g, long n, Weight weight) {
    std::vector<Scalar> v(g.states.size(), Scalar(0));
    v[g.initial] = Scalar(1);
    transfer_sweep<Scalar>(g, 1, n, weight, v);
    return v[g.final];
}

}  // namespace szeta
