#include "szeta/transfer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace szeta {

StripGraph build_strip_graph(const SkewShape& shape) {
    StripGraph g;
    g.shape = shape;
    const int R = shape.outer().rows();
    std::vector<int> lo(R), hi(R);
    for (int i = 0; i < R; ++i) {
        lo[i] = shape.inner()(i + 1);
        hi[i] = shape.outer()(i + 1);
    }
    std::vector<int> cur(R);
    std::function<void(int)> rec = [&](int i) {
        if (i == R) {
            g.states.push_back(cur);
            return;
        }
        int cap = i == 0 ? hi[0] : std::min(hi[i], cur[i - 1]);
        for (int v = lo[i]; v <= cap; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    std::map<std::vector<int>, int> index;
    for (std::size_t k = 0; k < g.states.size(); ++k) index[g.states[k]] = static_cast<int>(k);
    g.initial = index.at(lo);
    g.final = index.at(hi);

    std::vector<int> row_offset(R, 0);
    for (int i = 1; i < R; ++i) row_offset[i] = row_offset[i - 1] + hi[i - 1] - lo[i - 1];

    g.filled.resize(g.states.size());
    for (std::size_t k = 0; k < g.states.size(); ++k) {
        int f = 0;
        for (int i = 0; i < R; ++i) f += g.states[k][i] - lo[i];
        g.filled[k] = f;
    }
    g.into.resize(g.states.size());
    for (std::size_t t = 0; t < g.states.size(); ++t) {
        const auto& b = g.states[t];
        for (std::size_t s = 0; s < g.states.size(); ++s) {
            if (s == t) continue;
            const auto& a = g.states[s];
            // horizontal strip: a_i <= b_i and b_i <= a_{i-1}
            bool ok = true;
            for (int i = 0; i < R && ok; ++i) {
                if (a[i] > b[i]) ok = false;
                if (i > 0 && b[i] > a[i - 1]) ok = false;
            }
            if (!ok) continue;
            StripGraph::Edge e{static_cast<int>(s), {}};
            for (int i = 0; i < R; ++i)
                for (int j = a[i] + 1; j <= b[i]; ++j) e.cells.push_back(row_offset[i] + j - lo[i] - 1);
            g.into[t].push_back(std::move(e));
        }
    }
    g.order.resize(g.states.size());
    std::iota(g.order.begin(), g.order.end(), 0);
    std::stable_sort(g.order.begin(), g.order.end(), [&](int a, int b) { return g.filled[a] > g.filled[b]; });
    return g;
}

std::vector<int> StripGraph::missing_cells(int state) const {
    std::vector<int> out;
    const int R = shape.outer().rows();
    int offset = 0;
    for (int i = 0; i < R; ++i) {
        int lo = shape.inner()(i + 1), hi = shape.outer()(i + 1);
        for (int j = states[state][i] + 1; j <= hi; ++j) out.push_back(offset + j - lo - 1);
        offset += hi - lo;
    }
    return out;
}

}  // namespace szeta
