#include "szeta/lgv.hpp"

#include <algorithm>
#include <set>

namespace szeta {

std::vector<Point> LatticePath::vertices() const {
    std::vector<Point> v{start};
    Point p = start;
    for (Step s : steps) {
        if (s == Step::Right) ++p.x;
        else if (s == Step::Up) ++p.y;
        else {
            ++p.x;
            ++p.y;
        }
        v.push_back(p);
    }
    return v;
}

Point LatticePath::end() const { return vertices().back(); }

std::vector<Point> start_points(const Partition& lam, int, PathKind kind) {
    int r = kind == PathKind::H ? lam.rows() : lam(1);
    std::vector<Point> out;
    for (int i = 1; i <= r; ++i) out.push_back({r + 1 - i, 1});
    return out;
}

std::vector<Point> end_points(const Partition& lam, int n, PathKind kind) {
    Partition base = kind == PathKind::H ? lam : conjugate(lam);
    int r = base.rows();
    std::vector<Point> out;
    for (int k = 1; k <= r; ++k) out.push_back({r + 1 - k + base(k), kind == PathKind::H ? n : n + 1});
    return out;
}

namespace {

std::vector<LatticePath> paths_between(Point a, Point b, int n, PathKind kind) {
    std::vector<LatticePath> out;
    int h = b.x - a.x;
    if (h < 0) return out;
    if (kind == PathKind::H) {
        if (n < 1) return out;
        // c[j] right steps taken in row j
        std::vector<int> c(n, 0);
        std::function<void(int, int)> rec = [&](int j, int left) {
            if (j == n - 1) {
                c[j] = left;
                LatticePath p{a, {}};
                for (int row = 0; row < n; ++row) {
                    p.steps.insert(p.steps.end(), c[row], Step::Right);
                    if (row + 1 < n) p.steps.push_back(Step::Up);
                }
                out.push_back(std::move(p));
                return;
            }
            for (int v = left; v >= 0; --v) {
                c[j] = v;
                rec(j + 1, left - v);
            }
        };
        rec(0, h);
    } else {
        if (h > n) return out;
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + h, true);
        do {
            LatticePath p{a, {}};
            for (int j = 0; j < n; ++j) p.steps.push_back(pick[j] ? Step::NorthEast : Step::Up);
            out.push_back(std::move(p));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

}  // namespace

void for_each_pattern(const Partition& lam, int n, PathKind kind, const std::function<void(const Pattern&)>& fn) {
    auto starts = start_points(lam, n, kind);
    auto ends = end_points(lam, n, kind);
    int r = static_cast<int>(starts.size());
    for (const auto& sigma : all_permutations(r)) {
        std::vector<std::vector<LatticePath>> options(r);
        bool feasible = true;
        for (int i = 0; i < r && feasible; ++i) {
            options[i] = paths_between(starts[i], ends[sigma[i] - 1], n, kind);
            feasible = !options[i].empty();
        }
        if (!feasible) continue;
        Pattern L{kind, n, std::vector<LatticePath>(r), sigma};
        std::function<void(int)> rec = [&](int i) {
            if (i == r) {
                fn(L);
                return;
            }
            for (const auto& p : options[i]) {
                L.paths[i] = p;
                rec(i + 1);
            }
        };
        rec(0);
    }
}

std::vector<Pattern> enumerate_patterns(const Partition& lam, int n, PathKind kind) {
    std::vector<Pattern> out;
    for_each_pattern(lam, n, kind, [&](const Pattern& L) { out.push_back(L); });
    return out;
}

namespace {

std::vector<std::vector<Point>> sorted_vertices(const Pattern& L) {
    std::vector<std::vector<Point>> v;
    for (const auto& p : L.paths) {
        auto pts = p.vertices();
        std::sort(pts.begin(), pts.end());
        v.push_back(std::move(pts));
    }
    return v;
}

bool share_vertex(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

}  // namespace

bool is_nonintersecting(const Pattern& L) {
    auto v = sorted_vertices(L);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (share_vertex(v[i], v[j])) return false;
    return true;
}

namespace {

RimDecomposition h_rim_for_type(const Partition& lam, const Permutation& sigma) {
    int r = lam.rows();
    if (static_cast<int>(sigma.size()) != r) throw std::invalid_argument("type has the wrong length");
    std::vector<int> mu = lam.parts();
    RimDecomposition d{RimKind::H, std::vector<std::vector<Cell>>(r)};
    auto in_mu = [&](Cell c) { return c.row >= 1 && c.row <= r && c.col >= 1 && c.col <= mu[c.row - 1]; };
    for (int k = r; k >= 1; --k) {
        int size = lam(sigma[k - 1]) - sigma[k - 1] + k;
        if (size < 0) throw std::invalid_argument("no rim decomposition has type " + to_string(sigma));
        if (size == 0) {
            if (mu[k - 1] != 0) throw std::invalid_argument("no rim decomposition has type " + to_string(sigma));
            continue;
        }
        if (mu[k - 1] == 0) throw std::invalid_argument("no rim decomposition has type " + to_string(sigma));
        Cell c{k, 1};
        std::vector<Cell> rib{c};
        while (static_cast<int>(rib.size()) < size) {
            Cell right{c.row, c.col + 1};
            c = in_mu(right) ? right : Cell{c.row - 1, c.col};
            if (!in_mu(c)) throw std::invalid_argument("no rim decomposition has type " + to_string(sigma));
            rib.push_back(c);
        }
        if (in_mu({c.row, c.col + 1})) throw std::invalid_argument("no rim decomposition has type " + to_string(sigma));
        for (auto cell : rib) mu[cell.row - 1] = std::min(mu[cell.row - 1], cell.col - 1);
        d.ribbons[k - 1] = std::move(rib);
    }
    return d;
}

}  // namespace

RimDecomposition rim_for_type(const Partition& lam, PathKind kind, const Permutation& sigma) {
    if (kind == PathKind::H) return h_rim_for_type(lam, sigma);
    RimDecomposition d = h_rim_for_type(conjugate(lam), sigma);
    d.kind = RimKind::E;
    for (auto& rib : d.ribbons)
        for (auto& c : rib) std::swap(c.row, c.col);
    return d;
}

Permutation rim_type(const Partition& lam, const RimDecomposition& d) {
    Partition base = d.kind == RimKind::H ? lam : conjugate(lam);
    int r = base.rows();
    Permutation sigma(r);
    for (int i = 1; i <= r; ++i) {
        int target = static_cast<int>(d.ribbons[i - 1].size()) - i;
        int found = 0;
        for (int k = 1; k <= r; ++k)
            if (base(k) - k == target) found = k;
        if (!found) throw std::invalid_argument("ribbon sizes do not define a type");
        sigma[i - 1] = found;
    }
    return sigma;
}

namespace {

std::vector<std::pair<Cell, int>> edges_with_rim(const Pattern& L, const RimDecomposition& d) {
    std::vector<std::pair<Cell, int>> out;
    for (std::size_t i = 0; i < L.paths.size(); ++i) {
        const auto& rib = d.ribbons[i];
        std::size_t k = 0;
        Point p = L.paths[i].start;
        for (Step s : L.paths[i].steps) {
            if (s == Step::Right || s == Step::NorthEast) {
                if (k >= rib.size()) throw std::logic_error("path has more weighted edges than its ribbon");
                out.emplace_back(rib[k++], p.y);
            }
            if (s != Step::Up) ++p.x;
            if (s != Step::Right) ++p.y;
        }
        if (k != rib.size()) throw std::logic_error("path has fewer weighted edges than its ribbon");
    }
    return out;
}

}  // namespace

std::vector<std::pair<Cell, int>> weighted_edges(const Partition& lam, const Pattern& L) {
    return edges_with_rim(L, rim_for_type(lam, L.kind, L.type));
}

Rational pattern_weight(const Pattern& L, const IntTableau& s, const RationalTableau& x) {
    const Partition& lam = s.shape().outer();
    Rational w = 1;
    for (auto [c, row] : weighted_edges(lam, L)) w *= inv_power(Rational(row) + x[c], s[c]);
    return w;
}

Pattern tail_swap(const Pattern& L) {
    auto sv = sorted_vertices(L);
    int r = static_cast<int>(L.paths.size());
    for (int i = 0; i < r; ++i) {
        auto verts = L.paths[i].vertices();
        for (std::size_t pi = 0; pi < verts.size(); ++pi) {
            for (int j = 0; j < r; ++j) {
                if (j == i || !std::binary_search(sv[j].begin(), sv[j].end(), verts[pi])) continue;
                auto vj = L.paths[j].vertices();
                std::size_t pj = std::find(vj.begin(), vj.end(), verts[pi]) - vj.begin();
                Pattern out = L;
                const auto& si = L.paths[i].steps;
                const auto& sj = L.paths[j].steps;
                out.paths[i].steps.assign(si.begin(), si.begin() + pi);
                out.paths[i].steps.insert(out.paths[i].steps.end(), sj.begin() + pj, sj.end());
                out.paths[j].steps.assign(sj.begin(), sj.begin() + pj);
                out.paths[j].steps.insert(out.paths[j].steps.end(), si.begin() + pi, si.end());
                std::swap(out.type[i], out.type[j]);
                return out;
            }
        }
    }
    throw std::invalid_argument("pattern is nonintersecting");
}

namespace {

struct PatternTable {
    struct Entry {
        int sign;
        bool nonintersecting;
        bool identity_type;
        std::vector<std::pair<int, int>> edges;  // (cell index, row)
    };
    std::vector<Entry> entries;
};

PatternTable build_table(const Partition& lam, int n, PathKind kind) {
    PatternTable t;
    IntTableau index(SkewShape{lam});
    std::map<Permutation, RimDecomposition> rims;
    for_each_pattern(lam, n, kind, [&](const Pattern& L) {
        auto it = rims.find(L.type);
        if (it == rims.end()) it = rims.emplace(L.type, rim_for_type(lam, kind, L.type)).first;
        PatternTable::Entry e{sign(L.type), is_nonintersecting(L), true, {}};
        for (std::size_t i = 0; i < L.type.size(); ++i) e.identity_type &= L.type[i] == static_cast<int>(i) + 1;
        for (auto [c, row] : edges_with_rim(L, it->second)) e.edges.emplace_back(index.index(c), row);
        t.entries.push_back(std::move(e));
    });
    return t;
}

SignedSums sum_table(const PatternTable& t, const IntTableau& s, const RationalTableau& x, int n) {
    std::size_t cells = s.size();
    std::vector<Rational> w(cells * (n + 1));
    for (std::size_t c = 0; c < cells; ++c)
        for (int row = 1; row <= n; ++row) w[c * (n + 1) + row] = inv_power(Rational(row) + x.values()[c], s.values()[c]);
    SignedSums out;
    Rational prod;
    for (const auto& e : t.entries) {
        prod = 1;
        for (auto [c, row] : e.edges) prod *= w[c * (n + 1) + row];
        ++out.patterns;
        if (e.sign > 0) out.signed_total += prod;
        else out.signed_total -= prod;
        if (e.nonintersecting) {
            ++out.nonintersecting;
            out.nonintersecting_total += prod;
            out.nonintersecting_types_identity &= e.identity_type;
        } else if (e.sign > 0) {
            out.intersecting_signed_total += prod;
        } else {
            out.intersecting_signed_total -= prod;
        }
    }
    return out;
}

void check_tableaux(const Partition& lam, const IntTableau& s, const RationalTableau& x) {
    if (!(s.shape() == SkewShape(lam)) || !(x.shape() == SkewShape(lam)))
        throw std::invalid_argument("tableaux must live on the partition");
}

}  // namespace

SignedSums signed_pattern_sums(const Partition& lam, int n, const IntTableau& s, const RationalTableau& x,
                               PathKind kind) {
    check_tableaux(lam, s, x);
    return sum_table(build_table(lam, n, kind), s, x, n);
}

CancellationReport verify_cancellation(const Partition& lam, int n, const IntTableau& s, const RationalTableau& x,
                                       PathKind kind) {
    check_tableaux(lam, s, x);
    if (!is_diagonal_constant(s) || !is_diagonal_constant(x))
        throw std::invalid_argument("cancellation needs diagonal-constant exponents and shifts");
    CancellationReport rep;
    rep.sums = signed_pattern_sums(lam, n, s, x, kind);
    for_each_pattern(lam, n, kind, [&](const Pattern& L) {
        if (!rep.witness_ok || is_nonintersecting(L)) return;
        ++rep.pairs_checked;
        Pattern bar = tail_swap(L);
        auto fail = [&](const std::string& why) {
            rep.witness_ok = false;
            rep.witness_failure = why;
        };
        if (is_nonintersecting(bar)) return fail("partner is nonintersecting");
        if (!(tail_swap(bar) == L)) return fail("tail swap is not an involution");
        if (sign(bar.type) != -sign(L.type)) return fail("partner has the same sign");
        if (pattern_weight(bar, s, x) != pattern_weight(L, s, x)) return fail("partner weight differs");
    });
    return rep;
}

Rational truncated_schur_via_paths(const Partition& lam, int n, const IntTableau& s, const RationalTableau& x,
                                   PathKind kind) {
    check_tableaux(lam, s, x);
    Rational total = 0;
    for_each_pattern(lam, n, kind, [&](const Pattern& L) {
        if (is_nonintersecting(L)) total += pattern_weight(L, s, x);
    });
    return total;
}

Rational orbit_intersecting_total(const Partition& lam, int n, const IntTableau& s, const RationalTableau& x) {
    check_tableaux(lam, s, x);
    auto table = build_table(lam, n, PathKind::H);
    Rational total = 0;
    for (const auto& o : diagonal_orbit(SkewShape(lam)))
        total += sum_table(table, apply_orbit(o, s), apply_orbit(o, x), n).intersecting_signed_total;
    return total;
}

std::string render_pattern(const Pattern& L) {
    int width = 1, height = L.kind == PathKind::H ? L.height : L.height + 1;
    for (const auto& p : L.paths)
        for (auto v : p.vertices()) width = std::max(width, v.x);
    std::vector<std::string> canvas(2 * height - 1, std::string(2 * width - 1, ' '));
    for (int y = 1; y <= height; ++y)
        for (int x = 1; x <= width; ++x) canvas[2 * (height - y)][2 * (x - 1)] = '.';
    auto at = [&](Point v) -> char& { return canvas[2 * (height - v.y)][2 * (v.x - 1)]; };
    for (std::size_t i = 0; i < L.paths.size(); ++i) {
        Point p = L.paths[i].start;
        char mark = static_cast<char>('1' + i);
        auto stamp = [&](Point v) {
            char& c = at(v);
            c = (c == '.' || c == mark) ? mark : '*';
        };
        stamp(p);
        for (Step s : L.paths[i].steps) {
            int row = 2 * (height - p.y), col = 2 * (p.x - 1);
            if (s == Step::Right) {
                canvas[row][col + 1] = '-';
                ++p.x;
            } else if (s == Step::Up) {
                canvas[row - 1][col] = '|';
                ++p.y;
            } else {
                canvas[row - 1][col + 1] = '/';
                ++p.x;
                ++p.y;
            }
            stamp(p);
        }
    }
    std::string out;
    for (auto& line : canvas) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string to_string(const Permutation& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

}  // namespace szeta
