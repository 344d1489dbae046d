#include "szeta/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

namespace szeta {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int n = 0;
    for (int v : parts_) n += v;
    return n;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 1; i <= mu.rows(); ++i)
        if (mu(i) > (*this)(i)) return false;
    return true;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back({i, j});
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> c(p.empty() ? 0 : p(1), 0);
    for (int v : p.parts())
        for (int j = 0; j < v; ++j) ++c[j];
    return Partition(std::move(c));
}

std::vector<Cell> corners(const Partition& p) {
    std::vector<Cell> out;
    for (int i = 1; i <= p.rows(); ++i)
        if (p(i + 1) < p(i)) out.push_back({i, p(i)});
    return out;
}

bool is_hook(const Partition& p) { return p.rows() > 0 && p(2) <= 1; }

Partition hook(int arm, int leg) {
    std::vector<int> v{arm + 1};
    v.insert(v.end(), leg, 1);
    return Partition(std::move(v));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = std::min(left, cap); v >= 1; --v) {
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw std::invalid_argument("inner partition not contained in outer");
}

SkewShape SkewShape::from_cells(const std::vector<Cell>& cells) {
    if (cells.empty()) return {};
    int rows = 0;
    for (auto c : cells) rows = std::max(rows, c.row);
    std::vector<int> lo(rows + 1, 0), hi(rows + 1, 0);
    std::vector<bool> seen(rows + 1, false);
    for (auto c : cells) {
        if (!seen[c.row]) {
            lo[c.row] = hi[c.row] = c.col;
            seen[c.row] = true;
        }
        lo[c.row] = std::min(lo[c.row], c.col);
        hi[c.row] = std::max(hi[c.row], c.col);
    }
    std::vector<int> outer(rows), inner(rows);
    int below = 0;
    for (int i = rows; i >= 1; --i) {
        if (seen[i]) {
            outer[i - 1] = hi[i];
            inner[i - 1] = lo[i] - 1;
            if (hi[i] - lo[i] + 1 != static_cast<int>(std::count_if(cells.begin(), cells.end(),
                                                                     [&](Cell c) { return c.row == i; })))
                throw std::invalid_argument("cell set is not a skew diagram");
        } else {
            outer[i - 1] = inner[i - 1] = below;
        }
        below = outer[i - 1];
    }
    for (int i = 1; i < rows; ++i)
        if (outer[i] > outer[i - 1] || inner[i] > inner[i - 1])
            throw std::invalid_argument("cell set is not a skew diagram");
    return SkewShape(Partition(outer), Partition(inner));
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= outer_.rows(); ++i)
        for (int j = inner_(i) + 1; j <= outer_(i); ++j) out.push_back({i, j});
    return out;
}

bool SkewShape::operator==(const SkewShape& o) const { return cells() == o.cells(); }

std::vector<Cell> corners(const SkewShape& s) {
    std::vector<Cell> out;
    for (auto c : s.cells())
        if (!s.contains({c.row, c.col + 1}) && !s.contains({c.row + 1, c.col})) out.push_back(c);
    return out;
}

bool is_ribbon(const std::vector<Cell>& cells) {
    if (cells.empty()) return false;
    std::set<Cell> set(cells.begin(), cells.end());
    for (auto c : set)
        if (set.count({c.row + 1, c.col}) && set.count({c.row, c.col + 1}) && set.count({c.row + 1, c.col + 1}))
            return false;
    std::set<Cell> reached{*set.begin()};
    std::vector<Cell> stack{*set.begin()};
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (Cell n : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}})
            if (set.count(n) && reached.insert(n).second) stack.push_back(n);
    }
    return reached.size() == set.size();
}

bool is_ribbon(const SkewShape& s) { return is_ribbon(s.cells()); }

bool FrobeniusCoords::valid() const {
    if (p.size() != q.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || q[i] < 0) return false;
        if (i > 0 && (p[i] >= p[i - 1] || q[i] >= q[i - 1])) return false;
    }
    return true;
}

FrobeniusCoords frobenius(const Partition& lam) {
    Partition c = conjugate(lam);
    FrobeniusCoords f;
    for (int i = 1; lam(i) >= i; ++i) {
        f.p.push_back(lam(i) - i);
        f.q.push_back(c(i) - i);
    }
    return f;
}

Partition from_frobenius(const FrobeniusCoords& f) {
    if (!f.valid()) throw std::invalid_argument("invalid Frobenius coordinates");
    int n = f.depth();
    int rows = n == 0 ? 0 : f.q[0] + 1;
    std::vector<int> parts(rows, 0);
    for (int i = 1; i <= n; ++i) parts[i - 1] = f.p[i - 1] + i;
    // below the diagonal block: row i has #{j : q_j + j >= i, j <= n, j < i}
    for (int i = n + 1; i <= rows; ++i) {
        int len = 0;
        for (int j = 1; j <= n; ++j)
            if (f.q[j - 1] + j >= i) len = j;
        parts[i - 1] = len;
    }
    Partition lam(parts);
    if (frobenius(lam) != f) throw std::invalid_argument("invalid Frobenius coordinates");
    return lam;
}

HashTransposed hash_transpose(const SkewShape& s, int box) {
    HashTransposed h;
    h.box = box;
    std::vector<Cell> image;
    for (auto c : s.cells()) {
        if (c.row > box || c.col > box) throw std::invalid_argument("shape does not fit in the box");
        Cell t = h.map(c);
        h.bijection.emplace_back(c, t);
        image.push_back(t);
    }
    h.shape = SkewShape::from_cells(image);
    return h;
}

HashTransposed hash_transpose(const SkewShape& s) {
    int box = 0;
    for (auto c : s.cells()) box = std::max({box, c.row, c.col});
    return hash_transpose(s, box);
}

int RimDecomposition::index_of(Cell c) const {
    for (std::size_t i = 0; i < ribbons.size(); ++i)
        if (std::find(ribbons[i].begin(), ribbons[i].end(), c) != ribbons[i].end()) return static_cast<int>(i) + 1;
    return 0;
}

namespace {

// cells of mu/nu ordered from the south-west end: move up when possible, else right
std::vector<Cell> order_from_southwest(std::vector<Cell> cells) {
    std::set<Cell> set(cells.begin(), cells.end());
    Cell cur = *std::min_element(cells.begin(), cells.end(),
                                 [](Cell a, Cell b) { return a.content() < b.content(); });
    std::vector<Cell> out{cur};
    while (out.size() < cells.size()) {
        Cell up{cur.row - 1, cur.col}, right{cur.row, cur.col + 1};
        cur = set.count(up) ? up : right;
        out.push_back(cur);
    }
    return out;
}

void h_rims(std::vector<int> mu, int k, std::vector<std::vector<Cell>>& slots,
            std::vector<RimDecomposition>& out) {
    if (k == 0) {
        out.push_back({RimKind::H, slots});
        return;
    }
    if (mu[k - 1] == 0) {
        slots[k - 1].clear();
        h_rims(mu, k - 1, slots, out);
        return;
    }
    // choose nu within mu with nu_k = 0 so that mu/nu is a ribbon
    std::vector<int> nu(mu.size(), 0);
    std::function<void(int)> choose = [&](int i) {
        if (i == k) {
            std::vector<Cell> cells;
            for (int r = 1; r <= k; ++r)
                for (int c = nu[r - 1] + 1; c <= mu[r - 1]; ++c) cells.push_back({r, c});
            if (!is_ribbon(cells)) return;
            slots[k - 1] = order_from_southwest(cells);
            h_rims(nu, k - 1, slots, out);
            return;
        }
        int cap = i == 1 ? mu[0] : std::min(mu[i - 1], nu[i - 2]);
        for (int v = 0; v <= cap; ++v) {
            nu[i - 1] = v;
            choose(i + 1);
        }
        nu[i - 1] = 0;
    };
    choose(1);
}

}  // namespace

std::vector<RimDecomposition> h_rim_decompositions(const Partition& p) {
    std::vector<RimDecomposition> out;
    std::vector<std::vector<Cell>> slots(p.rows());
    h_rims(p.parts(), p.rows(), slots, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.ribbons < b.ribbons; });
    return out;
}

std::vector<RimDecomposition> e_rim_decompositions(const Partition& p) {
    auto base = h_rim_decompositions(conjugate(p));
    for (auto& d : base) {
        d.kind = RimKind::E;
        for (auto& rib : d.ribbons)
            for (auto& c : rib) std::swap(c.row, c.col);
    }
    return base;
}

bool is_valid_rim(const Partition& p, const RimDecomposition& d) {
    int slots = d.kind == RimKind::H ? p.rows() : p(1);
    if (static_cast<int>(d.ribbons.size()) != slots) return false;
    std::set<Cell> used;
    for (int i = 1; i <= slots; ++i) {
        const auto& rib = d.ribbons[i - 1];
        if (rib.empty()) continue;
        Cell start = d.kind == RimKind::H ? Cell{i, 1} : Cell{1, i};
        if (rib.front() != start || !is_ribbon(rib)) return false;
        for (auto c : rib)
            if (!p.contains(c) || !used.insert(c).second) return false;
        std::vector<Cell> sofar(used.begin(), used.end());
        std::vector<int> rows(p.rows(), 0);
        for (auto c : sofar) rows[c.row - 1] = std::max(rows[c.row - 1], c.col);
        for (auto c : sofar)
            for (int j = 1; j < c.col; ++j)
                if (!used.count({c.row, j})) return false;
        for (int r = 1; r < p.rows(); ++r)
            if (rows[r] > rows[r - 1]) return false;
    }
    return static_cast<int>(used.size()) == p.size();
}

std::string to_string(const Partition& p) {
    std::string s;
    for (int i = 0; i < p.rows(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

std::string to_string(const SkewShape& s) {
    if (s.is_straight()) return to_string(s.outer());
    return to_string(s.outer()) + "/" + to_string(s.inner());
}

std::string to_string(const FrobeniusCoords& f) {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    return "(" + join(f.p) + "|" + join(f.q) + ")";
}

std::string to_string(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

namespace {

std::string_view trim(std::string_view t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    return t;
}

std::vector<int> parse_ints(std::string_view text) {
    text = trim(text);
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        auto tok = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("bad integer '" + std::string(tok) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string_view strip_parens(std::string_view t) {
    t = trim(t);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    return t;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    auto t = strip_parens(text);
    if (t == "0") return {};
    auto v = parse_ints(t);
    try {
        return Partition(v);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad partition '") + std::string(text) + "': " + e.what());
    }
}

SkewShape parse_skew(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return SkewShape(parse_partition(text));
    try {
        return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad skew shape '") + std::string(text) + "': " + e.what());
    }
}

FrobeniusCoords parse_frobenius(std::string_view text) {
    auto t = strip_parens(text);
    auto bar = t.find('|');
    if (bar == std::string_view::npos) throw ParseError("Frobenius notation needs '|'");
    FrobeniusCoords f{parse_ints(t.substr(0, bar)), parse_ints(t.substr(bar + 1))};
    if (!f.valid()) throw ParseError("invalid Frobenius coordinates '" + std::string(text) + "'");
    return f;
}

}  // namespace szeta
