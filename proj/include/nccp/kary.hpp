#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lattice.hpp"
#include "partition.hpp"
#include "tree.hpp"

namespace nccp {

// Labeled tree with at most k children per node. Slot p (1..k) is the p-th
// edge counted from the right; child[x][p-1] == 0 means the slot is empty.
struct KAryTree {
    int k = 2;
    int n = 0;
    std::vector<std::vector<int>> child;
    std::vector<int> parent, slot;

    KAryTree() = default;
    KAryTree(int arity, int size)
        : k(arity), n(size), child(size + 1, std::vector<int>(arity, 0)), parent(size + 1, 0), slot(size + 1, 0)
    {
        if (arity < 2)
            throw std::invalid_argument("arity must be at least 2");
    }

    int root() const { return n ? 1 : 0; }

    void attach(int p, int s, int c)
    {
        if (child[p][s - 1])
            throw std::logic_error("slot already occupied");
        child[p][s - 1] = c;
        parent[c] = p;
        slot[c] = s;
    }

    friend bool operator==(const KAryTree& a, const KAryTree& b) { return a.k == b.k && a.n == b.n && a.child == b.child; }
};

inline void validate(const KAryTree& t)
{
    if (t.n < 1)
        throw std::invalid_argument("tree needs at least one node");
    if (t.parent[1] != 0)
        throw std::invalid_argument("root must carry label 1");
    for (int x = 2; x <= t.n; ++x) {
        const int p = t.parent[x];
        if (p < 1 || p >= x)
            throw std::invalid_argument("labels must increase away from the root (node " + std::to_string(x) + ")");
        if (t.slot[x] < 1 || t.slot[x] > t.k || t.child[p][t.slot[x] - 1] != x)
            throw std::invalid_argument("inconsistent child slot at node " + std::to_string(x));
    }
}

inline std::string to_string(const KAryTree& t)
{
    std::function<void(int, std::string&)> go = [&](int x, std::string& out) {
        out += std::to_string(x);
        bool any = false;
        for (int c : t.child[x])
            any |= c != 0;
        if (!any)
            return;
        out += '(';
        for (int p = t.k; p >= 1; --p) {
            const int c = t.child[x][p - 1];
            if (c)
                go(c, out);
            else
                out += "·";
            if (p > 1)
                out += ',';
        }
        out += ')';
    };
    std::string s;
    if (t.n)
        go(1, s);
    return s;
}

// Accepts `·`, `.` or `_` for an empty slot.
inline KAryTree parse_kary_tree(std::string_view text, int k)
{
    struct Raw {
        int label;
        std::vector<int> slots;  // left to right, 0 = empty
    };
    std::map<int, Raw> raw;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\n'))
            ++i;
    };
    std::function<int()> node = [&]() -> int {
        skip();
        if (text.substr(i, 2) == "·") {
            i += 2;
            return 0;
        }
        if (i < text.size() && (text[i] == '.' || text[i] == '_')) {
            ++i;
            return 0;
        }
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9')
            ++i;
        const int label = detail::parse_int(text.substr(start, i - start));
        if (raw.count(label))
            throw std::invalid_argument("label repeated: " + std::to_string(label));
        Raw r{label, std::vector<int>(k, 0)};
        skip();
        if (i < text.size() && text[i] == '(') {
            ++i;
            std::vector<int> kids;
            for (;;) {
                kids.push_back(node());
                skip();
                if (i >= text.size())
                    throw std::invalid_argument("unbalanced parentheses");
                if (text[i] == ',') {
                    ++i;
                    continue;
                }
                if (text[i] != ')')
                    throw std::invalid_argument("expected ',' or ')'");
                ++i;
                break;
            }
            if (static_cast<int>(kids.size()) != k)
                throw std::invalid_argument("node " + std::to_string(label) + " lists " + std::to_string(kids.size()) +
                                            " slots, expected " + std::to_string(k));
            r.slots = kids;
        }
        raw[label] = r;
        return label;
    };
    const int root = node();
    skip();
    if (i != text.size())
        throw std::invalid_argument("trailing characters in tree text");
    const int n = static_cast<int>(raw.size());
    if (root != 1 || raw.rbegin()->first != n || raw.begin()->first != 1)
        throw std::invalid_argument("labels must be exactly 1..n with root 1");
    KAryTree t(k, n);
    for (const auto& [label, r] : raw)
        for (int j = 0; j < k; ++j)
            if (r.slots[j])
                t.attach(label, k - j, r.slots[j]);
    validate(t);
    return t;
}

// ---------------------------------------------------------------------------
// Height sequences: h_j is the number of free slots strictly to the right of
// the slot taken by node j, in the tree on labels 1..j-1.

inline bool is_valid_height(const std::vector<int>& h, int k)
{
    if (h.empty() || h[0] != 0)
        return false;
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] < 0 || h[i] > (k - 1) * static_cast<int>(i))
            return false;
    return true;
}

inline std::vector<int> height_sequence(const KAryTree& t)
{
    validate(t);
    std::vector<std::pair<int, int>> free;  // right to left
    std::vector<int> h{0};
    for (int p = 1; p <= t.k; ++p)
        free.emplace_back(1, p);
    for (int x = 2; x <= t.n; ++x) {
        auto it = std::find(free.begin(), free.end(), std::make_pair(t.parent[x], t.slot[x]));
        h.push_back(static_cast<int>(it - free.begin()));
        it = free.erase(it);
        std::vector<std::pair<int, int>> mine;
        for (int p = 1; p <= t.k; ++p)
            mine.emplace_back(x, p);
        free.insert(it, mine.begin(), mine.end());
    }
    return h;
}

inline KAryTree tree_from_height(const std::vector<int>& h, int k)
{
    if (k < 2)
        throw std::invalid_argument("arity must be at least 2");
    if (!is_valid_height(h, k))
        throw std::invalid_argument("height sequence needs h_1 = 0 and 0 <= h_i <= (k-1)(i-1)");
    const int n = static_cast<int>(h.size());
    KAryTree t(k, n);
    std::vector<std::pair<int, int>> free;
    for (int p = 1; p <= k; ++p)
        free.emplace_back(1, p);
    for (int x = 2; x <= n; ++x) {
        auto it = free.begin() + h[x - 1];
        t.attach(it->first, it->second, x);
        it = free.erase(it);
        std::vector<std::pair<int, int>> mine;
        for (int p = 1; p <= k; ++p)
            mine.emplace_back(x, p);
        free.insert(it, mine.begin(), mine.end());
    }
    return t;
}

template <class F>
void for_each_height(int n, int k, F&& f)
{
    std::vector<int> h(n, 0);
    std::function<void(int)> go = [&](int i) {
        if (i == n) {
            f(static_cast<const std::vector<int>&>(h));
            return;
        }
        for (int v = 0; v <= (k - 1) * i; ++v) {
            h[i] = v;
            go(i + 1);
        }
    };
    if (n >= 1)
        go(1);
}

inline std::vector<KAryTree> all_kary_trees(int n, int k)
{
    std::vector<KAryTree> out;
    for_each_height(n, k, [&](const std::vector<int>& h) { out.push_back(tree_from_height(h, k)); });
    return out;
}

// Every later label sits weakly right of every earlier one: either below it,
// or in a branch further right at their lowest common ancestor.
inline bool is_canonical_kary(const KAryTree& t)
{
    validate(t);
    auto path = [&](int x) {
        std::vector<int> p;
        for (; x; x = t.parent[x])
            p.push_back(x);
        std::reverse(p.begin(), p.end());
        return p;
    };
    for (int a = 1; a <= t.n; ++a)
        for (int b = a + 1; b <= t.n; ++b) {
            auto pa = path(a), pb = path(b);
            std::size_t j = 0;
            while (j < pa.size() && j < pb.size() && pa[j] == pb[j])
                ++j;
            if (j == pa.size())
                continue;  // a is an ancestor of b
            if (t.slot[pb[j]] > t.slot[pa[j]])
                return false;
        }
    return true;
}

inline KAryTree to_kary(const BinaryTree& b)
{
    KAryTree t(2, b.n);
    for (int x = 1; x <= b.n; ++x) {
        if (b.left[x])
            t.attach(x, 2, b.left[x]);
        if (b.right[x])
            t.attach(x, 1, b.right[x]);
    }
    return t;
}

inline BinaryTree to_binary(const KAryTree& t)
{
    if (t.k != 2)
        throw std::invalid_argument("only 2-ary trees convert to binary trees");
    BinaryTree b(t.n);
    b.root = t.root();
    for (int x = 1; x <= t.n; ++x) {
        b.set_left(x, t.child[x][1]);
        b.set_right(x, t.child[x][0]);
    }
    return b;
}

// ---------------------------------------------------------------------------
// Decomposition into k-1 binary trees. For D_i the slots 1..i count as right
// edges and the slots i+1..k as left edges.

namespace detail {

// Adds node x under m in d (which holds labels 1..x-1, sized for x).
inline void insert_into_component(BinaryTree& d, int m, int x, bool right_edge)
{
    if (right_edge) {
        int end = right_extended(d, m).back();
        d.set_right(end, x);
        return;
    }
    // from the left child, keep to the right-most branch down to a leaf
    int end = m;
    if (d.left[m])
        for (end = d.left[m]; d.left[end] || d.right[end];)
            end = d.right[end] ? d.right[end] : d.left[end];
    d.set_left(end, x);
}

} // namespace detail

inline std::vector<BinaryTree> chi(const KAryTree& t)
{
    validate(t);
    std::vector<BinaryTree> ds;
    for (int i = 1; i < t.k; ++i) {
        BinaryTree d(t.n);
        d.root = 1;
        for (int x = 2; x <= t.n; ++x)
            detail::insert_into_component(d, t.parent[x], x, t.slot[x] <= i);
        ds.push_back(std::move(d));
    }
    return ds;
}

namespace detail {

// The component restricted to labels 1..x (a subtree, since labels increase
// away from the root), sized for x.
inline BinaryTree restrict_labels(const BinaryTree& d, int x)
{
    BinaryTree r(x);
    r.root = 1;
    for (int y = 1; y <= std::min(x, d.n); ++y) {
        r.set_left(y, d.left[y] <= x ? d.left[y] : 0);
        r.set_right(y, d.right[y] <= x ? d.right[y] : 0);
    }
    return r;
}

} // namespace detail

// Rebuilds the tree label by label: the edge types of x across the components
// fix its slot, and its parent is the unique earlier label with that slot free
// whose insertion reproduces every component.
inline KAryTree chi_inv(const std::vector<BinaryTree>& ds)
{
    if (ds.empty())
        throw std::invalid_argument("need at least one binary tree");
    const int n = ds[0].n;
    const int k = static_cast<int>(ds.size()) + 1;
    for (const auto& d : ds) {
        validate(d);
        if (d.n != n)
            throw std::invalid_argument("inconsistent label sets");
        if (d.root != 1)
            throw std::invalid_argument("components must be rooted at label 1");
        for (int y = 2; y <= n; ++y)
            if (d.parent[y] >= y)
                throw std::invalid_argument("labels must increase away from the root");
    }
    KAryTree t(k, n);
    std::vector<BinaryTree> cur;
    for (const auto& d : ds)
        cur.push_back(detail::restrict_labels(d, 1));
    for (int x = 2; x <= n; ++x) {
        std::vector<BinaryTree> want;
        for (const auto& d : ds)
            want.push_back(detail::restrict_labels(d, x));
        int p = 1;
        while (p <= k - 1 && !want[p - 1].is_right_child(x))
            ++p;
        for (int i = p; i <= k - 1; ++i)
            if (!want[i - 1].is_right_child(x))
                throw std::invalid_argument("edge types of " + std::to_string(x) + " do not come from a single slot");
        std::vector<BinaryTree> next;
        int found = 0;
        for (int m = 1; m < x; ++m) {
            if (t.child[m][p - 1])
                continue;
            std::vector<BinaryTree> trial;
            bool ok = true;
            for (int i = 1; i <= k - 1 && ok; ++i) {
                BinaryTree g = detail::restrict_labels(cur[i - 1], x);
                detail::insert_into_component(g, m, x, p <= i);
                ok = g == want[i - 1];
                trial.push_back(std::move(g));
            }
            if (!ok)
                continue;
            if (found)
                throw std::invalid_argument("components do not determine a unique parent for " + std::to_string(x));
            found = m;
            next = std::move(trial);
        }
        if (!found)
            throw std::invalid_argument("components are not the image of a k-ary tree (label " + std::to_string(x) + ")");
        t.attach(found, p, x);
        cur = std::move(next);
    }
    return t;
}

inline std::vector<Partition> chi_partitions(const KAryTree& t)
{
    std::vector<Partition> out;
    for (const auto& d : chi(t))
        out.push_back(phi(d));
    return out;
}

// ---------------------------------------------------------------------------
// Dyck tilings above the lowest path (U D^m)^n, m = k-1. Cell (x,y) is the
// unit square [x,x+1]x[y,y+1]; it lies above the base path iff x < m*y.
// Every tile of a cover-inclusive tiling above this path has the lowest
// shape: a start cell followed by (U R^m)^size.

struct Cell {
    int x = 0, y = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct DyckTile {
    int x = 0, y = 0, size = 0;

    std::vector<Cell> cells(int m) const
    {
        std::vector<Cell> c{{x, y}};
        int cx = x, cy = y;
        for (int j = 0; j < size; ++j) {
            c.push_back({cx, ++cy});
            for (int r = 0; r < m; ++r)
                c.push_back({++cx, cy});
        }
        return c;
    }
    Cell east_edge(int m) const { return {x + m * size + 1, y + size}; }
    Cell west_edge() const { return {x, y}; }
    int weight(int m) const { return m * size + 1; }
    bool trivial() const { return size == 0; }

    friend auto operator<=>(const DyckTile&, const DyckTile&) = default;
};

struct DyckTiling {
    int n = 0;
    int degree = 1;  // m; pairs with trees of arity m+1
    std::vector<DyckTile> tiles;

    friend bool operator==(const DyckTiling&, const DyckTiling&) = default;
};

inline bool has_nontrivial_tile(const DyckTiling& t)
{
    return std::any_of(t.tiles.begin(), t.tiles.end(), [](const DyckTile& d) { return !d.trivial(); });
}

namespace detail {

inline bool below_base(int m, Cell c) { return c.x >= m * c.y; }

// Empty string when the tiling is well formed.
inline std::string tiling_problem(const DyckTiling& t, std::map<Cell, int>* owner_out = nullptr)
{
    const int m = t.degree;
    if (m < 1)
        return "degree must be at least 1";
    std::map<Cell, int> owner;
    std::vector<std::vector<int>> rows(t.n);
    for (int a = 0; a < static_cast<int>(t.tiles.size()); ++a) {
        if (t.tiles[a].size < 0)
            return "negative tile size";
        for (Cell c : t.tiles[a].cells(m)) {
            if (c.y < 0 || c.y >= t.n || c.x < 0 || below_base(m, c))
                return "tile leaves the region above the base path";
            if (!owner.emplace(c, a).second)
                return "tiles overlap";
            rows[c.y].push_back(c.x);
        }
    }
    int prev = 0;
    for (int y = 0; y < t.n; ++y) {
        auto& r = rows[y];
        std::sort(r.begin(), r.end());
        const int lo = r.empty() ? m * y : r.front();
        if (lo < prev)
            return "region boundary is not a lattice path";
        if (!r.empty() && r.back() - r.front() + 1 != static_cast<int>(r.size()))
            return "region has a hole";
        if (!r.empty() && r.back() != m * y - 1)
            return "region does not reach the base path";
        prev = lo;
    }
    for (int a = 0; a < static_cast<int>(t.tiles.size()); ++a) {
        std::set<int> below;
        for (Cell c : t.tiles[a].cells(m)) {
            Cell d{c.x + 1, c.y - 1};
            if (below_base(m, d)) {
                below.insert(-1);
                continue;
            }
            auto it = owner.find(d);
            if (it == owner.end())
                return "tile shifted by (1,-1) leaves the region";
            below.insert(it->second);
        }
        if (below.size() != 1)
            return "tiling is not cover-inclusive";
    }
    if (owner_out)
        *owner_out = std::move(owner);
    return {};
}

} // namespace detail

inline void validate(const DyckTiling& t)
{
    auto why = detail::tiling_problem(t);
    if (!why.empty())
        throw std::invalid_argument(why);
}

// Tiles chained east to west; trajectory i (0-based) belongs to up step i.
inline std::vector<std::vector<int>> trajectories(const DyckTiling& t)
{
    validate(t);
    const int m = t.degree;
    std::map<Cell, int> east;
    std::set<Cell> wests;
    for (int a = 0; a < static_cast<int>(t.tiles.size()); ++a) {
        east[t.tiles[a].east_edge(m)] = a;
        wests.insert(t.tiles[a].west_edge());
    }
    std::vector<std::vector<int>> out(t.n);
    for (const auto& [e, a0] : east) {
        if (wests.count(e))
            continue;
        if ((e.x + e.y) % (m + 1))
            throw std::invalid_argument("trajectory does not start on the base path");
        const int i = (e.x + e.y) / (m + 1);
        if (i >= t.n || e.x > m * i || !out[i].empty())
            throw std::invalid_argument("trajectory does not start on the base path");
        for (int a = a0;;) {
            out[i].push_back(a);
            auto it = east.find(t.tiles[a].west_edge());
            if (it == east.end())
                break;
            a = it->second;
        }
    }
    return out;
}

inline std::vector<int> height_from_tiling(const DyckTiling& t)
{
    std::vector<int> h(t.n, 0);
    auto tr = trajectories(t);
    for (int i = 0; i < t.n; ++i)
        for (int a : tr[i])
            h[i] += t.tiles[a].weight(t.degree);
    return h;
}

namespace detail {

// Splits a strip, listed left to right, into lowest-shape tiles.
inline void split_strip(int m, const std::vector<Cell>& strip, std::size_t pos, std::vector<DyckTile>& cur,
                        std::vector<std::vector<DyckTile>>& out)
{
    if (pos == strip.size()) {
        out.push_back(cur);
        return;
    }
    for (int s = 0;; ++s) {
        const std::size_t len = 1 + static_cast<std::size_t>(s) * (m + 1);
        if (pos + len > strip.size())
            break;
        DyckTile d{strip[pos].x, strip[pos].y, s};
        auto c = d.cells(m);
        if (!std::equal(c.begin(), c.end(), strip.begin() + static_cast<std::ptrdiff_t>(pos))) {
            if (s)
                break;
            continue;
        }
        cur.push_back(d);
        split_strip(m, strip, pos + len, cur, out);
        cur.pop_back();
    }
}

// Adds trajectory i of weight w to a tiling of size i. A cut path runs from
// (m*i, i) left and down along tile boundaries; tiles left of it move by
// (-1,+1) and the strip it opens becomes the new trajectory.
inline DyckTiling insert_trajectory(const DyckTiling& old, int w, const std::vector<int>& want)
{
    const int m = old.degree;
    const int i = old.n;
    std::map<Cell, int> owner;
    for (int a = 0; a < static_cast<int>(old.tiles.size()); ++a)
        for (Cell c : old.tiles[a].cells(m))
            owner[c] = a;
    auto tile_at = [&](int x, int y) {
        auto it = owner.find({x, y});
        return it == owner.end() ? -1 : it->second;
    };
    auto separated = [&](Cell p, Cell q) {
        int a = tile_at(p.x, p.y), b = tile_at(q.x, q.y);
        return a < 0 || b < 0 || a != b;
    };

    std::vector<DyckTiling> found;
    std::string path;
    std::function<void(int, int, int)> walk = [&](int x, int y, int lefts) {
        const int span = lefts + (!path.empty() && path.back() == 'D' ? 1 : 0);
        if (span == w) {
            std::vector<Cell> strip;
            std::map<int, int> cut;  // row -> x where the path crosses it
            int px = m * i, py = i;
            bool inside = true;
            for (char s : path) {
                strip.push_back({px - 1, py});
                inside &= px - 1 >= 0;
                if (s == 'L')
                    --px;
                else
                    cut[--py] = px;
            }
            std::vector<int> shifted(old.tiles.size(), -1);
            for (int a = 0; a < static_cast<int>(old.tiles.size()) && inside; ++a)
                for (Cell c : old.tiles[a].cells(m)) {
                    auto it = cut.find(c.y);
                    const int s = it != cut.end() && c.x < it->second;
                    if (shifted[a] >= 0 && shifted[a] != s)
                        inside = false;
                    shifted[a] = s;
                }
            if (inside) {
                DyckTiling base{i + 1, m, {}};
                for (std::size_t a = 0; a < old.tiles.size(); ++a) {
                    DyckTile d = old.tiles[a];
                    if (shifted[a] == 1) {
                        --d.x;
                        ++d.y;
                    }
                    base.tiles.push_back(d);
                }
                std::reverse(strip.begin(), strip.end());
                std::vector<std::vector<DyckTile>> splits;
                std::vector<DyckTile> cur;
                split_strip(m, strip, 0, cur, splits);
                for (const auto& sp : splits) {
                    DyckTiling t = base;
                    t.tiles.insert(t.tiles.end(), sp.begin(), sp.end());
                    std::sort(t.tiles.begin(), t.tiles.end());
                    if (!tiling_problem(t).empty() || height_from_tiling(t) != want)
                        continue;
                    if (std::find(found.begin(), found.end(), t) == found.end())
                        found.push_back(std::move(t));
                }
            }
        }
        if (lefts < w && x - 1 >= 0 && separated({x - 1, y - 1}, {x - 1, y})) {
            path.push_back('L');
            walk(x - 1, y, lefts + 1);
            path.pop_back();
        }
        if (lefts < w && y - 1 >= 0 && x <= m * (y - 1) && separated({x - 1, y - 1}, {x, y - 1})) {
            path.push_back('D');
            walk(x, y - 1, lefts);
            path.pop_back();
        }
    };
    walk(m * i, i, 0);
    if (found.size() != 1)
        throw std::logic_error("trajectory insertion produced " + std::to_string(found.size()) + " tilings");
    return found.front();
}

} // namespace detail

inline DyckTiling tiling_from_height(const std::vector<int>& h, int k)
{
    if (k < 2)
        throw std::invalid_argument("arity must be at least 2");
    if (!is_valid_height(h, k))
        throw std::invalid_argument("height sequence needs h_1 = 0 and 0 <= h_i <= (k-1)(i-1)");
    DyckTiling t{0, k - 1, {}};
    std::vector<int> prefix;
    for (int w : h) {
        prefix.push_back(w);
        t = detail::insert_trajectory(t, w, prefix);
    }
    return t;
}

// Non-trivial tiles appear exactly when some trajectory reaches more than m
// further than the previous one.
inline bool has_nontrivial_tiles(const std::vector<int>& h, int k)
{
    if (!is_valid_height(h, k))
        throw std::invalid_argument("invalid height sequence");
    for (std::size_t i = 0; i + 1 < h.size(); ++i)
        if (h[i] + (k - 1) < h[i + 1])
            return true;
    return false;
}

// Rows from the top; letters name tiles, '#' marks cells under the base path.
inline std::string to_ascii(const DyckTiling& t)
{
    std::map<Cell, int> owner;
    auto why = detail::tiling_problem(t, &owner);
    if (!why.empty())
        throw std::invalid_argument(why);
    const int width = t.degree * t.n;
    std::string out;
    for (int y = t.n - 1; y >= 0; --y) {
        for (int x = 0; x < width; ++x) {
            auto it = owner.find({x, y});
            if (it != owner.end())
                out += static_cast<char>(it->second < 26 ? 'a' + it->second : 'A' + (it->second - 26) % 26);
            else
                out += detail::below_base(t.degree, {x, y}) ? '#' : '.';
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// A weakly increasing chain of m elements corresponds to an (m+1)-ary tree
// and to a tiling of degree m.

inline KAryTree tree_from_chain(const std::vector<Partition>& chain)
{
    if (chain.empty())
        throw std::invalid_argument("empty chain");
    for (std::size_t j = 0; j + 1 < chain.size(); ++j)
        if (!leq(chain[j], chain[j + 1]))
            throw std::invalid_argument("not a chain: " + to_string(chain[j]) + " is not below " +
                                        to_string(chain[j + 1]));
    std::vector<BinaryTree> ds;
    for (const auto& p : chain)
        ds.push_back(phi_inv(p));
    return chi_inv(ds);
}

inline DyckTiling chain_to_tiling(const std::vector<Partition>& chain)
{
    const KAryTree t = tree_from_chain(chain);
    return tiling_from_height(height_sequence(t), t.k);
}

inline std::vector<Partition> tiling_to_chain(const DyckTiling& t)
{
    const KAryTree tree = tree_from_height(height_from_tiling(t), t.degree + 1);
    return chi_partitions(tree);
}

inline std::vector<int> binary_height(const BinaryTree& b) { return height_sequence(to_kary(b)); }

// Componentwise sum of the heights of the binary trees from chi.
inline std::vector<int> component_height_sum(const KAryTree& t)
{
    std::vector<int> s(t.n, 0);
    for (const auto& d : chi(t)) {
        auto h = binary_height(d);
        for (int j = 0; j < t.n; ++j)
            s[j] += h[j];
    }
    return s;
}

// nullopt when some node i+1 does not hang directly below node i.
inline std::optional<bool> height_additivity_check(const KAryTree& t)
{
    validate(t);
    for (int x = 2; x <= t.n; ++x)
        if (t.parent[x] != x - 1)
            return std::nullopt;
    return height_sequence(t) == component_height_sum(t);
}

} // namespace nccp
