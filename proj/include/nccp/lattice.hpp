#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "tree.hpp"

namespace nccp {

struct RotationTriplet {
    int n_label = 0;          // node hanging from its parent by a left edge
    int a_label = 0;          // node receiving the right-extended merge
    std::vector<int> s_set;   // nodes of the left-extended sequence moved along

    friend bool operator==(const RotationTriplet&, const RotationTriplet&) = default;
};

// Deepest ancestor c of x that has x on its left and some smaller label on
// its right; 0 if every smaller label sits weakly left of x.
inline int right_branch_anchor(const BinaryTree& t, int x)
{
    int best = 0;
    for (int y = 1; y < x; ++y) {
        if (is_ancestor(t, y, x))
            continue;
        int c = lowest_common_ancestor(t, x, y);
        if (c == y)
            continue;
        int cx = x;
        while (t.parent[cx] != c)
            cx = t.parent[cx];
        if (t.left[c] == cx)
            best = std::max(best, c);
    }
    return best;
}

inline std::vector<int> admissible_anchors(const BinaryTree& t, int x)
{
    std::vector<int> ls = left_set(t, x);
    const int c = right_branch_anchor(t, x);
    if (c)
        std::erase_if(ls, [c](int a) { return a < c; });
    return ls;
}

inline std::vector<RotationTriplet> valid_triplets(const BinaryTree& t)
{
    std::vector<RotationTriplet> out;
    for (int x = 1; x <= t.n; ++x) {
        if (!t.is_left_child(x))
            continue;
        const auto anchors = admissible_anchors(t, x);
        const auto lx = left_extended(t, x);
        const int p = static_cast<int>(lx.size()) - 1;
        for (int a : anchors)
            for (unsigned mask = 0; mask < (1u << p); ++mask) {
                RotationTriplet nu{x, a, {}};
                for (int i = 0; i < p; ++i)
                    if (mask >> i & 1u)
                        nu.s_set.push_back(lx[i + 1]);
                out.push_back(std::move(nu));
            }
    }
    return out;
}

inline BinaryTree rotate(const BinaryTree& t, const RotationTriplet& nu)
{
    const int x = nu.n_label;
    if (x < 1 || x > t.n || !t.is_left_child(x))
        throw std::invalid_argument("rotation node must be a left child");
    const auto anchors = admissible_anchors(t, x);
    if (std::find(anchors.begin(), anchors.end(), nu.a_label) == anchors.end())
        throw std::invalid_argument("inadmissible anchor node");
    const auto lx = left_extended(t, x);
    for (int s : nu.s_set)
        if (std::find(lx.begin() + 1, lx.end(), s) == lx.end())
            throw std::invalid_argument("moved node is not on the left-extended sequence");

    BinaryTree r = t;
    const int x0 = t.parent[x];

    std::vector<int> first{x};
    first.insert(first.end(), nu.s_set.begin(), nu.s_set.end());
    std::sort(first.begin(), first.end());
    for (std::size_t i = 0; i < first.size(); ++i)
        r.set_left(first[i], i + 1 < first.size() ? first[i + 1] : 0);

    std::vector<int> second{x0};
    for (int m : lx)
        if (std::find(first.begin(), first.end(), m) == first.end())
            second.push_back(m);
    for (std::size_t i = 0; i < second.size(); ++i)
        r.set_left(second[i], i + 1 < second.size() ? second[i + 1] : 0);
    r.parent[x] = 0;

    std::vector<int> merged = right_extended(r, nu.a_label);
    const auto qx = right_extended(r, x);
    merged.insert(merged.end(), qx.begin(), qx.end());
    std::sort(merged.begin(), merged.end());
    for (std::size_t i = 0; i + 1 < merged.size(); ++i)
        r.set_right(merged[i], merged[i + 1]);
    r.right[merged.back()] = 0;
    return r;
}

struct Cover {
    Partition upper;
    RotationTriplet nu;
};

inline std::vector<Cover> rotations(const Partition& p)
{
    const BinaryTree t = phi_inv(p);
    std::vector<Cover> out;
    for (const auto& nu : valid_triplets(t))
        out.push_back({phi(rotate(t, nu)), nu});
    return out;
}

inline std::vector<Partition> covers(const Partition& p)
{
    std::vector<Partition> out;
    for (auto& c : rotations(p))
        out.push_back(std::move(c.upper));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Right/left sets of larger labels in the one-line word.

struct RLProfile {
    int n = 0;
    // index i in [1, n-1]; sets stored as sorted vectors
    std::vector<std::vector<int>> left, right;

    friend bool operator==(const RLProfile&, const RLProfile&) = default;
};

inline RLProfile rl_profile(const Partition& p)
{
    const int n = p.n();
    RLProfile r{n, std::vector<std::vector<int>>(n), std::vector<std::vector<int>>(n)};
    std::vector<int> pos(n + 1);
    for (int i = 0; i < n; ++i)
        pos[p.word()[i]] = i;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            (pos[j] > pos[i] ? r.right[i] : r.left[i]).push_back(j);
    return r;
}

// Rebuilds the tree by placing labels in increasing order: each new label j
// descends from the root, turning right at i exactly when j is in right(i).
inline BinaryTree tree_from_rl(const RLProfile& prof)
{
    const int n = prof.n;
    if (static_cast<int>(prof.right.size()) != n || static_cast<int>(prof.left.size()) != n)
        throw std::invalid_argument("profile size mismatch");
    auto in_right = [&](int i, int j) {
        return std::binary_search(prof.right[i].begin(), prof.right[i].end(), j);
    };
    for (int i = 1; i < n; ++i) {
        std::vector<int> all = prof.right[i];
        all.insert(all.end(), prof.left[i].begin(), prof.left[i].end());
        std::sort(all.begin(), all.end());
        std::vector<int> expect;
        for (int j = i + 1; j <= n; ++j)
            expect.push_back(j);
        if (all != expect)
            throw std::invalid_argument("inconsistent profile at " + std::to_string(i));
    }
    BinaryTree t(n);
    t.root = 1;
    for (int j = 2; j <= n; ++j) {
        int cur = 1;
        for (;;) {
            const bool r = in_right(cur, j);
            int next = r ? t.right[cur] : t.left[cur];
            if (!next) {
                r ? t.set_right(cur, j) : t.set_left(cur, j);
                break;
            }
            cur = next;
        }
    }
    // The placement must reproduce every relation, otherwise the profile is
    // not realisable by a permutation.
    if (rl_profile(phi(t)) != prof)
        throw std::invalid_argument("profile is not realisable");
    return t;
}

// ---------------------------------------------------------------------------
// Hasse diagram

struct EdgeLabel {
    int ltilde = 0;  // label of the anchor node
    int el = 0;      // n + blocks(lower) - ltilde
    int a = 0;       // anchor label
    int b = 0;       // rotated node label
};

struct HasseEdge {
    int lower = 0;
    int upper = 0;
    EdgeLabel label;
    std::vector<std::pair<int, int>> realisations;  // all (a,b) over triplets
};

struct HasseDiagram {
    int n = 0;
    Family family = Family::nccp;
    std::vector<Partition> elements;
    std::vector<HasseEdge> edges;           // sorted by (lower, upper)
    std::vector<std::vector<int>> up, down;  // edge ids
    int bottom = -1, top = -1;

    int index_of(const Partition& p) const
    {
        auto it = std::lower_bound(elements.begin(), elements.end(), p);
        if (it == elements.end() || !(*it == p))
            return -1;
        return static_cast<int>(it - elements.begin());
    }

    int edge_id(int lo, int hi) const
    {
        for (int e : up[lo])
            if (edges[e].upper == hi)
                return e;
        return -1;
    }

    int rank(int i) const { return elements[i].rank(); }
};

// Among the (a,b) pairs realising one edge, the stored label takes the
// largest anchor, then the largest rotated node.
inline std::pair<int, int> choose_realisation(const std::vector<std::pair<int, int>>& r)
{
    return *std::max_element(r.begin(), r.end());
}

inline HasseDiagram build_hasse(int n, Family family = Family::nccp)
{
    if (n < 1 || n > 8)
        throw std::invalid_argument("build_hasse supports 1 <= n <= 8");
    if (family != Family::nccp && family != Family::nccp312)
        throw std::invalid_argument("hasse diagrams are built for nccp or nccp312");
    HasseDiagram h;
    h.n = n;
    h.family = family;
    h.elements = enumerate(n, family);
    h.up.resize(h.elements.size());
    h.down.resize(h.elements.size());
    for (int i = 0; i < static_cast<int>(h.elements.size()); ++i) {
        std::map<int, std::vector<std::pair<int, int>>> found;
        for (const auto& c : rotations(h.elements[i])) {
            int j = h.index_of(c.upper);
            if (j < 0)
                continue;
            found[j].emplace_back(c.nu.a_label, c.nu.n_label);
        }
        for (auto& [j, real] : found) {
            std::sort(real.begin(), real.end());
            real.erase(std::unique(real.begin(), real.end()), real.end());
            HasseEdge e;
            e.lower = i;
            e.upper = j;
            auto [a, b] = choose_realisation(real);
            e.label = {a, n + h.elements[i].block_count() - a, a, b};
            e.realisations = std::move(real);
            const int id = static_cast<int>(h.edges.size());
            h.up[i].push_back(id);
            h.down[j].push_back(id);
            h.edges.push_back(std::move(e));
        }
    }
    h.bottom = h.index_of(bottom(n));
    h.top = h.index_of(top(n));
    return h;
}

// All elements above i (inclusive), as a membership mask.
inline std::vector<char> up_set(const HasseDiagram& h, int i)
{
    std::vector<char> seen(h.elements.size(), 0);
    std::vector<int> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int e : h.up[x]) {
            int y = h.edges[e].upper;
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return seen;
}

inline std::vector<char> down_set(const HasseDiagram& h, int i)
{
    std::vector<char> seen(h.elements.size(), 0);
    std::vector<int> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int e : h.down[x]) {
            int y = h.edges[e].lower;
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return seen;
}

// Comparability table computed once; fine for n <= 6.
struct OrderTable {
    std::size_t size = 0;
    std::vector<char> le;
    explicit OrderTable(const HasseDiagram& h) : size(h.elements.size()), le(size * size, 0)
    {
        // process from the top rank downward so up-sets can be reused
        std::vector<int> order(size);
        for (std::size_t i = 0; i < size; ++i)
            order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return h.rank(a) > h.rank(b); });
        for (int x : order) {
            le[x * size + x] = 1;
            for (int e : h.up[x]) {
                int y = h.edges[e].upper;
                for (std::size_t z = 0; z < size; ++z)
                    if (le[y * size + z])
                        le[x * size + z] = 1;
            }
        }
    }
    bool operator()(int a, int b) const { return le[a * size + b]; }
};

inline int least_upper_bound(const HasseDiagram& h, const OrderTable& le, int a, int b)
{
    int best = -1;
    const int size = static_cast<int>(h.elements.size());
    for (int z = 0; z < size; ++z)
        if (le(a, z) && le(b, z) && (best < 0 || le(z, best)))
            best = z;
    for (int z = 0; z < size; ++z)
        if (le(a, z) && le(b, z) && !le(best, z))
            return -1;
    return best;
}

inline int greatest_lower_bound(const HasseDiagram& h, const OrderTable& le, int a, int b)
{
    int best = -1;
    const int size = static_cast<int>(h.elements.size());
    for (int z = 0; z < size; ++z)
        if (le(z, a) && le(z, b) && (best < 0 || le(best, z)))
            best = z;
    for (int z = 0; z < size; ++z)
        if (le(z, a) && le(z, b) && !le(z, best))
            return -1;
    return best;
}

// Poset context: diagram, comparability table and right/left profiles.
class Lattice {
public:
    explicit Lattice(int n, Family family = Family::nccp)
        : h_(build_hasse(n, family)), le_(h_)
    {
        for (const auto& e : h_.elements)
            prof_.push_back(rl_profile(e));
    }

    const HasseDiagram& diagram() const { return h_; }
    const OrderTable& order() const { return le_; }
    int n() const { return h_.n; }
    std::size_t size() const { return h_.elements.size(); }
    const Partition& at(int i) const { return h_.elements[i]; }

    int index(const Partition& p) const
    {
        int i = h_.index_of(p);
        if (i < 0)
            throw std::invalid_argument("element not in this poset: " + to_string(p));
        return i;
    }

    bool leq(int a, int b) const { return le_(a, b); }
    bool leq(const Partition& a, const Partition& b) const { return le_(index(a), index(b)); }

    // -1 when the bound does not exist
    int least_upper_bound(int a, int b) const { return nccp::least_upper_bound(h_, le_, a, b); }
    int greatest_lower_bound(int a, int b) const { return nccp::greatest_lower_bound(h_, le_, a, b); }

    // Saturation procedure on right sets (join) or left sets (meet): walk p
    // from n-1 down to 1, and whenever the union target at p is not contained,
    // move along covers to the element holding it with the smallest set at p.
    // Ties go to the element leaving the fewest lower indices unsatisfied, then
    // the smallest total profile, the nearest rank, and lexicographic order. Repeats on the pair until it meets.
    int join(int a, int b) const { return join_meet(a, b, true); }
    int meet(int a, int b) const { return join_meet(a, b, false); }

    Partition join(const Partition& a, const Partition& b) const { return at(join(index(a), index(b))); }
    Partition meet(const Partition& a, const Partition& b) const { return at(meet(index(a), index(b))); }

private:
    using Sets = std::vector<std::vector<int>>;

    const Sets& sets(int i, bool right) const { return right ? prof_[i].right : prof_[i].left; }

    static bool contains(const std::vector<int>& big, const std::vector<int>& small)
    {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    }

    int saturate(int cur, const Sets& target, bool up) const
    {
        const int n = h_.n;
        for (int p = n - 1; p >= 1; --p) {
            if (contains(sets(cur, up)[p], target[p]))
                continue;
            int best = -1;
            std::tuple<std::size_t, int, std::size_t, int> best_key;
            for (int z = 0; z < static_cast<int>(size()); ++z) {
                if (!(up ? le_(cur, z) : le_(z, cur)))
                    continue;
                const auto& s = sets(z, up);
                bool ok = true;
                for (int r = p; r < n && ok; ++r)
                    ok = contains(s[r], target[r]);
                if (!ok)
                    continue;
                int missing = 0;
                std::size_t total = 0;
                for (int r = 1; r < n; ++r) {
                    total += s[r].size();
                    missing += r < p && !contains(s[r], target[r]);
                }
                const int dist = std::abs(h_.rank(z) - h_.rank(cur));
                const auto key = std::make_tuple(s[p].size(), missing, total, dist);
                if (best < 0 || key < best_key) {
                    best = z;
                    best_key = key;
                }
            }
            if (best < 0)
                throw std::logic_error("saturation found no reachable element");
            cur = best;
        }
        return cur;
    }

    int join_meet(int x, int y, bool up) const
    {
        const int n = h_.n;
        for (int step = 0; step <= n * n; ++step) {
            if (x == y)
                return x;
            Sets target(n);
            for (int i = 1; i < n; ++i)
                std::set_union(sets(x, up)[i].begin(), sets(x, up)[i].end(), sets(y, up)[i].begin(),
                               sets(y, up)[i].end(), std::back_inserter(target[i]));
            x = saturate(x, target, up);
            y = saturate(y, target, up);
        }
        throw std::runtime_error("join/meet iteration cap exceeded");
    }

    HasseDiagram h_;
    OrderTable le_;
    std::vector<RLProfile> prof_;
};

inline const Lattice& lattice_for(int n)
{
    static std::map<int, std::unique_ptr<Lattice>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto& slot = cache[n];
    if (!slot)
        slot = std::make_unique<Lattice>(n);
    return *slot;
}

inline void check_same_size(const Partition& a, const Partition& b)
{
    if (a.n() != b.n())
        throw std::invalid_argument("size mismatch");
}

inline bool leq(const Partition& a, const Partition& b)
{
    check_same_size(a, b);
    return lattice_for(a.n()).leq(a, b);
}

inline Partition join(const Partition& a, const Partition& b)
{
    check_same_size(a, b);
    return lattice_for(a.n()).join(a, b);
}

inline Partition meet(const Partition& a, const Partition& b)
{
    check_same_size(a, b);
    return lattice_for(a.n()).meet(a, b);
}

// ---------------------------------------------------------------------------
// Kreweras order on noncrossing canonical partitions: coarsening by one merge.

inline Partition canonical_from_sets(std::vector<std::vector<int>> blocks)
{
    for (auto& b : blocks)
        std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() > b.front(); });
    return Partition::from_blocks(blocks);
}

inline std::vector<Partition> refinement_covers(const Partition& lambda)
{
    if (!is_canonical(lambda) || !is_noncrossing(lambda))
        throw std::invalid_argument("refinement_covers needs a noncrossing canonical partition");
    std::vector<Partition> out;
    const auto& bl = lambda.blocks();
    for (std::size_t i = 0; i < bl.size(); ++i)
        for (std::size_t j = i + 1; j < bl.size(); ++j) {
            std::vector<std::vector<int>> nb;
            std::vector<int> merged = bl[i];
            merged.insert(merged.end(), bl[j].begin(), bl[j].end());
            for (std::size_t k = 0; k < bl.size(); ++k)
                if (k != i && k != j)
                    nb.push_back(bl[k]);
            nb.push_back(merged);
            Partition q = canonical_from_sets(nb);
            if (is_noncrossing(q))
                out.push_back(q);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Is every block of a contained in some block of b?
inline bool refines(const Partition& a, const Partition& b)
{
    const auto id = b.block_of();
    for (const auto& blk : a.blocks())
        for (int x : blk)
            if (id[x] != id[blk.front()])
                return false;
    return true;
}

struct CoverGraph {
    std::vector<Partition> nodes;
    std::set<std::pair<int, int>> edges;
};

inline CoverGraph kreweras_graph(int n)
{
    CoverGraph g;
    g.nodes = enumerate(n, Family::ncp);
    for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i)
        for (const auto& q : refinement_covers(g.nodes[i])) {
            auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), q);
            g.edges.insert({i, static_cast<int>(it - g.nodes.begin())});
        }
    return g;
}

// varphi carries the covers among 312-avoiders exactly onto Kreweras covers.
inline bool kreweras_iso_check(int n)
{
    const auto h = build_hasse(n, Family::nccp312);
    const auto g = kreweras_graph(n);
    std::vector<int> img(h.elements.size());
    std::vector<char> hit(g.nodes.size(), 0);
    for (std::size_t i = 0; i < h.elements.size(); ++i) {
        auto v = varphi(h.elements[i]);
        auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), v);
        if (it == g.nodes.end() || !(*it == v))
            return false;
        img[i] = static_cast<int>(it - g.nodes.begin());
        if (hit[img[i]]++)
            return false;
    }
    if (h.elements.size() != g.nodes.size() || h.edges.size() != g.edges.size())
        return false;
    for (const auto& e : h.edges)
        if (!g.edges.count({img[e.lower], img[e.upper]}))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Export

enum class LabelStyle { none, ltilde, refined };

inline std::string to_dot(const HasseDiagram& h, LabelStyle style = LabelStyle::none)
{
    std::ostringstream os;
    os << "digraph nccp" << h.n << " {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < h.elements.size(); ++i)
        os << "  n" << i << " [label=\"" << to_string(h.elements[i], true) << "\"];\n";
    for (const auto& e : h.edges) {
        os << "  n" << e.lower << " -> n" << e.upper;
        if (style == LabelStyle::ltilde)
            os << " [label=\"" << e.label.ltilde << "\"]";
        else if (style == LabelStyle::refined)
            os << " [label=\"(" << e.label.a << "," << e.label.b << ")\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace nccp
