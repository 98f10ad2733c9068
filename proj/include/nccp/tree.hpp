#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "partition.hpp"

namespace nccp {

// Binary tree whose nodes are the labels 1..n, increasing from the root.
// Child and parent arrays are indexed by label; 0 means absent.
struct BinaryTree {
    int n = 0;
    int root = 0;
    std::vector<int> left, right, parent;

    explicit BinaryTree(int size = 0)
        : n(size), left(size + 1, 0), right(size + 1, 0), parent(size + 1, 0)
    {
    }

    bool is_left_child(int x) const { return parent[x] && left[parent[x]] == x; }
    bool is_right_child(int x) const { return parent[x] && right[parent[x]] == x; }

    void set_left(int p, int c)
    {
        left[p] = c;
        if (c)
            parent[c] = p;
    }
    void set_right(int p, int c)
    {
        right[p] = c;
        if (c)
            parent[c] = p;
    }

    friend bool operator==(const BinaryTree& a, const BinaryTree& b)
    {
        return a.n == b.n && a.root == b.root && a.left == b.left && a.right == b.right;
    }
};

inline void validate(const BinaryTree& t)
{
    if (t.n < 1 || t.root < 1 || t.root > t.n || t.parent[t.root] != 0)
        throw std::invalid_argument("bad tree root");
    std::vector<char> seen(t.n + 1, 0);
    std::vector<int> stack{t.root};
    int count = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x < 1 || x > t.n || seen[x]++)
            throw std::invalid_argument("tree labels are not a permutation of [n]");
        ++count;
        for (int c : {t.left[x], t.right[x]}) {
            if (!c)
                continue;
            if (c <= x)
                throw std::invalid_argument("labels must increase away from the root");
            if (t.parent[c] != x)
                throw std::invalid_argument("inconsistent parent link");
            stack.push_back(c);
        }
    }
    if (count != t.n)
        throw std::invalid_argument("tree does not contain every label");
}

inline void in_order(const BinaryTree& t, int x, Perm& out)
{
    // iterative to stay safe for deep chains
    std::vector<int> stack;
    int cur = x;
    while (cur || !stack.empty()) {
        while (cur) {
            stack.push_back(cur);
            cur = t.left[cur];
        }
        cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        cur = t.right[cur];
    }
}

inline Perm in_order(const BinaryTree& t)
{
    Perm w;
    w.reserve(t.n);
    in_order(t, t.root, w);
    return w;
}

inline Partition phi(const BinaryTree& t) { return Partition::from_permutation(in_order(t)); }

// Decreasing-free Cartesian tree: the minimum is the root, the left and right
// factors of the word hang to its left and right.
inline BinaryTree phi_inv(const Perm& w)
{
    const int n = static_cast<int>(w.size());
    BinaryTree t(n);
    std::vector<int> stack;
    for (int x : w) {
        int last = 0;
        while (!stack.empty() && stack.back() > x) {
            last = stack.back();
            stack.pop_back();
        }
        t.set_left(x, last);
        if (!stack.empty())
            t.set_right(stack.back(), x);
        else
            t.parent[x] = 0;
        stack.push_back(x);
    }
    t.root = stack.front();
    return t;
}

inline BinaryTree phi_inv(const Partition& p) { return phi_inv(p.word()); }

inline std::vector<int> path_to_root(const BinaryTree& t, int x)
{
    std::vector<int> p;
    for (; x; x = t.parent[x])
        p.push_back(x);
    return p;
}

inline bool is_ancestor(const BinaryTree& t, int a, int x)
{
    for (; x; x = t.parent[x])
        if (x == a)
            return true;
    return false;
}

inline int lowest_common_ancestor(const BinaryTree& t, int a, int b)
{
    while (!is_ancestor(t, a, b))
        a = t.parent[a];
    return a;
}

// Ancestors y of x such that x lies in the left subtree of y.
inline std::vector<int> left_set(const BinaryTree& t, int x)
{
    std::vector<int> s;
    for (int c = x; t.parent[c]; c = t.parent[c])
        if (t.left[t.parent[c]] == c)
            s.push_back(t.parent[c]);
    return s;
}

// x, its left child, that node's left child, ...
inline std::vector<int> left_extended(const BinaryTree& t, int x)
{
    std::vector<int> s;
    for (; x; x = t.left[x])
        s.push_back(x);
    return s;
}

// x, its right child, that node's right child, ...
inline std::vector<int> right_extended(const BinaryTree& t, int x)
{
    std::vector<int> s;
    for (; x; x = t.right[x])
        s.push_back(x);
    return s;
}

inline int right_edge_count(const BinaryTree& t)
{
    int c = 0;
    for (int x = 1; x <= t.n; ++x)
        c += t.right[x] != 0;
    return c;
}

// b is weakly right of a (a < b): b descends from a, or the two paths split
// at a node holding a on its left and b on its right.
inline bool weakly_right(const BinaryTree& t, int a, int b)
{
    if (is_ancestor(t, a, b))
        return true;
    int c = lowest_common_ancestor(t, a, b);
    if (c == b)
        return false;
    int ca = a, cb = b;
    while (t.parent[ca] != c)
        ca = t.parent[ca];
    while (t.parent[cb] != c)
        cb = t.parent[cb];
    return t.left[c] == ca && t.right[c] == cb;
}

inline bool is_canonical_tree(const BinaryTree& t)
{
    for (int i = 1; i < t.n; ++i)
        if (!weakly_right(t, i, i + 1))
            return false;
    return true;
}

// Right chains become blocks, ordered by decreasing minimum.
inline Partition psi(const BinaryTree& t)
{
    if (!is_canonical_tree(t))
        throw std::invalid_argument("psi needs a canonical tree");
    std::vector<std::vector<int>> blocks;
    for (int x = 1; x <= t.n; ++x)
        if (!t.is_right_child(x))
            blocks.push_back(right_extended(t, x));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() > b.front(); });
    return Partition::from_blocks(blocks);
}

// A canonical tree is labeled in preorder, so a block with minimum m > 1 hangs
// as the left child of m - 1.
inline BinaryTree psi_inv(const Partition& lambda)
{
    if (!is_canonical(lambda) || !is_noncrossing(lambda))
        throw std::invalid_argument("psi_inv needs a noncrossing canonical partition");
    BinaryTree t(lambda.n());
    t.root = 1;
    for (const auto& b : lambda.blocks()) {
        for (std::size_t j = 1; j < b.size(); ++j)
            t.set_right(b[j - 1], b[j]);
        if (b.front() > 1) {
            if (t.left[b.front() - 1])
                throw std::logic_error("psi_inv: left slot already used");
            t.set_left(b.front() - 1, b.front());
        }
    }
    validate(t);
    return t;
}

inline Partition varphi(const Partition& p)
{
    if (!avoids(p, Pattern::p312))
        throw std::invalid_argument("varphi needs a 312-avoiding partition");
    return psi(phi_inv(p));
}

inline Partition varphi_inv(const Partition& lambda) { return phi(psi_inv(lambda)); }

inline void write_tree(std::ostream& os, const BinaryTree& t, int x)
{
    os << x;
    if (!t.left[x] && !t.right[x])
        return;
    os << '(';
    if (t.left[x])
        write_tree(os, t, t.left[x]);
    else
        os << "·";
    os << ',';
    if (t.right[x])
        write_tree(os, t, t.right[x]);
    else
        os << "·";
    os << ')';
}

inline std::string to_string(const BinaryTree& t)
{
    std::ostringstream os;
    write_tree(os, t, t.root);
    return os.str();
}

namespace detail {

struct TreeTextParser {
    std::string_view s;
    std::size_t i = 0;
    std::vector<std::vector<int>> kids;  // label -> child list as written
    std::vector<int> labels;

    bool empty_marker()
    {
        if (s.substr(i, 2) == "·") {
            i += 2;
            return true;
        }
        if (i < s.size() && (s[i] == '.' || s[i] == '-')) {
            ++i;
            return true;
        }
        return false;
    }

    int node()
    {
        if (empty_marker())
            return 0;
        std::size_t st = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9')
            ++i;
        if (st == i)
            throw std::invalid_argument("tree text: expected label at offset " + std::to_string(st));
        int label = parse_int(s.substr(st, i - st));
        labels.push_back(label);
        std::vector<int> ch;
        if (i < s.size() && s[i] == '(') {
            ++i;
            for (;;) {
                ch.push_back(node());
                if (i < s.size() && s[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < s.size() && s[i] == ')') {
                    ++i;
                    break;
                }
                throw std::invalid_argument("tree text: expected ',' or ')'");
            }
        }
        if (static_cast<int>(kids.size()) <= label)
            kids.resize(label + 1);
        kids[label] = std::move(ch);
        return label;
    }
};

} // namespace detail

// Children are written left to right; a binary node lists (left,right).
inline BinaryTree parse_tree(std::string_view text)
{
    detail::TreeTextParser p{text, 0, {}, {}};
    int root = p.node();
    if (p.i != text.size())
        throw std::invalid_argument("tree text: trailing characters");
    const int n = static_cast<int>(p.labels.size());
    BinaryTree t(n);
    t.root = root;
    for (int x : p.labels) {
        if (x < 1 || x > n)
            throw std::invalid_argument("tree text: label out of range");
        const auto& ch = p.kids[x];
        if (ch.empty())
            continue;
        if (ch.size() != 2)
            throw std::invalid_argument("tree text: binary nodes need two slots");
        t.set_left(x, ch[0]);
        t.set_right(x, ch[1]);
    }
    validate(t);
    return t;
}

inline std::string to_dot(const BinaryTree& t)
{
    std::ostringstream os;
    os << "digraph tree {\n";
    for (int x = 1; x <= t.n; ++x)
        os << "  " << x << ";\n";
    for (int x = 1; x <= t.n; ++x) {
        if (t.left[x])
            os << "  " << x << " -> " << t.left[x] << " [style=dashed];\n";
        if (t.right[x])
            os << "  " << x << " -> " << t.right[x] << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace nccp
