#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "numbers.hpp"
#include "partition.hpp"
#include "poly.hpp"

namespace nccp {

// Orderings of [n] with l blocks (descent runs).
inline Int eulerian(int n, int l)
{
    if (n < 1 || l < 1 || l > n)
        throw std::invalid_argument("eulerian needs 1 <= l <= n");
    Int s = 0;
    for (int j = 0; j <= l; ++j) {
        Int term = binomial(n + 1, j) * power(Int(l - j), n);
        s += j % 2 ? Int(-term) : term;
    }
    return s;
}

inline Int eulerian_recurrence(int n, int l)
{
    if (n < 1 || l < 1 || l > n)
        throw std::invalid_argument("eulerian needs 1 <= l <= n");
    std::vector<Int> row{0, 1};
    for (int m = 2; m <= n; ++m) {
        std::vector<Int> next(m + 1, 0);
        for (int j = 1; j <= m; ++j)
            next[j] = (j < m ? Int(j) * row[j] : Int(0)) + Int(m - j + 1) * row[j - 1];
        row = std::move(next);
    }
    return row[l];
}

inline Int narayana(int n, int l)
{
    if (n < 1 || l < 1 || l > n)
        throw std::invalid_argument("narayana needs 1 <= l <= n");
    return binomial(n, l) * binomial(n, l - 1) / n;
}

// ---------------------------------------------------------------------------
// Types: block sizes in block order (Partition::type).

using Composition = std::vector<int>;

inline void check_composition(const Composition& s)
{
    if (s.empty())
        throw std::invalid_argument("empty composition");
    for (int x : s)
        if (x < 1)
            throw std::invalid_argument("composition parts must be positive");
}

inline std::string to_string(const Composition& s)
{
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + ")";
}

inline Composition parse_composition(std::string_view text)
{
    if (!text.empty() && text.front() == '(')
        text.remove_prefix(1);
    if (!text.empty() && text.back() == ')')
        text.remove_suffix(1);
    Composition s;
    for (auto tok : detail::split(text, ','))
        s.push_back(detail::parse_int(tok));
    check_composition(s);
    return s;
}

// Sequences one step up: lower a part (any part > 1, or the last part,
// dropping it at zero), or fuse s_i with a following part >= 2.
inline std::vector<Composition> composition_covers(const Composition& s)
{
    check_composition(s);
    const int l = static_cast<int>(s.size());
    std::vector<Composition> out;
    for (int i = 0; i < l; ++i) {
        if (s[i] == 1 && i != l - 1)
            continue;
        Composition t = s;
        if (--t[i] == 0)
            t.erase(t.begin() + i);
        if (!t.empty())
            out.push_back(std::move(t));
    }
    for (int i = 0; i + 1 < l; ++i) {
        if (s[i + 1] < 2)
            continue;
        Composition t(s.begin(), s.begin() + i);
        t.push_back(s[i] + s[i + 1] - 1);
        t.insert(t.end(), s.begin() + i + 2, s.end());
        out.push_back(std::move(t));
    }
    return out;
}

inline Int type_count_T(const Composition& s)
{
    check_composition(s);
    static thread_local std::map<Composition, Int> memo;
    if (s == Composition{1})
        return 1;
    if (auto it = memo.find(s); it != memo.end())
        return it->second;
    Int total = 0;
    for (const auto& t : composition_covers(s))
        total += type_count_T(t);
    memo[s] = total;
    return total;
}

inline Int type_count_direct(const Composition& s)
{
    check_composition(s);
    int n = 0;
    for (int x : s)
        n += x;
    Int c = 0;
    for_each_permutation(n, [&](const Perm& w) { c += Partition::from_permutation(w).type() == s; });
    return c;
}

struct CompositionLattice {
    Composition base;
    std::vector<Composition> nodes;                 // sorted
    std::vector<std::pair<int, int>> edges;         // (lower, upper) node indices

    int index_of(const Composition& c) const
    {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
        return it != nodes.end() && *it == c ? static_cast<int>(it - nodes.begin()) : -1;
    }
};

inline CompositionLattice build_composition_lattice(const Composition& s)
{
    check_composition(s);
    std::set<Composition> seen{s};
    std::vector<Composition> todo{s};
    while (!todo.empty()) {
        Composition c = todo.back();
        todo.pop_back();
        for (auto& u : composition_covers(c))
            if (seen.insert(u).second)
                todo.push_back(u);
    }
    CompositionLattice L{s, {seen.begin(), seen.end()}, {}};
    for (int i = 0; i < static_cast<int>(L.nodes.size()); ++i)
        for (const auto& u : composition_covers(L.nodes[i]))
            L.edges.emplace_back(i, L.index_of(u));
    std::sort(L.edges.begin(), L.edges.end());
    L.edges.erase(std::unique(L.edges.begin(), L.edges.end()), L.edges.end());
    return L;
}

// Maximal paths from the base up to (1), counted with edge multiplicity one.
inline Int path_count(const CompositionLattice& L)
{
    std::vector<Int> ways(L.nodes.size(), 0);
    std::vector<std::vector<int>> up(L.nodes.size());
    for (auto [a, b] : L.edges)
        up[a].push_back(b);
    std::vector<int> order(L.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    auto weight = [&](int i) {
        int w = 0;
        for (int x : L.nodes[i])
            w += x;
        return w;
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return weight(a) < weight(b); });
    for (int i : order) {
        if (L.nodes[i] == Composition{1}) {
            ways[i] = 1;
            continue;
        }
        for (int j : up[i])
            ways[i] += ways[j];
    }
    return ways[L.index_of(L.base)];
}

inline std::vector<Composition> compositions(int n)
{
    std::vector<Composition> out;
    Composition cur;
    std::function<void(int)> go = [&](int left) {
        if (!left) {
            out.push_back(cur);
            return;
        }
        for (int x = 1; x <= left; ++x) {
            cur.push_back(x);
            go(left - x);
            cur.pop_back();
        }
    };
    if (n >= 1)
        go(n);
    return out;
}

// ---------------------------------------------------------------------------
// C(r,t,q) = 1 + sum over 312-avoiding elements of r^n t^blocks q^inv.
// Stored as polynomials in (t,q), one per power of r.

struct Series {
    int order = 0;
    std::vector<Poly> coeff;  // coeff[n] in variables (t,q)

    friend bool operator==(const Series& a, const Series& b) { return a.order == b.order && a.coeff == b.coeff; }

    std::string to_string() const
    {
        std::string out;
        for (int n = 0; n <= order; ++n) {
            const auto& c = coeff[n];
            if (c.terms().empty())
                continue;
            if (!out.empty())
                out += " + ";
            if (n == 0) {
                out += c.to_string("tq");
                continue;
            }
            out += n == 1 ? "r" : "r^" + std::to_string(n);
            out += c.terms().size() > 1 ? "(" + c.to_string("tq") + ")" : " " + c.to_string("tq");
        }
        return out;
    }
};

enum class SeriesMethod { recurrence, direct, dyck };

inline Poly tq_monomial(int t, int q, const Int& c = 1) { return Poly::monomial({t, q}, c); }

// Solves C = 1 + t r C(rq) + C(rq)(C - 1) r one power of r at a time.
inline Series series_C_recurrence(int order)
{
    Series s{order, std::vector<Poly>(order + 1, Poly(2))};
    s.coeff[0] = Poly::constant(2, 1);
    for (int n = 1; n <= order; ++n) {
        Poly c = tq_monomial(1, n - 1) * s.coeff[n - 1];
        for (int b = 1; b <= n - 1; ++b) {
            const int a = n - 1 - b;
            c += tq_monomial(0, a) * s.coeff[a] * s.coeff[b];
        }
        s.coeff[n] = c;
    }
    return s;
}

inline Series series_C_direct(int order)
{
    Series s{order, std::vector<Poly>(order + 1, Poly(2))};
    s.coeff[0] = Poly::constant(2, 1);
    for (int n = 1; n <= order; ++n)
        for_each_permutation(n, [&](const Perm& w) {
            if (avoids(w, Pattern::p312))
                s.coeff[n] += tq_monomial(Partition::from_permutation(w).block_count(), static_cast<int>(inversions(w)));
        });
    return s;
}

struct DyckStats {
    int peaks = 0;
    int area = 0;
    friend bool operator==(const DyckStats&, const DyckStats&) = default;
};

inline DyckStats dyck_stats(std::string_view d)
{
    int h = 0, sum = 0, ups = 0;
    DyckStats st;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 'U') {
            ++h;
            ++ups;
            if (i + 1 < d.size() && d[i + 1] == 'D')
                ++st.peaks;
        } else if (d[i] == 'D') {
            if (--h < 0)
                throw std::invalid_argument("path dips below the axis");
        } else {
            throw std::invalid_argument("Dyck words use only U and D");
        }
        sum += h;
    }
    if (h != 0)
        throw std::invalid_argument("unbalanced Dyck word");
    st.area = (sum - ups) / 2;
    return st;
}

inline std::vector<std::string> dyck_paths(int n)
{
    std::vector<std::string> out;
    std::string cur;
    std::function<void(int, int)> go = [&](int up, int down) {
        if (up == n && down == n) {
            out.push_back(cur);
            return;
        }
        if (up < n) {
            cur.push_back('U');
            go(up + 1, down);
            cur.pop_back();
        }
        if (down < up) {
            cur.push_back('D');
            go(up, down + 1);
            cur.pop_back();
        }
    };
    go(0, 0);
    return out;
}

// The empty path would contribute t; the constant term is fixed at 1.
inline Series series_C_dyck(int order)
{
    Series s{order, std::vector<Poly>(order + 1, Poly(2))};
    s.coeff[0] = Poly::constant(2, 1);
    for (int n = 1; n <= order; ++n)
        for (const auto& d : dyck_paths(n)) {
            auto st = dyck_stats(d);
            s.coeff[n] += tq_monomial(n + 1 - st.peaks, st.area);
        }
    return s;
}

inline Series series_C(int order, SeriesMethod m = SeriesMethod::recurrence)
{
    if (order < 0 || order > 8)
        throw std::invalid_argument("series order must be in 0..8");
    switch (m) {
    case SeriesMethod::direct:
        return series_C_direct(order);
    case SeriesMethod::dyck:
        return series_C_dyck(order);
    default:
        return series_C_recurrence(order);
    }
}

} // namespace nccp
