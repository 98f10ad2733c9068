#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "numbers.hpp"
#include "poly.hpp"

namespace nccp {

// ---------------------------------------------------------------------------
// Chains in a Hasse diagram

// Interval membership mask for [x,y].
inline std::vector<char> interval_mask(const OrderTable& le, int x, int y)
{
    const int size = static_cast<int>(le.size);
    std::vector<char> in(size, 0);
    for (int z = 0; z < size; ++z)
        in[z] = le(x, z) && le(z, y);
    return in;
}

// Calls f with the edge ids of every unrefinable chain from x up to y.
inline void for_each_maximal_chain(const HasseDiagram& h, const OrderTable& le, int x, int y,
                                   const std::function<void(const std::vector<int>&)>& f)
{
    if (!le(x, y))
        throw std::invalid_argument("chain endpoints are not comparable");
    auto in = interval_mask(le, x, y);
    std::vector<int> path;
    std::function<void(int)> go = [&](int cur) {
        if (cur == y) {
            f(path);
            return;
        }
        for (int e : h.up[cur]) {
            if (!in[h.edges[e].upper])
                continue;
            path.push_back(e);
            go(h.edges[e].upper);
            path.pop_back();
        }
    };
    go(x);
}

inline std::vector<int> anchor_labels(const HasseDiagram& h, const std::vector<int>& chain)
{
    std::vector<int> s;
    for (int e : chain)
        s.push_back(h.edges[e].label.ltilde);
    return s;
}

// Rising chains are those whose anchor labels strictly decrease.
inline bool is_rising(const std::vector<int>& ltilde)
{
    for (std::size_t i = 1; i < ltilde.size(); ++i)
        if (ltilde[i] >= ltilde[i - 1])
            return false;
    return true;
}

// A chain without rises: anchor labels weakly increase.
inline bool is_falling(const std::vector<int>& ltilde)
{
    for (std::size_t i = 1; i < ltilde.size(); ++i)
        if (ltilde[i] < ltilde[i - 1])
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// EL check

struct ElFailure {
    int x = -1, y = -1;
    std::string reason;
};

inline std::optional<ElFailure> el_check_interval(const HasseDiagram& h, const OrderTable& le,
                                                  int x, int y)
{
    if (x == y)
        return std::nullopt;
    int rising = 0;
    int first_atom = -1;
    int first_label = 0;
    for_each_maximal_chain(h, le, x, y, [&](const std::vector<int>& c) {
        if (is_rising(anchor_labels(h, c))) {
            ++rising;
            first_atom = h.edges[c.front()].upper;
            first_label = h.edges[c.front()].label.ltilde;
        }
    });
    if (rising != 1)
        return ElFailure{x, y, std::to_string(rising) + " rising chains"};
    for (int e : h.up[x]) {
        int z = h.edges[e].upper;
        if (z == first_atom || !le(z, y))
            continue;
        if (h.edges[e].label.ltilde >= first_label)
            return ElFailure{x, y, "rising chain does not start with the extreme label"};
    }
    return std::nullopt;
}

// Every interval when `all_intervals`, otherwise only [bottom, top].
inline std::optional<ElFailure> el_check(const HasseDiagram& h, const OrderTable& le,
                                         bool all_intervals = true)
{
    if (!all_intervals)
        return el_check_interval(h, le, h.bottom, h.top);
    const int size = static_cast<int>(le.size);
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
            if (x != y && le(x, y))
                if (auto f = el_check_interval(h, le, x, y))
                    return f;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Möbius function

// mu(x, z) for every z, by the defining recursion in rank order.
inline std::vector<Int> moebius_row(const HasseDiagram& h, const OrderTable& le, int x)
{
    const int size = static_cast<int>(le.size);
    std::vector<int> order;
    for (int z = 0; z < size; ++z)
        if (le(x, z))
            order.push_back(z);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h.rank(a) < h.rank(b); });
    std::vector<Int> mu(size, 0);
    for (int y : order) {
        if (y == x) {
            mu[y] = 1;
            continue;
        }
        Int s = 0;
        for (int z : order)
            if (z != y && le(z, y))
                s += mu[z];
        mu[y] = -s;
    }
    return mu;
}

inline Int moebius_recursive(const HasseDiagram& h, const OrderTable& le, int x, int y)
{
    if (!le(x, y))
        throw std::invalid_argument("moebius: x is not below y");
    return moebius_row(h, le, x)[y];
}

inline Int count_falling_chains(const HasseDiagram& h, const OrderTable& le, int x, int y)
{
    auto in = interval_mask(le, x, y);
    std::map<std::pair<int, int>, Int> memo;
    std::function<Int(int, int)> go = [&](int cur, int last) -> Int {
        if (cur == y)
            return 1;
        auto key = std::make_pair(cur, last);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        Int s = 0;
        for (int e : h.up[cur]) {
            const auto& ed = h.edges[e];
            if (in[ed.upper] && ed.label.ltilde >= last)
                s += go(ed.upper, ed.label.ltilde);
        }
        memo[key] = s;
        return s;
    };
    return go(x, 0);
}

inline Int moebius_via_chains(const HasseDiagram& h, const OrderTable& le, int x, int y)
{
    if (!le(x, y))
        throw std::invalid_argument("moebius: x is not below y");
    Int c = count_falling_chains(h, le, x, y);
    return (h.rank(y) - h.rank(x)) % 2 ? Int(-c) : c;
}

// ---------------------------------------------------------------------------
// Chain counts

inline Int count_maximal_chains(const HasseDiagram& h)
{
    std::vector<int> order(h.elements.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h.rank(a) < h.rank(b); });
    std::vector<Int> ways(h.elements.size(), 0);
    ways[h.bottom] = 1;
    for (int v : order)
        for (int e : h.up[v])
            ways[h.edges[e].upper] += ways[v];
    return ways[h.top];
}

// Multichains x_1 <= ... <= x_{k-1}.
inline Int count_k_chains(const HasseDiagram& h, const OrderTable& le, int k)
{
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    const int size = static_cast<int>(h.elements.size());
    if (k == 1)
        return 1;
    std::vector<Int> f(size, 1);
    for (int step = 2; step < k; ++step) {
        std::vector<Int> g(size, 0);
        for (int y = 0; y < size; ++y)
            for (int x = 0; x < size; ++x)
                if (le(x, y))
                    g[y] += f[x];
        f = std::move(g);
    }
    Int total = 0;
    for (const auto& v : f)
        total += v;
    return total;
}

// ---------------------------------------------------------------------------
// Parking functions

inline bool is_parking_function(const std::vector<int>& a)
{
    std::vector<int> s(a);
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] < 1 || s[i] > static_cast<int>(i) + 1)
            return false;
    return true;
}

inline std::vector<std::vector<int>> parking_functions(int n)
{
    if (n < 0 || n > 7)
        throw std::invalid_argument("parking_functions supports 0 <= n <= 7");
    std::vector<std::vector<int>> out;
    std::vector<int> a(n, 1);
    for (;;) {
        if (is_parking_function(a))
            out.push_back(a);
        int i = n - 1;
        while (i >= 0 && a[i] == n)
            a[i--] = 1;
        if (i < 0)
            break;
        ++a[i];
    }
    return out;
}

struct LabeledParkingFunction {
    std::vector<int> a, b;
    auto operator<=>(const LabeledParkingFunction&) const = default;
};

inline bool is_labeled_parking_function(const LabeledParkingFunction& f)
{
    const int n = static_cast<int>(f.a.size());
    if (static_cast<int>(f.b.size()) != n || !is_parking_function(f.a))
        return false;
    if (!n)
        return true;
    try {
        Partition::check_permutation(f.b);
    } catch (const std::invalid_argument&) {
        return false;
    }
    for (int i = 0; i < n; ++i)
        if (f.a[i] > f.b[i])
            return false;
    return true;
}

inline void for_each_labeled_parking_function(int n,
                                              const std::function<void(const LabeledParkingFunction&)>& f)
{
    for (const auto& a : parking_functions(n))
        for_each_permutation(n, [&](const Perm& b) {
            for (int i = 0; i < n; ++i)
                if (a[i] > b[i])
                    return;
            f({a, b});
        });
}

inline std::vector<LabeledParkingFunction> labeled_parking_functions(int n)
{
    if (n > 6)
        throw std::invalid_argument("labeled_parking_functions supports n <= 6");
    std::vector<LabeledParkingFunction> out;
    for_each_labeled_parking_function(n, [&](const LabeledParkingFunction& f) { out.push_back(f); });
    return out;
}

// Refined labels read bottom to top; rotated labels lie in [2,n] and are shifted down.
inline LabeledParkingFunction chain_to_lpf(const HasseDiagram& h, const std::vector<int>& chain)
{
    if (static_cast<int>(chain.size()) != h.n - 1)
        throw std::invalid_argument("chain_to_lpf needs a maximal chain");
    int cur = h.bottom;
    LabeledParkingFunction f;
    for (int e : chain) {
        const auto& ed = h.edges.at(e);
        if (ed.lower != cur)
            throw std::invalid_argument("chain edges are not consecutive");
        cur = ed.upper;
        f.a.push_back(ed.label.a);
        f.b.push_back(ed.label.b - 1);
    }
    if (cur != h.top)
        throw std::invalid_argument("chain_to_lpf needs a maximal chain");
    return f;
}

// prod_{i=1}^n [i]_p [i]_q
inline Poly gen_I_product(int n)
{
    Poly r = Poly::constant(2, 1);
    for (int i = 1; i <= n; ++i) {
        Poly bp(2), bq(2);
        for (int j = 0; j < i; ++j) {
            bp.add({j, 0}, 1);
            bq.add({0, j}, 1);
        }
        r = r * bp * bq;
    }
    return r;
}

// Sum over labeled parking functions of p^(sum a - n) q^inv(b).
inline Poly gen_I_direct(int n)
{
    Poly r(2);
    for_each_labeled_parking_function(n, [&](const LabeledParkingFunction& f) {
        int s = -n;
        for (int v : f.a)
            s += v;
        r.add({s, static_cast<int>(inversions(f.b))}, 1);
    });
    return r;
}

inline Poly gen_I(int n) { return gen_I_product(n); }

// ---------------------------------------------------------------------------
// Falling-chain label sequences

// Weakly increasing a of length m with 1 <= a_i <= i.
inline std::vector<std::vector<int>> sequences_A(int m)
{
    std::vector<std::vector<int>> out;
    std::vector<int> a;
    std::function<void(int)> go = [&](int i) {
        if (i == m) {
            out.push_back(a);
            return;
        }
        for (int v = a.empty() ? 1 : a.back(); v <= i + 1; ++v) {
            a.push_back(v);
            go(i + 1);
            a.pop_back();
        }
    };
    go(0);
    return out;
}

// Arrangements b of {2..m+1} with b_i > a_i.
inline std::vector<std::vector<int>> sequences_B(const std::vector<int>& a)
{
    const int m = static_cast<int>(a.size());
    std::vector<std::vector<int>> out;
    for_each_permutation(m, [&](const Perm& w) {
        for (int i = 0; i < m; ++i)
            if (w[i] + 1 <= a[i])
                return;
        std::vector<int> b(w);
        for (int& x : b)
            ++x;
        out.push_back(std::move(b));
    });
    return out;
}

struct DecreasingSequences {
    std::vector<std::vector<int>> A;
    std::map<std::vector<int>, std::vector<std::vector<int>>> B;
};

inline DecreasingSequences decreasing_sequences(int n)
{
    if (n < 1 || n > 7)
        throw std::invalid_argument("decreasing_sequences supports 1 <= n <= 7");
    DecreasingSequences d;
    d.A = sequences_A(n - 1);
    for (const auto& a : d.A)
        d.B[a] = sequences_B(a);
    return d;
}

// ---------------------------------------------------------------------------
// Multiplicities; 0 stands for the star entry.

using GammaType = std::vector<int>;

inline GammaType gamma_type(const Perm& w)
{
    const int n = static_cast<int>(w.size());
    GammaType g(n, 0);
    if (!n)
        return g;
    int j = n - 1;
    g[j] = w[j];
    for (;;) {
        int i = j - 1;
        while (i >= 0 && w[i] > w[j])
            --i;
        if (i < 0)
            break;
        g[i] = w[i];
        j = i;
    }
    return g;
}

inline std::string gamma_to_string(const GammaType& g)
{
    std::string s;
    bool wide = false;
    for (int v : g)
        wide |= v > 9;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (wide && i)
            s += ',';
        s += g[i] ? std::to_string(g[i]) : "*";
    }
    return s;
}

inline GammaType parse_gamma(std::string_view text)
{
    GammaType g;
    if (text.find(',') != std::string_view::npos) {
        for (auto part : detail::split(text, ','))
            g.push_back(part == "*" ? 0 : detail::parse_int(part));
    } else {
        for (char c : text) {
            if (c == '*')
                g.push_back(0);
            else if (c >= '1' && c <= '9')
                g.push_back(c - '0');
            else
                throw std::invalid_argument("gamma text: unexpected character");
        }
    }
    if (g.empty() || !g.back())
        throw std::invalid_argument("gamma must end with a number");
    return g;
}

// The nu-reductions of g, one per nu in 1..g_last (with repeats).
inline std::vector<GammaType> gamma_reductions(const GammaType& g)
{
    const int n = static_cast<int>(g.size());
    std::vector<GammaType> out;
    if (n < 2 || !g.back())
        return out;
    for (int nu = 1; nu <= g.back(); ++nu) {
        GammaType r(g.begin(), g.end() - 1);
        int last = g[n - 2] ? std::min(g[n - 2], nu) : std::min(nu, n - 1);
        for (int i = 0; i < n - 2; ++i)
            if (r[i] && r[i] >= last)
                r[i] = last;
        r[n - 2] = last;
        out.push_back(std::move(r));
    }
    return out;
}

inline Int multiplicity(const GammaType& g)
{
    static thread_local std::map<GammaType, Int> memo;
    if (g.empty() || !g.back())
        throw std::invalid_argument("multiplicity needs a type ending in a number");
    if (g.size() == 1)
        return 1;
    if (auto it = memo.find(g); it != memo.end())
        return it->second;
    Int s = 0;
    for (const auto& r : gamma_reductions(g))
        s += multiplicity(r);
    memo.emplace(g, s);
    return s;
}

// Weakly increasing a with 1 <= a_i <= min(i, w_i).
inline Int count_M(const Perm& w)
{
    const int n = static_cast<int>(w.size());
    std::vector<Int> f(n + 2, 0);  // f[v]: sequences so far ending in v
    f[1] = 1;
    bool first = true;
    for (int i = 0; i < n; ++i) {
        int cap = std::min(i + 1, w[i]);
        std::vector<Int> g(n + 2, 0);
        Int run = 0;
        for (int v = 1; v <= n; ++v) {
            run += first ? Int(v == 1) : f[v];
            if (v <= cap)
                g[v] = run;
        }
        f = std::move(g);
        first = false;
    }
    Int total = 0;
    for (const auto& v : f)
        total += v;
    return n ? total : Int(1);
}

// Sequences with 1 <= a_i <= i.
inline std::vector<GammaType> gamma_prime(int n)
{
    std::vector<GammaType> out;
    GammaType a(n, 1);
    for (;;) {
        out.push_back(a);
        int i = n - 1;
        while (i >= 0 && a[i] == i + 1)
            a[i--] = 1;
        if (i < 0)
            break;
        ++a[i];
    }
    return out;
}

} // namespace nccp
