#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "partition.hpp"
#include "tree.hpp"

namespace nccp {

inline Partition bar(const Partition& p)
{
    const int n = p.n();
    Perm w(p.word());
    for (int& x : w)
        x = n + 1 - x;
    return Partition::from_permutation(w);
}

inline bool is_ncp(const Partition& p) { return is_canonical(p) && is_noncrossing(p); }

// ---------------------------------------------------------------------------
// Circle with points 1..n clockwise; gap i sits between point i and i+1
// (gap n between n and 1).

enum class Priming {
    counter_clockwise,  // 1' at gap n, then counter-clockwise
    clockwise,          // 1' at gap 1, then clockwise
};

struct CircularPresentation {
    int n = 0;
    std::vector<std::pair<int, int>> chords;  // (x,y) with x < y
    std::vector<int> loops;                   // singleton blocks

    // Chord (x,y) separates gap i from the rest when x <= i < y.
    static bool inside(const std::pair<int, int>& c, int gap) { return c.first <= gap && gap < c.second; }

    // Gaps grouped by the region of the disk they open onto.
    std::vector<std::vector<int>> gap_regions() const
    {
        std::map<std::vector<char>, std::vector<int>> by_sig;
        for (int g = 1; g <= n; ++g) {
            std::vector<char> sig;
            sig.reserve(chords.size());
            for (const auto& c : chords)
                sig.push_back(inside(c, g));
            by_sig[sig].push_back(g);
        }
        std::vector<std::vector<int>> out;
        for (auto& [sig, gaps] : by_sig)
            out.push_back(std::move(gaps));
        return out;
    }

    bool chords_cross() const
    {
        for (std::size_t i = 0; i < chords.size(); ++i)
            for (std::size_t j = i + 1; j < chords.size(); ++j) {
                auto [a, b] = chords[i];
                auto [c, d] = chords[j];
                if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
                    return true;
            }
        return false;
    }
};

inline int prime_at_gap(int n, int gap, Priming pr)
{
    if (pr == Priming::clockwise)
        return gap;
    return gap == n ? 1 : n + 1 - gap;
}

inline CircularPresentation circular_presentation(const Partition& lambda)
{
    CircularPresentation c;
    c.n = lambda.n();
    for (auto b : lambda.blocks()) {
        std::sort(b.begin(), b.end());
        if (b.size() == 1) {
            c.loops.push_back(b[0]);
            continue;
        }
        for (std::size_t j = 0; j + 1 < b.size(); ++j)
            c.chords.emplace_back(b[j], b[j + 1]);
        if (b.size() > 2)
            c.chords.emplace_back(b.front(), b.back());
    }
    return c;
}

inline Partition region_complement(const Partition& lambda, Priming pr)
{
    if (!is_ncp(lambda))
        throw std::invalid_argument("complement maps need a noncrossing canonical partition");
    auto c = circular_presentation(lambda);
    std::vector<std::vector<int>> blocks;
    for (const auto& gaps : c.gap_regions()) {
        std::vector<int> b;
        for (int g : gaps)
            b.push_back(prime_at_gap(c.n, g, pr));
        blocks.push_back(std::move(b));
    }
    return canonical_from_sets(std::move(blocks));
}

inline Partition alpha_prime(const Partition& lambda) { return region_complement(lambda, Priming::counter_clockwise); }

inline Partition kreweras_c(const Partition& lambda) { return region_complement(lambda, Priming::clockwise); }

inline Partition alpha(const Partition& pi)
{
    if (!avoids(pi, Pattern::p312))
        throw std::invalid_argument("alpha needs a 312-avoiding partition");
    return phi(psi_inv(bar(pi)));
}

// i -> i + k (mod n) on every block, then canonical order.
inline Partition cyclic_shift(const Partition& lambda, int k)
{
    const int n = lambda.n();
    std::vector<std::vector<int>> blocks;
    for (const auto& b : lambda.blocks()) {
        std::vector<int> s;
        for (int x : b)
            s.push_back(((x - 1 + k) % n + n) % n + 1);
        blocks.push_back(std::move(s));
    }
    return canonical_from_sets(std::move(blocks));
}

struct BetaResult {
    Partition value;
    bool ncp_guaranteed = false;  // input avoided 312
};

// Repeatedly peels off the increasing run that starts at the minimum and
// collects block maxima while walking left.
inline BetaResult beta(const Partition& omega)
{
    std::vector<int> w(omega.word());
    std::vector<std::vector<int>> runs;
    while (!w.empty()) {
        auto pos = std::min_element(w.begin(), w.end()) - w.begin();
        std::vector<int> lam{w[pos]};
        std::vector<char> take(w.size(), 0);
        take[pos] = 1;
        for (auto i = pos - 1; i >= 0; --i) {
            bool block_max = w[i] > w[i + 1];  // descent right after i
            if (block_max && w[i] > lam.back()) {
                lam.push_back(w[i]);
                take[i] = 1;
            }
        }
        std::vector<int> rest;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!take[i])
                rest.push_back(w[i]);
        w = std::move(rest);
        runs.push_back(std::move(lam));
    }
    BetaResult r{canonical_from_sets(std::move(runs)), avoids(omega, Pattern::p312)};
    return r;
}

// Mirror through the axis at point 1: i -> n + 2 - i (mod n).
inline bool is_symmetric(const Partition& lambda)
{
    const int n = lambda.n();
    std::vector<std::vector<int>> blocks;
    for (const auto& b : lambda.blocks()) {
        std::vector<int> s;
        for (int x : b)
            s.push_back((n + 1 - x) % n + 1);
        blocks.push_back(std::move(s));
    }
    return canonical_from_sets(std::move(blocks)) == canonical_from_sets(lambda.blocks());
}

struct DiagramMismatch {
    Partition input;
    Partition left, right;
};

// alpha' o varphi = bar and varphi o alpha = bar on 312-avoiding elements.
inline std::vector<DiagramMismatch> alpha_diagram_mismatches(int n)
{
    std::vector<DiagramMismatch> out;
    for (const auto& pi : enumerate(n, Family::nccp312)) {
        Partition b = bar(pi);
        Partition via_prime = alpha_prime(varphi(pi));
        Partition via_alpha = varphi(alpha(pi));
        if (!(via_prime == b))
            out.push_back({pi, via_prime, b});
        else if (!(via_alpha == b))
            out.push_back({pi, via_alpha, b});
    }
    return out;
}

// c o varphi = beta on 312-avoiding elements.
inline std::vector<DiagramMismatch> beta_diagram_mismatches(int n)
{
    std::vector<DiagramMismatch> out;
    for (const auto& pi : enumerate(n, Family::nccp312)) {
        Partition lhs = kreweras_c(varphi(pi));
        Partition rhs = beta(pi).value;
        if (!(lhs == rhs))
            out.push_back({pi, lhs, rhs});
    }
    return out;
}

inline bool alpha_diagram_check(int n) { return alpha_diagram_mismatches(n).empty(); }
inline bool beta_diagram_check(int n) { return beta_diagram_mismatches(n).empty(); }

// Points on a circle, solid chords for lambda and dashed for its image under
// the chosen complement (drawn between primed points).
inline std::string to_svg(const Partition& lambda, Priming pr)
{
    const int n = lambda.n();
    const double pi = 3.14159265358979323846;
    auto at = [&](double slot, double r) {
        // slot 0 = point 1 at twelve o'clock, half slots are gaps, clockwise
        double t = 2 * pi * slot / n;
        return std::make_pair(150 + r * std::sin(t), 150 - r * std::cos(t));
    };
    auto point = [&](int i) { return at(i - 1, 120); };
    auto prime = [&](int j) {
        for (int g = 1; g <= n; ++g)
            if (prime_at_gap(n, g, pr) == j)
                return at(g - 0.5, 120);
        return at(0, 0);
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"300\" height=\"300\">\n";
    os << "<circle cx=\"150\" cy=\"150\" r=\"120\" fill=\"none\" stroke=\"#999\"/>\n";
    auto line = [&](std::pair<double, double> a, std::pair<double, double> b, bool dashed) {
        os << "<line x1=\"" << a.first << "\" y1=\"" << a.second << "\" x2=\"" << b.first << "\" y2=\""
           << b.second << "\" stroke=\"black\"" << (dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
    };
    for (const auto& [x, y] : circular_presentation(lambda).chords)
        line(point(x), point(y), false);
    Partition image = region_complement(lambda, pr);
    for (const auto& [x, y] : circular_presentation(image).chords)
        line(prime(x), prime(y), true);
    for (int i = 1; i <= n; ++i) {
        auto [x, y] = at(i - 1, 134);
        os << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"12\" text-anchor=\"middle\">" << i << "</text>\n";
        auto [px, py] = at(i - 1, 120);
        os << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"3\"/>\n";
    }
    for (int j = 1; j <= n; ++j) {
        auto [x, y] = prime(j);
        os << "<text x=\"" << x << "\" y=\"" << y - 6 << "\" font-size=\"10\" fill=\"#555\" text-anchor=\"middle\">"
           << j << "'</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace nccp
