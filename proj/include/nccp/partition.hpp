#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nccp {

using Perm = std::vector<int>;

// An ordered list of increasing blocks over [n] such that consecutive blocks
// always meet at a descent. Equivalent to a permutation cut at its descents.
class Partition {
public:
    Partition() = default;

    static Partition from_permutation(const Perm& w)
    {
        check_permutation(w);
        Partition p;
        p.n_ = static_cast<int>(w.size());
        p.word_ = w;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i == 0 || w[i - 1] > w[i])
                p.blocks_.emplace_back();
            p.blocks_.back().push_back(w[i]);
        }
        return p;
    }

    static Partition from_blocks(const std::vector<std::vector<int>>& blocks)
    {
        Perm w;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty())
                throw std::invalid_argument("empty block");
            for (std::size_t j = 1; j < blocks[b].size(); ++j)
                if (blocks[b][j - 1] >= blocks[b][j])
                    throw std::invalid_argument("block is not increasing");
            if (b > 0 && blocks[b - 1].back() < blocks[b].front())
                throw std::invalid_argument("adjacent blocks violate max > min");
            w.insert(w.end(), blocks[b].begin(), blocks[b].end());
        }
        return from_permutation(w);
    }

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const Perm& word() const { return word_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int rank() const { return n_ - block_count(); }

    std::vector<int> type() const
    {
        std::vector<int> s;
        for (const auto& b : blocks_)
            s.push_back(static_cast<int>(b.size()));
        return s;
    }

    // block index of each label, 1-based labels
    std::vector<int> block_of() const
    {
        std::vector<int> id(n_ + 1, -1);
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (int x : blocks_[b])
                id[x] = static_cast<int>(b);
        return id;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.word_ == b.word_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        if (a.n_ != b.n_)
            return a.n_ <=> b.n_;
        return a.word_ <=> b.word_;
    }

    static void check_permutation(const Perm& w)
    {
        const int n = static_cast<int>(w.size());
        if (n == 0)
            throw std::invalid_argument("empty permutation");
        std::vector<char> seen(n + 1, 0);
        for (int x : w) {
            if (x < 1 || x > n)
                throw std::invalid_argument("element out of range: " + std::to_string(x));
            if (seen[x]++)
                throw std::invalid_argument("duplicate element: " + std::to_string(x));
        }
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    Perm word_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const
    {
        std::size_t h = 0;
        for (int x : p.word())
            h = h * 31 + static_cast<std::size_t>(x);
        return h;
    }
};

inline Partition from_permutation(const Perm& w) { return Partition::from_permutation(w); }
inline Perm to_permutation(const Partition& p) { return p.word(); }

// Comma form is canonical; compact form concatenates digits and needs n <= 9.
inline std::string to_string(const Partition& p, bool compact = false)
{
    if (compact && p.n() > 9)
        compact = false;
    std::string s;
    for (std::size_t b = 0; b < p.blocks().size(); ++b) {
        if (b)
            s += '/';
        for (std::size_t j = 0; j < p.blocks()[b].size(); ++j) {
            if (j && !compact)
                s += ',';
            s += std::to_string(p.blocks()[b][j]);
        }
    }
    return s;
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

inline int parse_int(std::string_view t)
{
    if (t.empty())
        throw std::invalid_argument("empty element");
    int v = 0;
    for (char c : t) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad character '" + std::string(1, c) + "'");
        v = v * 10 + (c - '0');
        if (v > 1000000)
            throw std::invalid_argument("element too large");
    }
    return v;
}

} // namespace detail

inline Partition parse(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == ' ' || text.back() == '\r'))
        text.remove_suffix(1);
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    if (text.empty())
        throw std::invalid_argument("empty partition");
    const auto parts = detail::split(text, '/');
    const bool commas = text.find(',') != std::string_view::npos;
    std::size_t digits = 0;
    for (char c : text)
        digits += (c >= '0' && c <= '9');

    std::vector<std::vector<int>> blocks;
    for (auto part : parts) {
        std::vector<int> block;
        if (commas || digits > 9) {
            for (auto tok : detail::split(part, ','))
                block.push_back(detail::parse_int(tok));
        } else {
            if (part.empty())
                throw std::invalid_argument("empty block");
            for (char c : part)
                block.push_back(detail::parse_int(std::string_view(&c, 1)));
        }
        blocks.push_back(std::move(block));
    }
    return Partition::from_blocks(blocks);
}

inline bool is_noncrossing(const Partition& p)
{
    const int n = p.n();
    const auto id = p.block_of();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (id[a] == id[b])
                continue;
            for (int c = b + 1; c <= n; ++c) {
                if (id[c] != id[a])
                    continue;
                for (int d = c + 1; d <= n; ++d)
                    if (id[d] == id[b])
                        return false;
            }
        }
    return true;
}

inline bool is_canonical(const Partition& p)
{
    const auto& bl = p.blocks();
    for (std::size_t i = 1; i < bl.size(); ++i)
        if (bl[i].front() >= bl[i - 1].front())
            return false;
    return true;
}

enum class Pattern { p312, p132 };

inline bool avoids(const Perm& w, Pattern pat)
{
    const int n = static_cast<int>(w.size());
    // For each middle position j, look for i < j < k forming the pattern.
    for (int j = 1; j + 1 < n; ++j)
        for (int i = 0; i < j; ++i)
            for (int k = j + 1; k < n; ++k) {
                if (pat == Pattern::p312 && w[j] < w[k] && w[k] < w[i])
                    return false;
                if (pat == Pattern::p132 && w[i] < w[k] && w[k] < w[j])
                    return false;
            }
    return true;
}

inline bool avoids(const Partition& p, Pattern pat) { return avoids(p.word(), pat); }

inline Pattern parse_pattern(std::string_view s)
{
    if (s == "312")
        return Pattern::p312;
    if (s == "132")
        return Pattern::p132;
    throw std::invalid_argument("unsupported pattern: " + std::string(s));
}

enum class Family { nccp, ncp, nccp312, nccp132 };

inline Family parse_family(std::string_view s)
{
    if (s == "nccp" || s == "NCCP")
        return Family::nccp;
    if (s == "ncp" || s == "NCP")
        return Family::ncp;
    if (s == "nccp312" || s == "NCCP312")
        return Family::nccp312;
    if (s == "nccp132" || s == "NCCP132")
        return Family::nccp132;
    throw std::invalid_argument("unknown class: " + std::string(s));
}

inline bool belongs(const Partition& p, Family f)
{
    switch (f) {
    case Family::nccp: return true;
    case Family::ncp: return is_canonical(p) && is_noncrossing(p);
    case Family::nccp312: return avoids(p, Pattern::p312);
    case Family::nccp132: return avoids(p, Pattern::p132);
    }
    return false;
}

// Visits every permutation of [n] in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f)
{
    Perm w(n);
    std::iota(w.begin(), w.end(), 1);
    do
        f(static_cast<const Perm&>(w));
    while (std::next_permutation(w.begin(), w.end()));
}

inline std::vector<Partition> enumerate(int n, Family f = Family::nccp)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    if (n > 10)
        throw std::invalid_argument("n too large for exhaustive enumeration");
    std::vector<Partition> out;
    for_each_permutation(n, [&](const Perm& w) {
        auto p = Partition::from_permutation(w);
        if (belongs(p, f))
            out.push_back(std::move(p));
    });
    return out;
}

inline long long inversions(const Perm& w)
{
    long long c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            c += w[i] > w[j];
    return c;
}

inline long long inversions(const Partition& p) { return inversions(p.word()); }

inline Partition top(int n)
{
    Perm w(n);
    std::iota(w.begin(), w.end(), 1);
    return Partition::from_permutation(w);
}

inline Partition bottom(int n)
{
    Perm w(n);
    for (int i = 0; i < n; ++i)
        w[i] = n - i;
    return Partition::from_permutation(w);
}

} // namespace nccp
