#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "nccp/numbers.hpp"
#include "nccp/partition.hpp"

using namespace nccp;

namespace {

using SetPartition = std::set<std::set<int>>;

// Restricted growth strings: every set partition of [n] once.
std::vector<SetPartition> set_partitions(int n)
{
    std::vector<SetPartition> out;
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> go = [&](int i, int used) {
        if (i == n) {
            std::vector<std::set<int>> b(used);
            for (int x = 0; x < n; ++x)
                b[rgs[x]].insert(x + 1);
            out.emplace_back(b.begin(), b.end());
            return;
        }
        for (int v = 0; v <= used && v < n; ++v) {
            rgs[i] = v;
            go(i + 1, std::max(used, v + 1));
        }
    };
    go(0, 0);
    return out;
}

// Chords between consecutive block elements must not interleave.
bool chords_noncrossing(const SetPartition& p)
{
    std::vector<std::pair<int, int>> ch;
    for (const auto& b : p)
        for (auto it = b.begin(); std::next(it) != b.end(); ++it)
            ch.emplace_back(*it, *std::next(it));
    for (auto [a, b] : ch)
        for (auto [c, d] : ch)
            if (a < c && c < b && b < d)
                return false;
    return true;
}

SetPartition as_sets(const Partition& p)
{
    SetPartition s;
    for (const auto& b : p.blocks())
        s.emplace(b.begin(), b.end());
    return s;
}

} // namespace

TEST(Partition, ParseAndPrint)
{
    auto p = parse("24/3/1");
    EXPECT_EQ(p.n(), 4);
    EXPECT_EQ(p.word(), (Perm{2, 4, 3, 1}));
    EXPECT_EQ(to_string(p), "2,4/3/1");
    EXPECT_EQ(to_string(p, true), "24/3/1");
    EXPECT_EQ(parse("2,4/3/1"), p);
    EXPECT_EQ(to_string(parse("10/9/8/7/6/5/4/3/2/1")), "10/9/8/7/6/5/4/3/2/1");
    EXPECT_EQ(p.type(), (std::vector<int>{2, 1, 1}));
    EXPECT_EQ(p.rank(), 1);
}

TEST(Partition, RejectsMalformedInput)
{
    EXPECT_THROW(parse(""), std::invalid_argument);
    EXPECT_THROW(parse("13/2/4"), std::invalid_argument);  // 2 < 4 would merge
    EXPECT_THROW(parse("21"), std::invalid_argument);
    EXPECT_THROW(parse("1/1"), std::invalid_argument);
    EXPECT_THROW(parse("1/3"), std::invalid_argument);
    EXPECT_THROW(Partition::from_permutation({}), std::invalid_argument);
}

TEST(Partition, BlocksAreDescentRuns)
{
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Perm& w) {
            auto p = Partition::from_permutation(w);
            ASSERT_EQ(p.word(), w);
            ASSERT_EQ(Partition::from_blocks(p.blocks()), p);
            for (std::size_t b = 1; b < p.blocks().size(); ++b)
                ASSERT_GT(p.blocks()[b - 1].back(), p.blocks()[b].front());
        });
}

TEST(Partition, FamilySizes)
{
    for (int n = 1; n <= 7; ++n) {
        EXPECT_EQ(Int(enumerate(n).size()), factorial(n));
        EXPECT_EQ(Int(enumerate(n, Family::ncp).size()), catalan(n));
        EXPECT_EQ(Int(enumerate(n, Family::nccp312).size()), catalan(n));
        EXPECT_EQ(Int(enumerate(n, Family::nccp132).size()), catalan(n));
    }
    EXPECT_THROW(enumerate(0), std::invalid_argument);
    EXPECT_EQ(enumerate(3).size(), 6u);
}

TEST(Partition, NoncrossingMatchesSetPartitionOracle)
{
    for (int n = 1; n <= 7; ++n) {
        std::set<SetPartition> want, got;
        for (const auto& s : set_partitions(n))
            if (chords_noncrossing(s))
                want.insert(s);
        for (const auto& p : enumerate(n, Family::ncp)) {
            ASSERT_TRUE(is_canonical(p));
            got.insert(as_sets(p));
        }
        EXPECT_EQ(got, want) << "n=" << n;
    }
}

TEST(Partition, CensusMatchesVendoredTables)
{
    // Eulerian and Narayana rows, n = 7.
    const std::vector<int> eulerian7{1, 120, 1191, 2416, 1191, 120, 1};
    const std::vector<int> narayana7{1, 21, 105, 175, 105, 21, 1};
    std::vector<int> all(8, 0), ncp(8, 0);
    for (const auto& p : enumerate(7))
        ++all[p.block_count()];
    for (const auto& p : enumerate(7, Family::ncp))
        ++ncp[p.block_count()];
    for (int l = 1; l <= 7; ++l) {
        EXPECT_EQ(all[l], eulerian7[l - 1]);
        EXPECT_EQ(ncp[l], narayana7[l - 1]);
    }
}

TEST(Partition, PatternAvoidance)
{
    EXPECT_FALSE(avoids(Perm{3, 1, 2}, Pattern::p312));
    EXPECT_TRUE(avoids(Perm{1, 3, 2}, Pattern::p312));
    EXPECT_FALSE(avoids(Perm{1, 3, 2}, Pattern::p132));
    EXPECT_FALSE(avoids(Perm{4, 1, 5, 3, 2}, Pattern::p312));
    EXPECT_TRUE(avoids(parse("24/3/1"), Pattern::p312));
    EXPECT_EQ(parse_pattern("132"), Pattern::p132);
    EXPECT_THROW(parse_pattern("123"), std::invalid_argument);
}

TEST(Partition, InversionsAndExtremes)
{
    EXPECT_EQ(inversions(Perm{2, 4, 3, 1}), 4);
    EXPECT_EQ(top(4), parse("1234"));
    EXPECT_EQ(bottom(4), parse("4/3/2/1"));
    EXPECT_EQ(top(4).rank(), 3);
    EXPECT_EQ(bottom(4).rank(), 0);
}
