#include <algorithm>
#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include "nccp/tree.hpp"

using namespace nccp;

namespace {

// Recursive oracle: the minimum is the root, the factors left and right of it
// give the subtrees.
BinaryTree cartesian(const Perm& w)
{
    BinaryTree t(static_cast<int>(w.size()));
    std::function<int(int, int)> build = [&](int lo, int hi) -> int {
        if (lo >= hi)
            return 0;
        int m = static_cast<int>(std::min_element(w.begin() + lo, w.begin() + hi) - w.begin());
        t.set_left(w[m], build(lo, m));
        t.set_right(w[m], build(m + 1, hi));
        return w[m];
    };
    t.root = build(0, static_cast<int>(w.size()));
    t.parent[t.root] = 0;
    return t;
}

} // namespace

TEST(Tree, PhiInverseIsTheCartesianTree)
{
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Perm& w) {
            auto t = phi_inv(w);
            ASSERT_EQ(t, cartesian(w));
            ASSERT_EQ(in_order(t), w);
            ASSERT_EQ(right_edge_count(t), Partition::from_permutation(w).rank());
        });
}

TEST(Tree, TextRoundTrip)
{
    auto t = phi_inv(parse("24/3/1"));
    auto s = to_string(t);
    EXPECT_EQ(parse_tree(s), t);
    for (int n = 1; n <= 5; ++n)
        for_each_permutation(n, [&](const Perm& w) {
            auto u = phi_inv(w);
            ASSERT_EQ(parse_tree(to_string(u)), u) << to_string(u);
        });
    EXPECT_THROW(parse_tree("1(2,"), std::invalid_argument);
}

TEST(Tree, CanonicalTreesMatch312Avoiders)
{
    for (int n = 1; n <= 7; ++n) {
        int canonical = 0;
        for_each_permutation(n, [&](const Perm& w) {
            bool c = is_canonical_tree(phi_inv(w));
            canonical += c;
            ASSERT_EQ(c, avoids(w, Pattern::p312));
        });
        EXPECT_EQ(canonical, static_cast<int>(enumerate(n, Family::ncp).size()));
    }
}

TEST(Tree, KrewerasBijection)
{
    EXPECT_EQ(varphi(parse("24/3/1")), parse("4/23/1"));
    EXPECT_EQ(varphi_inv(parse("78/5/23/146")), parse("23/15/478/6"));
    EXPECT_THROW(varphi(parse("3/12")), std::invalid_argument);
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : enumerate(n, Family::ncp)) {
            auto t = psi_inv(lambda);
            ASSERT_TRUE(is_canonical_tree(t));
            ASSERT_EQ(psi(t), lambda);
            ASSERT_EQ(varphi(varphi_inv(lambda)), lambda);
            // right chains are blocks, so right edges count n - blocks
            ASSERT_EQ(right_edge_count(t), lambda.rank());
        }
}

TEST(Tree, Sequences)
{
    auto t = phi_inv(parse("24/3/1"));  // 1 with left subtree 2(.,3(4,.))
    EXPECT_EQ(t.root, 1);
    EXPECT_EQ(right_extended(t, 2), (std::vector<int>{2, 3}));
    EXPECT_EQ(left_extended(t, 3), (std::vector<int>{3, 4}));
    EXPECT_EQ(lowest_common_ancestor(t, 4, 3), 3);
    EXPECT_TRUE(is_ancestor(t, 2, 3));
}

TEST(Tree, DotExport)
{
    auto dot = to_dot(phi_inv(parse("13/2")));
    EXPECT_NE(dot.find("digraph"), std::string::npos);
}
