#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "nccp/lattice.hpp"

using namespace nccp;

namespace {

using EdgeSet = std::set<std::pair<std::string, std::string>>;

EdgeSet read_edges(const std::string& file, const std::string& tag = "")
{
    std::ifstream in(std::string(NCCP_TEST_DATA) + "/" + file);
    EdgeSet out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string a, b, kind;
        if (!tag.empty()) {
            ls >> kind;
            if (kind != tag)
                continue;
        }
        ls >> a >> b;
        out.emplace(a, b);
    }
    return out;
}

EdgeSet edge_names(const HasseDiagram& h)
{
    EdgeSet s;
    for (const auto& e : h.edges)
        s.emplace(to_string(h.elements[e.lower], true), to_string(h.elements[e.upper], true));
    return s;
}

// Order by search along covers(), independent of OrderTable.
std::set<std::pair<Partition, Partition>> order_by_search(int n)
{
    std::set<std::pair<Partition, Partition>> le;
    for (const auto& p : enumerate(n)) {
        std::vector<Partition> todo{p};
        std::set<Partition> seen{p};
        while (!todo.empty()) {
            auto q = todo.back();
            todo.pop_back();
            le.emplace(p, q);
            for (const auto& r : covers(q))
                if (seen.insert(r).second)
                    todo.push_back(r);
        }
    }
    return le;
}

} // namespace

TEST(Lattice, FourElementDiagramMatchesFixture)
{
    const auto want = read_edges("hasse4_edges.txt");
    ASSERT_EQ(want.size(), 58u);
    const auto h = build_hasse(4);
    EXPECT_EQ(h.elements.size(), 24u);
    EXPECT_EQ(edge_names(h), want);
}

TEST(Lattice, CoversRaiseRankByOne)
{
    for (int n = 1; n <= 6; ++n) {
        const auto h = build_hasse(n);
        for (const auto& e : h.edges)
            ASSERT_EQ(h.rank(e.upper), h.rank(e.lower) + 1);
        EXPECT_EQ(h.elements[h.bottom], bottom(n));
        EXPECT_EQ(h.elements[h.top], top(n));
    }
}

TEST(Lattice, SmallDiagrams)
{
    EXPECT_EQ(build_hasse(1).edges.size(), 0u);
    EXPECT_EQ(build_hasse(2).edges.size(), 1u);
    EXPECT_EQ(build_hasse(3).edges.size(), 8u);
    EXPECT_THROW(build_hasse(0), std::invalid_argument);
}

TEST(Lattice, OrderTableMatchesSearch)
{
    for (int n = 1; n <= 5; ++n) {
        const auto& L = lattice_for(n);
        const auto want = order_by_search(n);
        std::size_t count = 0;
        for (std::size_t a = 0; a < L.size(); ++a)
            for (std::size_t b = 0; b < L.size(); ++b)
                if (L.leq(static_cast<int>(a), static_cast<int>(b))) {
                    ++count;
                    ASSERT_TRUE(want.count({L.at(a), L.at(b)}));
                }
        EXPECT_EQ(count, want.size());
    }
}

TEST(Lattice, WorkedJoinsAndMeets)
{
    const auto a = parse("23/14");
    EXPECT_EQ(join(a, parse("4/23/1")), parse("1234"));
    EXPECT_EQ(meet(a, parse("4/23/1")), parse("4/3/2/1"));
    EXPECT_EQ(join(a, parse("24/3/1")), a);
    EXPECT_EQ(meet(a, parse("24/3/1")), parse("24/3/1"));
}

TEST(Lattice, BoundsAreExactUpToThree)
{
    for (int n = 1; n <= 3; ++n) {
        const auto& L = lattice_for(n);
        for (std::size_t a = 0; a < L.size(); ++a)
            for (std::size_t b = 0; b < L.size(); ++b) {
                int x = static_cast<int>(a), y = static_cast<int>(b);
                ASSERT_EQ(L.join(x, y), L.least_upper_bound(x, y));
                ASSERT_EQ(L.meet(x, y), L.greatest_lower_bound(x, y));
            }
    }
}

// The order generated by rotations has pairs with two minimal upper bounds
// from n = 4 on.
TEST(Lattice, NotALatticeFromFour)
{
    const auto& L = lattice_for(4);
    const int a = L.index(parse("3/2/14")), b = L.index(parse("3/24/1"));
    EXPECT_EQ(L.least_upper_bound(a, b), -1);
    EXPECT_TRUE(L.leq(parse("3/2/14"), parse("3/124")));
    EXPECT_TRUE(L.leq(parse("3/24/1"), parse("13/24")));
    EXPECT_TRUE(L.leq(parse("3/24/1"), parse("3/124")));
    EXPECT_TRUE(L.leq(parse("3/2/14"), parse("13/24")));
    int missing = 0;
    for (std::size_t x = 0; x < L.size(); ++x)
        for (std::size_t y = x + 1; y < L.size(); ++y)
            missing += L.least_upper_bound(static_cast<int>(x), static_cast<int>(y)) < 0;
    EXPECT_EQ(missing, 2);
}

TEST(Lattice, RestrictedOrderIsInduced)
{
    for (int n = 1; n <= 5; ++n) {
        const auto r = build_hasse(n, Family::nccp312);
        const OrderTable le(r);
        const auto& L = lattice_for(n);
        for (std::size_t a = 0; a < r.elements.size(); ++a)
            for (std::size_t b = 0; b < r.elements.size(); ++b)
                ASSERT_EQ(le(static_cast<int>(a), static_cast<int>(b)), L.leq(r.elements[a], r.elements[b]));
    }
}

TEST(Lattice, KrewerasCoversMatchFixture)
{
    const auto want = read_edges("kreweras4_pairing.txt", "edge");
    EXPECT_EQ(edge_names(build_hasse(4, Family::nccp312)), want);
    for (int n = 1; n <= 6; ++n)
        EXPECT_TRUE(kreweras_iso_check(n)) << "n=" << n;
}

TEST(Lattice, RefinementCoversMergeTwoBlocks)
{
    for (int n = 2; n <= 6; ++n)
        for (const auto& l : enumerate(n, Family::ncp))
            for (const auto& u : refinement_covers(l)) {
                ASSERT_EQ(u.block_count(), l.block_count() - 1);
                ASSERT_TRUE(refines(l, u));
                ASSERT_TRUE(is_noncrossing(u) && is_canonical(u));
            }
}

TEST(Lattice, RightLeftProfilesDetermineTheTree)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : enumerate(n))
            ASSERT_EQ(phi(tree_from_rl(rl_profile(p))), p);
}

TEST(Lattice, DotLabels)
{
    const auto h = build_hasse(3);
    const auto dot = to_dot(h, LabelStyle::refined);
    EXPECT_NE(dot.find("n1 -> n0 [label=\"(2,3)\"]"), std::string::npos);
    EXPECT_EQ(to_dot(h, LabelStyle::refined), dot);
}
