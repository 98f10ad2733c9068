#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "nccp/kary.hpp"
#include "nccp/numbers.hpp"

using namespace nccp;

namespace {

using Tiles = std::vector<DyckTile>;

// Brute force: every region between the base path and an upper path, filled
// in every way by tiles of any m-Dyck ribbon shape, kept when cover-inclusive.
// Non-lowest shapes are recorded with size -1 so they cannot match.
std::set<Tiles> brute_force_tilings(int n, int m)
{
    std::vector<std::vector<int>> shapes;  // 0 = up, 1 = right
    for (int s = 0; s < n; ++s) {
        std::vector<int> v;
        std::function<void(int, int)> go = [&](int u, int r) {
            if (u == s && r == m * s) {
                shapes.push_back(v);
                return;
            }
            if (u < s) {
                v.push_back(0);
                go(u + 1, r);
                v.pop_back();
            }
            if (r < m * u) {
                v.push_back(1);
                go(u, r + 1);
                v.pop_back();
            }
        };
        go(0, 0);
    }
    auto cells = [](int x, int y, const std::vector<int>& sh) {
        std::vector<Cell> c{{x, y}};
        for (int st : sh) {
            st ? ++x : ++y;
            c.push_back({x, y});
        }
        return c;
    };
    auto lowest = [&](const std::vector<int>& sh) {
        std::vector<int> low;
        for (std::size_t u = 0; u < sh.size() / (m + 1); ++u) {
            low.push_back(0);
            low.insert(low.end(), m, 1);
        }
        return low == sh;
    };

    std::set<Tiles> out;
    std::vector<int> left(n, 0);
    std::function<void(int)> regions = [&](int y) {
        if (y < n) {
            for (int v = y ? left[y - 1] : 0; v <= m * y; ++v) {
                left[y] = v;
                regions(y + 1);
            }
            return;
        }
        std::set<Cell> region;
        for (int r = 0; r < n; ++r)
            for (int x = left[r]; x < m * r; ++x)
                region.insert({x, r});
        std::map<Cell, int> owner;
        std::vector<std::pair<std::vector<Cell>, DyckTile>> placed;
        std::function<void()> fill = [&]() {
            auto it = std::find_if(region.begin(), region.end(), [&](const Cell& c) { return !owner.count(c); });
            if (it == region.end()) {
                for (const auto& [cs, tile] : placed) {
                    std::set<int> hit;
                    for (auto c : cs) {
                        Cell d{c.x + 1, c.y - 1};
                        if (d.x >= m * d.y)
                            hit.insert(-1);
                        else if (owner.count(d))
                            hit.insert(owner[d]);
                        else
                            return;
                    }
                    if (hit.size() != 1)
                        return;
                }
                Tiles t;
                for (const auto& p : placed)
                    t.push_back(p.second);
                std::sort(t.begin(), t.end());
                out.insert(t);
                return;
            }
            const Cell c = *it;
            for (const auto& sh : shapes) {
                auto cs = cells(c.x, c.y, sh);
                bool ok = true;
                for (auto d : cs)
                    ok &= region.count(d) && !owner.count(d);
                if (!ok)
                    continue;
                const int size = static_cast<int>(sh.size()) / (m + 1);
                for (auto d : cs)
                    owner[d] = static_cast<int>(placed.size());
                placed.push_back({cs, {c.x, c.y, lowest(sh) ? size : -1}});
                fill();
                placed.pop_back();
                for (auto d : cs)
                    owner.erase(d);
            }
        };
        fill();
    };
    regions(0);
    return out;
}

} // namespace

TEST(Tiling, MatchesBruteForce)
{
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {2, 2}, {3, 2},
                                                         {4, 2}, {3, 3}}) {
        const auto want = brute_force_tilings(n, m);
        std::set<Tiles> got;
        for_each_height(n, m + 1, [&](const std::vector<int>& h) {
            auto t = tiling_from_height(h, m + 1);
            ASSERT_NO_THROW(validate(t));
            ASSERT_EQ(height_from_tiling(t), h);
            auto tiles = t.tiles;
            std::sort(tiles.begin(), tiles.end());
            got.insert(tiles);
        });
        EXPECT_EQ(Int(want.size()), kary_product(n, m + 1)) << n << " " << m;
        EXPECT_EQ(got, want) << n << " " << m;
    }
}

TEST(Tiling, FiveStepExample)
{
    const auto t = tiling_from_height({0, 0, 3, 6, 6}, 3);
    Tiles want{{0, 1, 0}, {0, 2, 1}, {1, 1, 2}};
    for (int x = 2; x <= 7; ++x)
        want.push_back({x, 4, 0});
    auto got = t.tiles;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
    EXPECT_TRUE(has_nontrivial_tile(t));
    EXPECT_TRUE(has_nontrivial_tiles({0, 0, 3, 6, 6}, 3));
    EXPECT_EQ(trajectories(t).size(), 5u);
}

TEST(Tiling, AsciiPicture)
{
    const auto t = tiling_from_height({0, 1, 2}, 2);
    EXPECT_EQ(to_ascii(t), "bc#\n"
                           "a##\n"
                           "###\n");
}

TEST(Tiling, NontrivialPredicateAndTrivialCount)
{
    for (int k = 2; k <= 4; ++k)
        for (int n = 1; n <= 5; ++n) {
            Int trivial = 0;
            for_each_height(n, k, [&](const std::vector<int>& h) {
                const bool p = has_nontrivial_tiles(h, k);
                trivial += !p;
                ASSERT_EQ(has_nontrivial_tile(tiling_from_height(h, k)), p);
            });
            EXPECT_EQ(trivial, fuss_catalan(n, k));
        }
}

TEST(Tiling, ChainRoundTrip)
{
    for (int k = 2; k <= 3; ++k)
        for (int n = 1; n <= 4; ++n)
            for_each_height(n, k, [&](const std::vector<int>& h) {
                const auto tree = tree_from_height(h, k);
                const auto t = tiling_from_height(h, k);
                ASSERT_EQ(tiling_to_chain(t), chi_partitions(tree));
                if (is_canonical_kary(tree))
                    ASSERT_EQ(chain_to_tiling(chi_partitions(tree)), t);
            });
}

TEST(Tiling, RejectsBadTilings)
{
    DyckTiling t{2, 1, {{0, 1, 0}, {0, 1, 0}}};
    EXPECT_THROW(validate(t), std::invalid_argument);
    DyckTiling below{2, 1, {{1, 1, 0}}};
    EXPECT_THROW(validate(below), std::invalid_argument);
    EXPECT_THROW(tiling_from_height({0, 2}, 2), std::invalid_argument);
}
