#include <gtest/gtest.h>

#include "nccp/io.hpp"

using namespace nccp;

TEST(Json, PartitionRoundTrip)
{
    for (const auto& p : enumerate(5)) {
        auto j = to_json(p);
        ASSERT_EQ(partition_from_json(j), p);
        ASSERT_EQ(partition_from_json(json::parse(j.dump())), p);
    }
    EXPECT_EQ(partition_from_json(json("24/3/1")), parse("24/3/1"));
    EXPECT_EQ(to_json(parse("24/3/1"))["text"], "2,4/3/1");
}

TEST(Json, TreeAndTilingRoundTrip)
{
    for (const auto& t : all_kary_trees(4, 3)) {
        ASSERT_EQ(kary_tree_from_json(to_json(t)), t);
        auto tiling = tiling_from_height(height_sequence(t), 3);
        ASSERT_EQ(tiling_from_json(json::parse(to_json(tiling).dump())), tiling);
    }
    auto j = to_json(tiling_from_height({0, 0, 3, 6, 6}, 3));
    EXPECT_EQ(j["degree"], 2);
    EXPECT_EQ(j["tiles"].size(), 9u);
}

TEST(Json, SeriesRoundTrip)
{
    auto s = series_C(6);
    EXPECT_EQ(series_from_json(json::parse(to_json(s).dump())), s);
}

TEST(Json, HasseExport)
{
    auto j = to_json(build_hasse(4));
    EXPECT_EQ(j["nodes"].size(), 24u);
    EXPECT_EQ(j["edges"].size(), 58u);
}
