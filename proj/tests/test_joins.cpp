#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "labelpart/baselines.hpp"
#include "labelpart/two_layer.hpp"
#include "test_util.hpp"

using namespace labelpart;

namespace {

const GridConfig kGrid{{{0, 100}, {0, 100}}, 10, 10};

AdjacencyMap oracle(std::span<const LabeledRect> rects) {
    CostCounters c;
    return brute_force_join(rects, c);
}

}  // namespace

TEST_CASE("two_layer query basics") {
    const GridIndex empty = build_grid(std::vector<LabeledRect>{}, kGrid);
    CostCounters c;
    CHECK(query(empty, {0, {{1, 2}, {1, 2}}}, c).empty());

    const std::vector<LabeledRect> twins{{1, {{5, 8}, {5, 8}}}, {2, {{5, 8}, {5, 8}}}};
    const GridIndex idx = build_grid(twins, kGrid);
    CHECK(query(idx, twins[0], c) == std::vector<LabelId>{2});
    CHECK(query(idx, twins[1], c) == std::vector<LabelId>{1});
}

TEST_CASE("two_layer query equals brute force on random instances") {
    const auto rects = testutil::awkward_instance(500, kGrid.domain, 15.0, 10, 5);
    const GridIndex idx = build_grid(rects, kGrid);
    const AdjacencyMap expected = oracle(rects);
    CostCounters c;
    for (const auto& w : rects) CHECK(query(idx, w, c) == expected.at(w.id));
}

TEST_CASE("two_layer_label_partition examples") {
    const std::vector<LabeledRect> one{{5, {{1, 2}, {1, 2}}}};
    auto [adj1, c1] = two_layer_label_partition(kGrid, one);
    CHECK(adj1 == AdjacencyMap{{5, {}}});

    // Chain a-b-c without a-c.
    const std::vector<LabeledRect> chain{
        {0, {{0, 4}, {0, 4}}}, {1, {{3, 7}, {0, 4}}}, {2, {{6, 9}, {0, 4}}}};
    auto [adj2, c2] = two_layer_label_partition(kGrid, chain);
    CHECK(adj2.at(0) == std::vector<LabelId>{1});
    CHECK(adj2.at(1) == std::vector<LabelId>{0, 2});
    CHECK(adj2.at(2) == std::vector<LabelId>{1});
}

TEST_CASE("two_layer equals brute force at n=2000") {
    const auto rects = testutil::awkward_instance(2000, kGrid.domain, 10.0, 10, 17);
    auto [adj, c] = two_layer_label_partition(kGrid, rects);
    CHECK(adj == oracle(rects));
}

TEST_CASE("two_layer counter dominance over IG") {
    for (const std::uint64_t seed : {3ull, 8ull, 21ull}) {
        const auto rects = testutil::awkward_instance(1500, kGrid.domain, 12.0, 10, seed);
        auto [adj_tl, c_tl] = two_layer_label_partition(kGrid, rects);
        CostCounters c_ig;
        const AdjacencyMap adj_ig = ig_join(rects, kGrid, c_ig);
        CHECK(adj_tl == adj_ig);
        CHECK(c_tl.intersection_tests <= c_ig.intersection_tests);
    }
}

TEST_CASE("two_layer invariant under query order and threads") {
    auto rects = testutil::awkward_instance(800, kGrid.domain, 12.0, 10, 33);
    auto [adj1, c1] = two_layer_label_partition(kGrid, rects);
    std::reverse(rects.begin(), rects.end());
    auto [adj2, c2] = two_layer_label_partition(kGrid, rects);
    auto [adj4, c4] = two_layer_label_partition(kGrid, rects, 4);
    CHECK(adj1 == adj2);
    CHECK(adj1 == adj4);
    CHECK(c2.intersection_tests == c4.intersection_tests);
}

TEST_CASE("brute force pair count") {
    const auto rects = testutil::awkward_instance(100, kGrid.domain, 10.0, 10, 2);
    CostCounters c;
    brute_force_join(rects, c);
    CHECK(c.intersection_tests == 4950);

    const std::vector<LabeledRect> disjoint{{0, {{0, 1}, {0, 1}}}, {1, {{5, 6}, {5, 6}}}};
    CostCounters c2;
    const auto adj = brute_force_join(disjoint, c2);
    CHECK(adj.at(0).empty());
    CHECK(adj.at(1).empty());

    const std::vector<LabeledRect> tri{
        {0, {{0, 2}, {0, 2}}}, {1, {{1, 3}, {1, 3}}}, {2, {{1, 2}, {1, 2}}}};
    CostCounters c3;
    const auto adj3 = brute_force_join(tri, c3);
    for (LabelId i = 0; i < 3; ++i) CHECK(adj3.at(i).size() == 2);
}

TEST_CASE("rtree join") {
    CostCounters c;
    const std::vector<LabeledRect> one{{0, {{1, 2}, {1, 2}}}};
    CHECK(rtree_join(one, c) == AdjacencyMap{{0, {}}});

    const auto rects = testutil::awkward_instance(2000, kGrid.domain, 10.0, 10, 9);
    CostCounters c2;
    CHECK(rtree_join(rects, c2) == oracle(rects));

    // All-identical rects.
    std::vector<LabeledRect> same;
    for (LabelId i = 0; i < 50; ++i) same.push_back({i, {{10, 20}, {10, 20}}});
    CostCounters c3;
    const auto adj = rtree_join(same, c3);
    for (LabelId i = 0; i < 50; ++i) CHECK(adj.at(i).size() == 49);
}

TEST_CASE("rtree bulk load shape") {
    const auto rects = testutil::awkward_instance(1000, kGrid.domain, 10.0, 10, 4);
    const RTreeIndex tree(rects, 16);
    CHECK(tree.height() >= 2);
    CostCounters c;
    std::size_t total = 0;
    for (const auto& w : rects) total += tree.search(w, c).size();
    CHECK(total > 0);
}

TEST_CASE("ig join reference-point dedup") {
    // Pair overlapping across a tile boundary: reported once.
    const std::vector<LabeledRect> cross{{0, {{8, 14}, {2, 6}}}, {1, {{12, 18}, {3, 5}}}};
    CostCounters c;
    const auto adj = ig_join(cross, kGrid, c);
    CHECK(adj.at(0) == std::vector<LabelId>{1});
    CHECK(adj.at(1) == std::vector<LabelId>{0});

    // Pair inside one tile.
    const std::vector<LabeledRect> inside{{0, {{2, 4}, {2, 4}}}, {1, {{3, 5}, {3, 5}}}};
    CostCounters c2;
    const auto adj2 = ig_join(inside, kGrid, c2);
    CHECK(adj2.at(0) == std::vector<LabelId>{1});
}

TEST_CASE("ig equals brute force at n=2000") {
    const auto rects = testutil::awkward_instance(2000, kGrid.domain, 10.0, 10, 29);
    CostCounters c;
    CHECK(ig_join(rects, kGrid, c) == oracle(rects));
}

TEST_CASE("reference point falls in exactly one visited tile per pair") {
    const auto rects = testutil::awkward_instance(400, kGrid.domain, 18.0, 10, 55);
    const IGIndex index(kGrid, rects);
    const AdjacencyMap expected = oracle(rects);
    for (const auto& w : rects) {
        // Count, over all tiles in w's range, how often each intersecting
        // candidate passes the reference-point test.
        std::map<LabelId, int> hits;
        const auto range = tile_range(w.rect, kGrid);
        REQUIRE(range.has_value());
        const auto [lo, hi] = *range;
        for (int iy = lo.iy; iy <= hi.iy; ++iy) {
            for (int ix = lo.ix; ix <= hi.ix; ++ix) {
                for (const auto& cand : index.tile({ix, iy})) {
                    if (cand.id == w.id || !rect_intersects(w.rect, cand.rect)) continue;
                    const double rx = std::max(w.rect.x.lo, cand.rect.x.lo);
                    const double ry = std::max(w.rect.y.lo, cand.rect.y.lo);
                    if (tile_of_coord(rx, 0.0, 10.0, 10) == ix &&
                        tile_of_coord(ry, 0.0, 10.0, 10) == iy)
                        ++hits[cand.id];
                }
            }
        }
        for (const auto& [id, n] : hits) CHECK(n == 1);
        CHECK(hits.size() == expected.at(w.id).size());
    }
}

TEST_CASE("all joins agree across methods and thread counts") {
    const auto rects = testutil::awkward_instance(1200, kGrid.domain, 14.0, 10, 77);
    const AdjacencyMap expected = oracle(rects);
    CostCounters c1, c2;
    auto [tl, ctl] = two_layer_label_partition(kGrid, rects, 3);
    CHECK(tl == expected);
    CHECK(ig_join(rects, kGrid, c1, 3) == expected);
    CHECK(rtree_join(rects, c2, 3) == expected);
}
