#include "labelpart/two_layer.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel_for.hpp"

namespace labelpart {

std::vector<LabelId> query(const GridIndex& index, const LabeledRect& w, CostCounters& counters) {
    std::vector<LabelId> found;
    const auto range = tile_range(w.rect, index.config());
    if (!range) return found;
    const auto [lo, hi] = *range;
    // Class selection reduced to tile-index comparisons: for a clamped w
    // the home tile is lo, and "w starts before tile t" per axis is just
    // t's index exceeding lo's.
    static constexpr int kClassSets[4][5] = {
        {0, 1, 2, 3, -1},  // home tile: all classes
        {0, 2, -1},        // before in y only: {A, C}
        {0, 1, -1},        // before in x only: {A, B}
        {0, -1},           // before in both: {A}
    };
    for (int iy = lo.iy; iy <= hi.iy; ++iy) {
        for (int ix = lo.ix; ix <= hi.ix; ++ix) {
            const TileId t{ix, iy};
            ++counters.tiles_visited;
            const int* classes = kClassSets[(ix != lo.ix) * 2 + (iy != lo.iy)];
            for (; *classes >= 0; ++classes) {
                for (const auto& cand : index.bucket(t, static_cast<SecondaryClass>(*classes))) {
                    ++counters.candidates_examined;
                    ++counters.intersection_tests;
                    if (cand.id != w.id && rect_intersects(w.rect, cand.rect))
                        found.push_back(cand.id);
                }
            }
        }
    }
    // The class-selection criteria must make deduplication unnecessary;
    // a repeat here means they were violated, not something to mask.
    std::sort(found.begin(), found.end());
    if (std::adjacent_find(found.begin(), found.end()) != found.end())
        throw std::logic_error("two_layer::query: candidate reported twice");
    return found;
}

std::pair<AdjacencyMap, CostCounters> two_layer_label_partition(
    const GridConfig& cfg, std::span<const LabeledRect> rects, int n_threads) {
    cfg.check();
    std::vector<LabeledRect> clamped;
    clamped.reserve(rects.size());
    std::vector<LabelId> outside;
    for (const auto& lr : rects) {
        if (auto r = rect_clamp(lr.rect, cfg.domain))
            clamped.push_back({lr.id, *r});
        else
            outside.push_back(lr.id);
    }

    const GridIndex index = build_grid(clamped, cfg);

    std::vector<std::vector<LabelId>> results(clamped.size());
    std::vector<CostCounters> partial(std::max<std::size_t>(1, n_threads));
    detail::parallel_blocks(clamped.size(), n_threads, [&](std::size_t ti, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            results[i] = query(index, clamped[i], partial[ti]);
    });

    AdjacencyMap adj;
    CostCounters total;
    for (const auto& c : partial) total += c;
    for (std::size_t i = 0; i < clamped.size(); ++i)
        adj.emplace(clamped[i].id, std::move(results[i]));
    for (LabelId id : outside) adj.emplace(id, std::vector<LabelId>{});
    return {std::move(adj), total};
}

}  // namespace labelpart
