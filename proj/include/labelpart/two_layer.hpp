#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "labelpart/grid_index.hpp"

namespace labelpart {

/// Per-label sorted sets of intersecting labels (self excluded).
using AdjacencyMap = std::map<LabelId, std::vector<LabelId>>;

struct CostCounters {
    std::uint64_t intersection_tests = 0;
    std::uint64_t tiles_visited = 0;
    std::uint64_t candidates_examined = 0;

    CostCounters& operator+=(const CostCounters& o) {
        intersection_tests += o.intersection_tests;
        tiles_visited += o.tiles_visited;
        candidates_examined += o.candidates_examined;
        return *this;
    }
};

/// All labels whose stored rect intersects w.rect, each exactly once,
/// found via relevant tiles and relevant secondary classes. Throws
/// std::logic_error if the class-selection criteria ever yield the same
/// candidate twice (checked before deduplication, not hidden by it).
std::vector<LabelId> query(const GridIndex& index, const LabeledRect& w, CostCounters& counters);

/// Algorithm: classify all GMBRs into the grid once, then use each as a
/// search range. Rects are clamped to the domain first; rects entirely
/// outside the domain get an empty adjacency entry. n_threads > 1 runs
/// queries in parallel with exact per-thread counter merging.
std::pair<AdjacencyMap, CostCounters> two_layer_label_partition(
    const GridConfig& cfg, std::span<const LabeledRect> rects, int n_threads = 1);

}  // namespace labelpart
