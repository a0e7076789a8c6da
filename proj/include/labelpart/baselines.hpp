#pragma once

#include <span>
#include <vector>

#include "labelpart/two_layer.hpp"

namespace labelpart {

/// Exact adjacency over all unordered pairs; n(n-1)/2 intersection tests.
AdjacencyMap brute_force_join(std::span<const LabeledRect> rects, CostCounters& counters);

/// Static R-tree bulk-loaded with sort-tile-recursive packing.
class RTreeIndex {
public:
    explicit RTreeIndex(std::span<const LabeledRect> rects, int fan_out = 16);

    /// Entries intersecting w.rect, excluding w.id. Node-rectangle and
    /// entry comparisons both count as intersection tests.
    std::vector<LabelId> search(const LabeledRect& w, CostCounters& counters) const;

    int height() const { return height_; }

private:
    struct Node {
        Rect mbr;
        // leaf: entry range [begin, end) into entries_;
        // inner: child range [begin, end) into the level below.
        std::size_t begin = 0;
        std::size_t end = 0;
        bool leaf = false;
    };

    std::vector<LabeledRect> entries_;
    std::vector<std::vector<Node>> levels_;  // levels_[0] = leaves
    int fan_out_;
    int height_ = 0;
};

AdjacencyMap rtree_join(std::span<const LabeledRect> rects, CostCounters& counters,
                        int n_threads = 1, int fan_out = 16);

/// Inclusion-checking grid: per-tile flat lists, no secondary classes;
/// duplicate pair reports removed by the reference-point rule (the pair
/// counts only in the tile owning the lower-left corner of the
/// intersection rectangle).
class IGIndex {
public:
    IGIndex(GridConfig cfg, std::span<const LabeledRect> rects);

    const GridConfig& config() const { return cfg_; }
    std::span<const LabeledRect> tile(TileId t) const {
        return tiles_[static_cast<std::size_t>(t.iy) * cfg_.tiles_x + t.ix];
    }

    std::vector<LabelId> search(const LabeledRect& w, CostCounters& counters) const;

private:
    GridConfig cfg_;
    std::vector<std::vector<LabeledRect>> tiles_;
};

AdjacencyMap ig_join(std::span<const LabeledRect> rects, const GridConfig& cfg,
                     CostCounters& counters, int n_threads = 1);

}  // namespace labelpart
