#include "labelpart/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "parallel_for.hpp"

namespace labelpart {

AdjacencyMap brute_force_join(std::span<const LabeledRect> rects, CostCounters& counters) {
    AdjacencyMap adj;
    for (const auto& lr : rects) adj.emplace(lr.id, std::vector<LabelId>{});
    for (std::size_t i = 0; i < rects.size(); ++i) {
        for (std::size_t j = i + 1; j < rects.size(); ++j) {
            ++counters.intersection_tests;
            if (rect_intersects(rects[i].rect, rects[j].rect)) {
                adj[rects[i].id].push_back(rects[j].id);
                adj[rects[j].id].push_back(rects[i].id);
            }
        }
    }
    for (auto& [id, v] : adj) std::sort(v.begin(), v.end());
    return adj;
}

RTreeIndex::RTreeIndex(std::span<const LabeledRect> rects, int fan_out)
    : entries_(rects.begin(), rects.end()), fan_out_(std::max(2, fan_out)) {
    if (entries_.empty()) return;

    // Sort-tile-recursive packing: slice by x center, pack runs by y center.
    auto str_order = [this](auto& items, auto center_x, auto center_y) {
        const std::size_t n = items.size();
        const std::size_t n_groups = (n + fan_out_ - 1) / fan_out_;
        const std::size_t n_slices = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n_groups))));
        const std::size_t slice_len = n_slices ? (n + n_slices - 1) / n_slices : n;
        std::sort(items.begin(), items.end(),
                  [&](const auto& a, const auto& b) { return center_x(a) < center_x(b); });
        for (std::size_t s = 0; s < n; s += slice_len) {
            const auto end = std::min(n, s + slice_len);
            std::sort(items.begin() + s, items.begin() + end,
                      [&](const auto& a, const auto& b) { return center_y(a) < center_y(b); });
        }
    };

    str_order(
        entries_, [](const LabeledRect& r) { return r.rect.x.midpoint(); },
        [](const LabeledRect& r) { return r.rect.y.midpoint(); });

    // Leaves over packed entries.
    std::vector<Node> level;
    for (std::size_t s = 0; s < entries_.size(); s += fan_out_) {
        const std::size_t end = std::min(entries_.size(), s + fan_out_);
        Rect mbr = entries_[s].rect;
        for (std::size_t i = s + 1; i < end; ++i) mbr = mbr_union(mbr, entries_[i].rect);
        level.push_back({mbr, s, end, true});
    }
    levels_.push_back(std::move(level));

    while (levels_.back().size() > 1) {
        auto& below = levels_.back();
        str_order(
            below, [](const Node& n) { return n.mbr.x.midpoint(); },
            [](const Node& n) { return n.mbr.y.midpoint(); });
        std::vector<Node> up;
        for (std::size_t s = 0; s < below.size(); s += fan_out_) {
            const std::size_t end = std::min(below.size(), s + fan_out_);
            Rect mbr = below[s].mbr;
            for (std::size_t i = s + 1; i < end; ++i) mbr = mbr_union(mbr, below[i].mbr);
            up.push_back({mbr, s, end, false});
        }
        levels_.push_back(std::move(up));
    }
    height_ = static_cast<int>(levels_.size());
}

std::vector<LabelId> RTreeIndex::search(const LabeledRect& w, CostCounters& counters) const {
    std::vector<LabelId> found;
    if (entries_.empty()) return found;

    // (level, node index) stack; root is the single node of the top level.
    std::vector<std::pair<int, std::size_t>> stack{{height_ - 1, 0}};
    while (!stack.empty()) {
        const auto [lvl, idx] = stack.back();
        stack.pop_back();
        const Node& node = levels_[lvl][idx];
        if (node.leaf) {
            for (std::size_t i = node.begin; i < node.end; ++i) {
                ++counters.candidates_examined;
                ++counters.intersection_tests;
                if (entries_[i].id != w.id && rect_intersects(w.rect, entries_[i].rect))
                    found.push_back(entries_[i].id);
            }
        } else {
            for (std::size_t i = node.begin; i < node.end; ++i) {
                ++counters.intersection_tests;
                if (rect_intersects(w.rect, levels_[lvl - 1][i].mbr))
                    stack.emplace_back(lvl - 1, i);
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

AdjacencyMap rtree_join(std::span<const LabeledRect> rects, CostCounters& counters,
                        int n_threads, int fan_out) {
    const RTreeIndex tree(rects, fan_out);
    std::vector<std::vector<LabelId>> results(rects.size());
    std::vector<CostCounters> partial(std::max<std::size_t>(1, n_threads));
    detail::parallel_blocks(rects.size(), n_threads, [&](std::size_t ti, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            results[i] = tree.search(rects[i], partial[ti]);
    });
    AdjacencyMap adj;
    for (const auto& c : partial) counters += c;
    for (std::size_t i = 0; i < rects.size(); ++i)
        adj.emplace(rects[i].id, std::move(results[i]));
    return adj;
}

IGIndex::IGIndex(GridConfig cfg, std::span<const LabeledRect> rects) : cfg_(std::move(cfg)) {
    cfg_.check();
    tiles_.resize(static_cast<std::size_t>(cfg_.tiles_x) * cfg_.tiles_y);
    for (const auto& lr : rects) {
        const auto range = tile_range(lr.rect, cfg_);
        if (!range) continue;
        const auto [lo, hi] = *range;
        for (int iy = lo.iy; iy <= hi.iy; ++iy)
            for (int ix = lo.ix; ix <= hi.ix; ++ix)
                tiles_[static_cast<std::size_t>(iy) * cfg_.tiles_x + ix].push_back(lr);
    }
}

std::vector<LabelId> IGIndex::search(const LabeledRect& w, CostCounters& counters) const {
    std::vector<LabelId> found;
    const auto range = tile_range(w.rect, cfg_);
    if (!range) return found;
    const auto [lo, hi] = *range;
    const double tw = cfg_.tile_width();
    const double th = cfg_.tile_height();
    for (int iy = lo.iy; iy <= hi.iy; ++iy) {
        for (int ix = lo.ix; ix <= hi.ix; ++ix) {
            ++counters.tiles_visited;
            for (const auto& cand : tile({ix, iy})) {
                ++counters.intersection_tests;
                if (cand.id == w.id || !rect_intersects(w.rect, cand.rect)) continue;
                // Reference point: lower-left corner of the intersection.
                ++counters.candidates_examined;
                const double rx = std::max(w.rect.x.lo, cand.rect.x.lo);
                const double ry = std::max(w.rect.y.lo, cand.rect.y.lo);
                const int ox = tile_of_coord(rx, cfg_.domain.x.lo, tw, cfg_.tiles_x);
                const int oy = tile_of_coord(ry, cfg_.domain.y.lo, th, cfg_.tiles_y);
                if (ox == ix && oy == iy) found.push_back(cand.id);
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

AdjacencyMap ig_join(std::span<const LabeledRect> rects, const GridConfig& cfg,
                     CostCounters& counters, int n_threads) {
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
    const IGIndex index(cfg, clamped);
    std::vector<std::vector<LabelId>> results(clamped.size());
    std::vector<CostCounters> partial(std::max<std::size_t>(1, n_threads));
    detail::parallel_blocks(clamped.size(), n_threads, [&](std::size_t ti, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            results[i] = index.search(clamped[i], partial[ti]);
    });
    AdjacencyMap adj;
    for (const auto& c : partial) counters += c;
    for (std::size_t i = 0; i < clamped.size(); ++i)
        adj.emplace(clamped[i].id, std::move(results[i]));
    for (LabelId id : outside) adj.emplace(id, std::vector<LabelId>{});
    return adj;
}

}  // namespace labelpart
