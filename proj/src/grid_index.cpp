#include "labelpart/grid_index.hpp"

namespace labelpart {

std::optional<std::pair<TileId, TileId>> tile_range(const Rect& r, const GridConfig& cfg) {
    if (!rect_intersects(r, cfg.domain)) return std::nullopt;
    const double tw = cfg.tile_width();
    const double th = cfg.tile_height();
    TileId lo{tile_of_coord(r.x.lo, cfg.domain.x.lo, tw, cfg.tiles_x),
              tile_of_coord(r.y.lo, cfg.domain.y.lo, th, cfg.tiles_y)};
    TileId hi{tile_of_coord(r.x.hi, cfg.domain.x.lo, tw, cfg.tiles_x),
              tile_of_coord(r.y.hi, cfg.domain.y.lo, th, cfg.tiles_y)};
    return std::make_pair(lo, hi);
}

SecondaryClass classify(const Rect& r, TileId t, const GridConfig& cfg) {
    const auto [tx, ty] = tile_origin(t, cfg);
    const bool x_inside = tx <= r.x.lo;
    const bool y_inside = ty <= r.y.lo;
    if (x_inside && y_inside) return SecondaryClass::A;
    if (x_inside) return SecondaryClass::B;
    if (y_inside) return SecondaryClass::C;
    return SecondaryClass::D;
}

ClassMask relevant_classes(const Rect& w, TileId t, const GridConfig& cfg) {
    const auto [tx, ty] = tile_origin(t, cfg);
    const bool before_x = w.x.lo < tx;
    const bool before_y = w.y.lo < ty;
    if (before_x && before_y) return ClassMask{1 << 0};             // {A}
    if (before_x) return ClassMask{(1 << 0) | (1 << 1)};            // {A,B}
    if (before_y) return ClassMask{(1 << 0) | (1 << 2)};            // {A,C}
    return kAllClasses;
}

GridIndex::GridIndex(GridConfig cfg, std::span<const LabeledRect> rects) : cfg_(std::move(cfg)) {
    cfg_.check();
    const std::size_t n_buckets = static_cast<std::size_t>(cfg_.tiles_x) * cfg_.tiles_y * 4;
    offsets_.assign(n_buckets + 1, 0);

    // For a clamped rect, the home tile is the low end of its range, so
    // the class within tile (ix, iy) follows from integer comparisons:
    // ix == lo.ix means "starts inside in x", same for y.
    std::vector<std::pair<TileId, TileId>> ranges(rects.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < rects.size(); ++i) {
        const auto range = tile_range(rects[i].rect, cfg_);
        ranges[i] = range ? *range : std::make_pair(TileId{1, 0}, TileId{0, 0});
        if (!range) continue;
        const auto [lo, hi] = ranges[i];
        for (int iy = lo.iy; iy <= hi.iy; ++iy)
            for (int ix = lo.ix; ix <= hi.ix; ++ix)
                ++offsets_[bucket_index({ix, iy}, (ix != lo.ix) * 2 + (iy != lo.iy)) + 1];
        total += static_cast<std::size_t>(hi.ix - lo.ix + 1) * (hi.iy - lo.iy + 1);
    }
    for (std::size_t b = 1; b <= n_buckets; ++b) offsets_[b] += offsets_[b - 1];

    entries_.resize(total);
    std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < rects.size(); ++i) {
        const auto [lo, hi] = ranges[i];
        for (int iy = lo.iy; iy <= hi.iy; ++iy)
            for (int ix = lo.ix; ix <= hi.ix; ++ix)
                entries_[cursor[bucket_index({ix, iy}, (ix != lo.ix) * 2 + (iy != lo.iy))]++] = rects[i];
    }
}

GridIndex build_grid(std::span<const LabeledRect> rects, const GridConfig& cfg) {
    return GridIndex(cfg, rects);
}

}  // namespace labelpart
