#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "labelpart/geometry.hpp"

namespace labelpart {

/// Uniform N x M tile grid over the surveillance area. Tiles have
/// half-open extents [l, u) so every point owns exactly one tile.
struct GridConfig {
    Rect domain;
    int tiles_x = 100;
    int tiles_y = 100;

    double tile_width() const { return domain.x.extent() / tiles_x; }
    double tile_height() const { return domain.y.extent() / tiles_y; }

    void check() const {
        if (tiles_x < 1 || tiles_y < 1 || !(tile_width() > 0.0) || !(tile_height() > 0.0))
            throw std::invalid_argument("GridConfig: tile extents must be positive");
    }
};

struct TileId {
    int ix = 0;
    int iy = 0;
    bool operator==(const TileId&) const = default;
};

enum class SecondaryClass : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

/// Bitmask over secondary classes, bit i = class i.
using ClassMask = std::uint8_t;

inline constexpr ClassMask kAllClasses = 0x0F;

inline bool mask_has(ClassMask m, SecondaryClass c) {
    return (m >> static_cast<int>(c)) & 1;
}

/// Tile index owning coordinate v along one axis; the domain's upper
/// boundary maps to the last tile.
inline int tile_of_coord(double v, double origin, double tile_size, int n_tiles) {
    int i = static_cast<int>(std::floor((v - origin) / tile_size));
    if (i < 0) i = 0;
    if (i >= n_tiles) i = n_tiles - 1;
    return i;
}

/// Inclusive range of tiles intersecting r under closed-rect semantics:
/// an upper coordinate sitting exactly on a tile boundary also touches
/// the next tile. Empty optional if r lies entirely outside the domain.
std::optional<std::pair<TileId, TileId>> tile_range(const Rect& r, const GridConfig& cfg);

/// Lower-left corner of tile t (the tile's [l, u) origin).
inline std::pair<double, double> tile_origin(TileId t, const GridConfig& cfg) {
    return {cfg.domain.x.lo + t.ix * cfg.tile_width(),
            cfg.domain.y.lo + t.iy * cfg.tile_height()};
}

/// Secondary class of r in tile t: A starts inside t on both axes,
/// B before t in y only, C before t in x only, D before t in both.
SecondaryClass classify(const Rect& r, TileId t, const GridConfig& cfg);

/// Classes of tile t a search range w must examine so each candidate is
/// seen exactly once across w's tile range.
ClassMask relevant_classes(const Rect& w, TileId t, const GridConfig& cfg);

/// Entries live in one flat array, bucketed per (tile, class) by a
/// counting pass; buckets keep input order.
class GridIndex {
public:
    GridIndex(GridConfig cfg, std::span<const LabeledRect> rects);

    const GridConfig& config() const { return cfg_; }

    std::span<const LabeledRect> bucket(TileId t, SecondaryClass c) const {
        const std::size_t b = bucket_index(t, static_cast<int>(c));
        return {entries_.data() + offsets_[b], offsets_[b + 1] - offsets_[b]};
    }

    std::size_t size() const { return entries_.size(); }

private:
    std::size_t bucket_index(TileId t, int c) const {
        return (static_cast<std::size_t>(t.iy) * cfg_.tiles_x + t.ix) * 4 + c;
    }

    GridConfig cfg_;
    std::vector<LabeledRect> entries_;
    std::vector<std::uint32_t> offsets_;  // tiles*4 + 1 bucket boundaries
};

/// Builds the secondary-classified index. Rects partially outside the
/// domain must be clamped by the caller; rects entirely outside are
/// skipped.
GridIndex build_grid(std::span<const LabeledRect> rects, const GridConfig& cfg);

}  // namespace labelpart
