#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "labelpart/geometry.hpp"

namespace labelpart {

/// SplitMix64 stream. Fully specified so datasets are bit-identical
/// across platforms and implementations.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class DatasetMode { Rect, Gaussian };

struct DatasetSpec {
    std::size_t n_objects = 1;
    Rect domain{{0.0, 2000.0}, {0.0, 2000.0}};
    double max_extent = 20.0;
    std::uint64_t seed = 0;
    DatasetMode mode = DatasetMode::Rect;

    void check() const;
};

/// Lower-left corners uniform in the domain, width/height independently
/// uniform in (0, max_extent], clipped to the domain. Label ids 0..n-1.
std::vector<LabeledRect> generate_rects(const DatasetSpec& spec);

/// Single-component mixtures with means uniform in the domain and
/// diagonal covariances drawn so the gate at the reference gating
/// probability spans at most max_extent per axis.
std::map<LabelId, GaussianMixture2D> generate_gaussians(const DatasetSpec& spec);

/// Gating probability the generated covariances are sized against.
inline constexpr double kDatagenReferencePg = 0.9973;

/// Plain-text dump: header line then one `label_id x_lo y_lo x_hi y_hi`
/// record per rect, full decimal precision.
void write_rects(std::ostream& out, const DatasetSpec& spec,
                 const std::vector<LabeledRect>& rects);
void write_rects_file(const std::string& path, const DatasetSpec& spec,
                      const std::vector<LabeledRect>& rects);

}  // namespace labelpart
