#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace labelpart {

using LabelId = std::int64_t;

/// Closed coordinate interval [lo, hi] in meters.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool valid() const { return lo <= hi; }
    double extent() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }

    bool operator==(const Interval&) const = default;
};

/// Axis-aligned rectangle (a GMBR / gating box).
struct Rect {
    Interval x;
    Interval y;

    bool valid() const { return x.valid() && y.valid(); }

    bool operator==(const Rect&) const = default;
};

struct LabeledRect {
    LabelId id = 0;
    Rect rect;
};

/// One component of a predicted-measurement mixture. Covariance is
/// row-major 2x2: {cxx, cxy, cyx, cyy}.
struct GaussianComponent2D {
    double weight = 1.0;
    double mean[2] = {0.0, 0.0};
    double cov[4] = {1.0, 0.0, 0.0, 1.0};
};

struct GaussianMixture2D {
    std::vector<GaussianComponent2D> components;
};

// Closed-interval overlap: touching endpoints count.
inline bool interval_overlap(const Interval& a, const Interval& b) {
    return a.lo <= b.hi && b.lo <= a.hi;
}

inline bool rect_intersects(const Rect& a, const Rect& b) {
    return interval_overlap(a.x, b.x) && interval_overlap(a.y, b.y);
}

inline Rect mbr_union(const Rect& a, const Rect& b) {
    return Rect{{std::min(a.x.lo, b.x.lo), std::max(a.x.hi, b.x.hi)},
                {std::min(a.y.lo, b.y.lo), std::max(a.y.hi, b.y.hi)}};
}

inline bool rect_contains(const Rect& outer, const Rect& inner) {
    return outer.x.lo <= inner.x.lo && inner.x.hi <= outer.x.hi &&
           outer.y.lo <= inner.y.lo && inner.y.hi <= outer.y.hi;
}

/// Intersection of r with clip; empty optional if they do not overlap.
std::optional<Rect> rect_clamp(const Rect& r, const Rect& clip);

/// Quantile of the chi-square distribution with 2 degrees of freedom.
/// Closed form: F(q) = 1 - exp(-q/2), so F^{-1}(p) = -2 ln(1 - p).
double chi2_quantile_2dof(double p);

/// Axis-aligned gating box for a mixture at gating probability pg:
/// the union over components of mean_d +- k * sqrt(cov_dd) with
/// k = sqrt(chi2_quantile_2dof(pg)). Off-diagonal covariance terms do
/// not enter the box; the marginal sigmas already circumscribe the
/// gating ellipse. Throws std::invalid_argument on invalid mixtures.
Rect gmbr_from_mixture(const GaussianMixture2D& mix, double pg);

}  // namespace labelpart
