#include "labelpart/geometry.hpp"

#include <cmath>

namespace labelpart {

std::optional<Rect> rect_clamp(const Rect& r, const Rect& clip) {
    if (!rect_intersects(r, clip)) return std::nullopt;
    return Rect{{std::max(r.x.lo, clip.x.lo), std::min(r.x.hi, clip.x.hi)},
                {std::max(r.y.lo, clip.y.lo), std::min(r.y.hi, clip.y.hi)}};
}

double chi2_quantile_2dof(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("chi2_quantile_2dof: p must be in (0,1)");
    return -2.0 * std::log1p(-p);
}

namespace {

void check_component(const GaussianComponent2D& c) {
    if (!(c.weight > 0.0))
        throw std::invalid_argument("gaussian component weight must be > 0");
    const double cxx = c.cov[0], cxy = c.cov[1], cyx = c.cov[2], cyy = c.cov[3];
    const double det = cxx * cyy - cxy * cyx;
    if (!(cxx > 0.0) || !(cyy > 0.0) || !(det > 0.0) ||
        std::abs(cxy - cyx) > 1e-12 * std::max(1.0, std::max(cxx, cyy)))
        throw std::invalid_argument("gaussian component covariance must be symmetric positive-definite");
}

}  // namespace

Rect gmbr_from_mixture(const GaussianMixture2D& mix, double pg) {
    if (mix.components.empty())
        throw std::invalid_argument("gmbr_from_mixture: empty mixture");
    double wsum = 0.0;
    for (const auto& c : mix.components) wsum += c.weight;
    if (std::abs(wsum - 1.0) > 1e-9)
        throw std::invalid_argument("gmbr_from_mixture: weights must sum to 1");

    const double k = std::sqrt(chi2_quantile_2dof(pg));
    Rect box;
    bool first = true;
    for (const auto& c : mix.components) {
        check_component(c);
        const double hx = k * std::sqrt(c.cov[0]);
        const double hy = k * std::sqrt(c.cov[3]);
        const Rect b{{c.mean[0] - hx, c.mean[0] + hx},
                     {c.mean[1] - hy, c.mean[1] + hy}};
        box = first ? b : mbr_union(box, b);
        first = false;
    }
    return box;
}

}  // namespace labelpart
