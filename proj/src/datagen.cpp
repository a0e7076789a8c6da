#include "labelpart/datagen.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace labelpart {

void DatasetSpec::check() const {
    if (n_objects < 1) throw std::invalid_argument("DatasetSpec: n_objects must be >= 1");
    if (!(max_extent > 0.0)) throw std::invalid_argument("DatasetSpec: max_extent must be > 0");
    if (max_extent > domain.x.extent() || max_extent > domain.y.extent())
        throw std::invalid_argument("DatasetSpec: max_extent exceeds domain extent");
}

std::vector<LabeledRect> generate_rects(const DatasetSpec& spec) {
    spec.check();
    if (spec.mode != DatasetMode::Rect)
        throw std::invalid_argument("generate_rects: spec mode is not rect");
    SplitMix64 rng{spec.seed};
    std::vector<LabeledRect> rects;
    rects.reserve(spec.n_objects);
    for (std::size_t i = 0; i < spec.n_objects; ++i) {
        const double x = spec.domain.x.lo + rng.uniform01() * spec.domain.x.extent();
        const double y = spec.domain.y.lo + rng.uniform01() * spec.domain.y.extent();
        // 1 - u maps [0,1) onto (0,1], keeping extents strictly positive.
        const double w = spec.max_extent * (1.0 - rng.uniform01());
        const double h = spec.max_extent * (1.0 - rng.uniform01());
        rects.push_back({static_cast<LabelId>(i),
                         Rect{{x, std::min(x + w, spec.domain.x.hi)},
                              {y, std::min(y + h, spec.domain.y.hi)}}});
    }
    return rects;
}

std::map<LabelId, GaussianMixture2D> generate_gaussians(const DatasetSpec& spec) {
    spec.check();
    if (spec.mode != DatasetMode::Gaussian)
        throw std::invalid_argument("generate_gaussians: spec mode is not gaussian");
    const double k = std::sqrt(chi2_quantile_2dof(kDatagenReferencePg));
    const double sigma_max = spec.max_extent / (2.0 * k);
    SplitMix64 rng{spec.seed};
    std::map<LabelId, GaussianMixture2D> out;
    for (std::size_t i = 0; i < spec.n_objects; ++i) {
        GaussianComponent2D c;
        c.weight = 1.0;
        c.mean[0] = spec.domain.x.lo + rng.uniform01() * spec.domain.x.extent();
        c.mean[1] = spec.domain.y.lo + rng.uniform01() * spec.domain.y.extent();
        const double sx = sigma_max * (1.0 - rng.uniform01());
        const double sy = sigma_max * (1.0 - rng.uniform01());
        c.cov[0] = sx * sx;
        c.cov[3] = sy * sy;
        c.cov[1] = c.cov[2] = 0.0;
        out.emplace(static_cast<LabelId>(i), GaussianMixture2D{{c}});
    }
    return out;
}

void write_rects(std::ostream& out, const DatasetSpec& spec,
                 const std::vector<LabeledRect>& rects) {
    out << "# labelpart-rects v1 seed=" << spec.seed << " n=" << rects.size() << "\n";
    out.precision(std::numeric_limits<double>::max_digits10);
    for (const auto& lr : rects) {
        out << lr.id << ' ' << lr.rect.x.lo << ' ' << lr.rect.y.lo << ' '
            << lr.rect.x.hi << ' ' << lr.rect.y.hi << "\n";
    }
}

void write_rects_file(const std::string& path, const DatasetSpec& spec,
                      const std::vector<LabeledRect>& rects) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_rects_file: cannot open " + path);
    write_rects(out, spec, rects);
}

}  // namespace labelpart
