#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "labelpart/bench.hpp"

namespace py = pybind11;
using namespace labelpart;

namespace {

GaussianComponent2D make_component(double weight, std::pair<double, double> mean,
                                   std::array<double, 4> cov) {
    GaussianComponent2D c;
    c.weight = weight;
    c.mean[0] = mean.first;
    c.mean[1] = mean.second;
    std::copy(cov.begin(), cov.end(), c.cov);
    return c;
}

}  // namespace

PYBIND11_MODULE(_labelpart, m) {
    m.doc() = "Label-space partition selection via two-layer grid joins";

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_readwrite("lo", &Interval::lo)
        .def_readwrite("hi", &Interval::hi);

    py::class_<Rect>(m, "Rect")
        .def(py::init([](double x_lo, double x_hi, double y_lo, double y_hi) {
                 return Rect{{x_lo, x_hi}, {y_lo, y_hi}};
             }),
             py::arg("x_lo"), py::arg("x_hi"), py::arg("y_lo"), py::arg("y_hi"))
        .def_readwrite("x", &Rect::x)
        .def_readwrite("y", &Rect::y)
        .def("__repr__", [](const Rect& r) {
            return "Rect([" + std::to_string(r.x.lo) + ", " + std::to_string(r.x.hi) + "] x [" +
                   std::to_string(r.y.lo) + ", " + std::to_string(r.y.hi) + "])";
        });

    py::class_<GaussianComponent2D>(m, "GaussianComponent2D")
        .def(py::init(&make_component), py::arg("weight"), py::arg("mean"), py::arg("cov"));

    py::class_<GaussianMixture2D>(m, "GaussianMixture2D")
        .def(py::init([](std::vector<GaussianComponent2D> cs) {
                 return GaussianMixture2D{std::move(cs)};
             }),
             py::arg("components"));

    py::class_<GridConfig>(m, "GridConfig")
        .def(py::init([](const Rect& domain, int tiles_x, int tiles_y) {
                 return GridConfig{domain, tiles_x, tiles_y};
             }),
             py::arg("domain"), py::arg("tiles_x") = 100, py::arg("tiles_y") = 100)
        .def_readwrite("domain", &GridConfig::domain)
        .def_readwrite("tiles_x", &GridConfig::tiles_x)
        .def_readwrite("tiles_y", &GridConfig::tiles_y);

    py::class_<CostCounters>(m, "CostCounters")
        .def(py::init<>())
        .def_readonly("intersection_tests", &CostCounters::intersection_tests)
        .def_readonly("tiles_visited", &CostCounters::tiles_visited)
        .def_readonly("candidates_examined", &CostCounters::candidates_examined);

    py::class_<PartitionLoopConfig>(m, "PartitionLoopConfig")
        .def(py::init([](double pg_init, double pg_factor, double pg_floor, std::size_t l_max) {
                 return PartitionLoopConfig{pg_init, pg_factor, pg_floor, l_max};
             }),
             py::arg("pg_init") = 0.9973, py::arg("pg_factor") = 0.8, py::arg("pg_floor") = 0.3,
             py::arg("l_max") = 1);

    py::enum_<JoinMethod>(m, "JoinMethod")
        .value("TWO_LAYER", JoinMethod::TwoLayer)
        .value("IG", JoinMethod::IG)
        .value("RTREE", JoinMethod::RTree)
        .value("BRUTE", JoinMethod::Brute);

    m.def("rect_intersects", &rect_intersects, py::arg("a"), py::arg("b"));
    m.def("mbr_union", &mbr_union, py::arg("a"), py::arg("b"));
    m.def("chi2_quantile_2dof", &chi2_quantile_2dof, py::arg("p"));
    m.def("gmbr_from_mixture", &gmbr_from_mixture, py::arg("mixture"), py::arg("pg"));

    m.def(
        "two_layer_join",
        [](const GridConfig& cfg, const std::vector<std::pair<LabelId, Rect>>& rects, int threads) {
            std::vector<LabeledRect> lrs;
            lrs.reserve(rects.size());
            for (const auto& [id, r] : rects) lrs.push_back({id, r});
            auto [adj, counters] = two_layer_label_partition(cfg, lrs, threads);
            return std::make_pair(adj, counters);
        },
        py::arg("cfg"), py::arg("rects"), py::arg("threads") = 1,
        "Self-join via the secondary-classified grid; returns (adjacency, counters).");

    m.def(
        "join",
        [](JoinMethod method, const std::vector<std::pair<LabelId, Rect>>& rects,
           const GridConfig& cfg, int threads) {
            std::vector<LabeledRect> lrs;
            lrs.reserve(rects.size());
            for (const auto& [id, r] : rects) lrs.push_back({id, r});
            CostCounters counters;
            AdjacencyMap adj = run_join(method, lrs, cfg, counters, threads);
            return std::make_pair(adj, counters);
        },
        py::arg("method"), py::arg("rects"), py::arg("cfg"), py::arg("threads") = 1);

    m.def(
        "connected_components",
        [](const AdjacencyMap& adj, const std::vector<LabelId>& labels) {
            return connected_components(adj, labels).groups;
        },
        py::arg("adjacency"), py::arg("labels"));

    m.def(
        "select_label_partition",
        [](const std::map<LabelId, GaussianMixture2D>& labels, const PartitionLoopConfig& loop_cfg,
           const GridConfig& grid_cfg, JoinMethod method, int threads) {
            auto [partition, trace] = select_label_partition(labels, loop_cfg, grid_cfg, method, threads);
            py::dict tr;
            py::list iters;
            for (const auto& it : trace.iterations) {
                py::dict d;
                d["pg"] = it.pg;
                d["max_group_size"] = it.max_group_size;
                d["intersection_tests"] = it.counters.intersection_tests;
                iters.append(d);
            }
            tr["iterations"] = iters;
            tr["fallback_applied"] = trace.fallback_applied;
            return std::make_pair(partition.groups, tr);
        },
        py::arg("labels"), py::arg("loop_cfg"), py::arg("grid_cfg"),
        py::arg("method") = JoinMethod::TwoLayer, py::arg("threads") = 1,
        "Gate-shrinking partition loop; returns (groups, trace).");

    m.def(
        "generate_rects",
        [](std::size_t n, double area_m, double max_extent_m, std::uint64_t seed) {
            DatasetSpec spec{n, Rect{{0.0, area_m}, {0.0, area_m}}, max_extent_m, seed,
                             DatasetMode::Rect};
            std::vector<std::pair<LabelId, Rect>> out;
            for (const auto& lr : generate_rects(spec)) out.emplace_back(lr.id, lr.rect);
            return out;
        },
        py::arg("n"), py::arg("area_m") = 2000.0, py::arg("max_extent_m") = 20.0,
        py::arg("seed") = 0);
}
