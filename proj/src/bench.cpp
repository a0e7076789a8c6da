#include "labelpart/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "parallel_for.hpp"

namespace labelpart {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct ClampedSet {
    std::vector<LabeledRect> in_domain;
    std::vector<LabelId> outside;
};

ClampedSet clamp_all(std::span<const LabeledRect> rects, const Rect& domain) {
    ClampedSet out;
    out.in_domain.reserve(rects.size());
    for (const auto& lr : rects) {
        if (auto r = rect_clamp(lr.rect, domain))
            out.in_domain.push_back({lr.id, *r});
        else
            out.outside.push_back(lr.id);
    }
    return out;
}

template <typename Index>
void parallel_search(const Index& index, const std::vector<LabeledRect>& rects,
                     std::vector<std::vector<LabelId>>& results,
                     CostCounters& counters, int n_threads) {
    results.resize(rects.size());
    std::vector<CostCounters> partial(std::max<std::size_t>(1, n_threads));
    detail::parallel_blocks(rects.size(), n_threads, [&](std::size_t ti, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            results[i] = index.search(rects[i], partial[ti]);
    });
    for (const auto& c : partial) counters += c;
}

std::string adjacency_diff(const AdjacencyMap& a, const AdjacencyMap& b,
                           const std::string& na, const std::string& nb) {
    std::ostringstream os;
    os << "adjacency mismatch between " << na << " and " << nb << ":";
    int shown = 0;
    for (const auto& [id, nbrs] : a) {
        const auto it = b.find(id);
        if (it != b.end() && it->second == nbrs) continue;
        os << "\n  label " << id << ": " << na << " has " << nbrs.size() << " neighbors, " << nb
           << " has " << (it == b.end() ? 0 : it->second.size());
        if (++shown >= 10) {
            os << "\n  ...";
            break;
        }
    }
    if (a.size() != b.size()) os << "\n  key counts differ: " << a.size() << " vs " << b.size();
    return os.str();
}

}  // namespace

std::string method_name(JoinMethod m) {
    switch (m) {
        case JoinMethod::TwoLayer: return "two-layer";
        case JoinMethod::IG: return "ig";
        case JoinMethod::RTree: return "rtree";
        case JoinMethod::Brute: return "brute";
    }
    return "?";
}

JoinMethod method_from_name(const std::string& name) {
    if (name == "two-layer") return JoinMethod::TwoLayer;
    if (name == "ig") return JoinMethod::IG;
    if (name == "rtree") return JoinMethod::RTree;
    if (name == "brute") return JoinMethod::Brute;
    throw std::invalid_argument("unknown join method: " + name);
}

JoinRunResult run_join_timed(JoinMethod method, std::span<const LabeledRect> rects,
                             const GridConfig& cfg, int n_threads) {
    JoinRunResult res;
    const auto t_total = Clock::now();

    auto finish = [&](const std::vector<LabeledRect>& queried,
                      std::vector<std::vector<LabelId>>&& results,
                      const std::vector<LabelId>& outside) {
        for (std::size_t i = 0; i < queried.size(); ++i)
            res.adjacency.emplace(queried[i].id, std::move(results[i]));
        for (LabelId id : outside) res.adjacency.emplace(id, std::vector<LabelId>{});
    };

    switch (method) {
        case JoinMethod::Brute: {
            const auto t0 = Clock::now();
            res.adjacency = brute_force_join(rects, res.counters);
            res.query_s = seconds_since(t0);
            break;
        }
        case JoinMethod::RTree: {
            auto t0 = Clock::now();
            const RTreeIndex tree(rects);
            res.build_s = seconds_since(t0);
            std::vector<LabeledRect> queried(rects.begin(), rects.end());
            std::vector<std::vector<LabelId>> results;
            t0 = Clock::now();
            parallel_search(tree, queried, results, res.counters, n_threads);
            res.query_s = seconds_since(t0);
            finish(queried, std::move(results), {});
            break;
        }
        case JoinMethod::IG: {
            auto t0 = Clock::now();
            auto sets = clamp_all(rects, cfg.domain);
            const IGIndex index(cfg, sets.in_domain);
            res.build_s = seconds_since(t0);
            std::vector<std::vector<LabelId>> results;
            t0 = Clock::now();
            parallel_search(index, sets.in_domain, results, res.counters, n_threads);
            res.query_s = seconds_since(t0);
            finish(sets.in_domain, std::move(results), sets.outside);
            break;
        }
        case JoinMethod::TwoLayer: {
            auto t0 = Clock::now();
            auto sets = clamp_all(rects, cfg.domain);
            const GridIndex index = build_grid(sets.in_domain, cfg);
            res.build_s = seconds_since(t0);
            std::vector<std::vector<LabelId>> results(sets.in_domain.size());
            std::vector<CostCounters> partial(std::max<std::size_t>(1, n_threads));
            t0 = Clock::now();
            detail::parallel_blocks(sets.in_domain.size(), n_threads,
                                    [&](std::size_t ti, std::size_t b, std::size_t e) {
                                        for (std::size_t i = b; i < e; ++i)
                                            results[i] = query(index, sets.in_domain[i], partial[ti]);
                                    });
            for (const auto& c : partial) res.counters += c;
            res.query_s = seconds_since(t0);
            finish(sets.in_domain, std::move(results), sets.outside);
            break;
        }
    }
    res.total_s = seconds_since(t_total);
    return res;
}

std::vector<BenchRecord> run_benchmark(const std::vector<DatasetSpec>& specs,
                                       const std::vector<JoinMethod>& methods,
                                       int grid_tiles, int repeats,
                                       std::size_t brute_cap, int n_threads) {
    if (methods.empty()) throw std::invalid_argument("run_benchmark: no methods");
    std::vector<BenchRecord> records;
    for (const auto& spec : specs) {
        const auto rects = generate_rects(spec);
        const GridConfig cfg{spec.domain, grid_tiles, grid_tiles};

        for (JoinMethod m : methods)
            if (m == JoinMethod::Brute && spec.n_objects > brute_cap)
                throw std::invalid_argument("run_benchmark: brute force refused above brute_cap");

        // Correctness gate: every method must agree before timing counts.
        std::vector<std::pair<JoinMethod, JoinRunResult>> runs;
        for (JoinMethod m : methods) runs.emplace_back(m, run_join_timed(m, rects, cfg, n_threads));
        for (std::size_t i = 1; i < runs.size(); ++i) {
            if (runs[i].second.adjacency != runs[0].second.adjacency)
                throw std::runtime_error(adjacency_diff(runs[0].second.adjacency,
                                                        runs[i].second.adjacency,
                                                        method_name(runs[0].first),
                                                        method_name(runs[i].first)));
        }

        std::vector<LabelId> ids;
        ids.reserve(rects.size());
        for (const auto& lr : rects) ids.push_back(lr.id);
        const LabelPartition partition = connected_components(runs[0].second.adjacency, ids);

        for (auto& [m, first_run] : runs) {
            for (int rep = 0; rep < repeats; ++rep) {
                const JoinRunResult run =
                    rep == 0 ? std::move(first_run) : run_join_timed(m, rects, cfg, n_threads);
                records.push_back({m, spec.n_objects, grid_tiles, rep, run.build_s, run.query_s,
                                   run.total_s, run.counters.intersection_tests,
                                   partition.groups.size(), partition.max_group_size()});
            }
        }
    }
    return records;
}

void emit_csv(const std::vector<BenchRecord>& records, const std::string& path, int n_threads) {
    if (records.empty()) throw std::invalid_argument("emit_csv: no records");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
    out << "method,n_objects,grid_tiles,repeat,build_s,query_s,total_s,tests,groups,max_group\n";
    if (n_threads != 1) out << "# threads=" << n_threads << "\n";
    out.precision(9);
    for (const auto& r : records) {
        out << method_name(r.method) << ',' << r.n_objects << ',' << r.grid_tiles << ','
            << r.repeat_index << ',' << r.build_s << ',' << r.query_s << ',' << r.total_s << ','
            << r.intersection_tests << ',' << r.groups << ',' << r.max_group_size << "\n";
    }
}

}  // namespace labelpart
