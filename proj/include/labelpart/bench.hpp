#pragma once

#include <string>
#include <vector>

#include "labelpart/datagen.hpp"
#include "labelpart/grouping.hpp"

namespace labelpart {

struct BenchRecord {
    JoinMethod method = JoinMethod::TwoLayer;
    std::size_t n_objects = 0;
    int grid_tiles = 100;
    int repeat_index = 0;
    double build_s = 0.0;
    double query_s = 0.0;
    double total_s = 0.0;
    std::uint64_t intersection_tests = 0;
    std::size_t groups = 0;
    std::size_t max_group_size = 0;
};

std::string method_name(JoinMethod m);
JoinMethod method_from_name(const std::string& name);

/// One timed run: index build, self-join, label grouping.
struct JoinRunResult {
    AdjacencyMap adjacency;
    CostCounters counters;
    double build_s = 0.0;
    double query_s = 0.0;
    double total_s = 0.0;
};

JoinRunResult run_join_timed(JoinMethod method, std::span<const LabeledRect> rects,
                             const GridConfig& cfg, int n_threads = 1);

/// Runs every (spec, method, repeat) cell. Before any timing record is
/// emitted for a spec, all requested methods must produce identical
/// adjacency maps; a mismatch throws with a diff report. Brute force is
/// refused above brute_cap objects.
std::vector<BenchRecord> run_benchmark(const std::vector<DatasetSpec>& specs,
                                       const std::vector<JoinMethod>& methods,
                                       int grid_tiles, int repeats,
                                       std::size_t brute_cap = 20000,
                                       int n_threads = 1);

/// CSV with the fixed header
/// `method,n_objects,grid_tiles,repeat,build_s,query_s,total_s,tests,groups,max_group`.
/// When n_threads != 1 a `# threads=N` comment line follows the header.
void emit_csv(const std::vector<BenchRecord>& records, const std::string& path,
              int n_threads = 1);

}  // namespace labelpart
