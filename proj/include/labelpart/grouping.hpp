#pragma once

#include <map>
#include <string>
#include <vector>

#include "labelpart/baselines.hpp"

namespace labelpart {

/// Disjoint label groups covering the label set; each group sorted
/// ascending, groups ordered by smallest member.
struct LabelPartition {
    std::vector<std::vector<LabelId>> groups;

    std::size_t max_group_size() const {
        std::size_t m = 0;
        for (const auto& g : groups) m = std::max(m, g.size());
        return m;
    }
};

/// Groups are the connected components of the adjacency map; labels
/// missing from adj become singletons. Throws std::invalid_argument on
/// an asymmetric adjacency.
LabelPartition connected_components(const AdjacencyMap& adj, const std::vector<LabelId>& all_labels);

struct ValidationReport {
    bool connectivity_ok = true;       // condition 1
    bool separation_ok = true;         // condition 2
    bool size_ok = true;               // condition 3
    std::vector<std::string> failures;

    bool pass() const { return connectivity_ok && separation_ok && size_ok; }
};

/// Checks conditions 1-3 against the member GMBRs: within-group
/// intersection chains, no intersecting pair across groups, group size
/// cap. Throws std::invalid_argument if the partition does not cover
/// exactly the gmbr key set.
ValidationReport validate_partition(const LabelPartition& p,
                                    const std::map<LabelId, Rect>& gmbrs,
                                    std::size_t l_max);

struct PartitionLoopConfig {
    double pg_init = 0.9973;
    double pg_factor = 0.8;
    double pg_floor = 0.3;
    std::size_t l_max = 1;

    void check() const {
        if (!(0.0 < pg_floor && pg_floor < pg_init && pg_init < 1.0) ||
            !(0.0 < pg_factor && pg_factor < 1.0) || l_max < 1)
            throw std::invalid_argument("PartitionLoopConfig: invalid parameters");
    }
};

enum class JoinMethod { TwoLayer, IG, RTree, Brute };

struct LoopIteration {
    double pg = 0.0;
    std::size_t max_group_size = 0;
    CostCounters counters;
};

struct PartitionTrace {
    std::vector<LoopIteration> iterations;
    bool fallback_applied = false;
    std::map<LabelId, Rect> final_gmbrs;
};

/// Gate-shrinking loop: build gating boxes at the current gating
/// probability, join, group; repeat with pg scaled by pg_factor while
/// some group exceeds l_max. If pg would drop below pg_floor, the
/// oversized groups are split deterministically (descending label id,
/// chunks of l_max) and the trace is flagged.
std::pair<LabelPartition, PartitionTrace> select_label_partition(
    const std::map<LabelId, GaussianMixture2D>& labels,
    const PartitionLoopConfig& loop_cfg, const GridConfig& grid_cfg,
    JoinMethod method, int n_threads = 1);

AdjacencyMap run_join(JoinMethod method, std::span<const LabeledRect> rects,
                      const GridConfig& cfg, CostCounters& counters, int n_threads = 1);

}  // namespace labelpart
