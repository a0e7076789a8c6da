#include "labelpart/grouping.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace labelpart {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    std::vector<std::size_t> rank;

    explicit UnionFind(std::size_t n) : parent(n), rank(n, 0) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank[a] < rank[b]) std::swap(a, b);
        parent[b] = a;
        if (rank[a] == rank[b]) ++rank[a];
    }
};

bool adj_contains(const AdjacencyMap& adj, LabelId a, LabelId b) {
    const auto it = adj.find(a);
    if (it == adj.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), b);
}

void sort_groups(LabelPartition& p) {
    for (auto& g : p.groups) std::sort(g.begin(), g.end());
    std::sort(p.groups.begin(), p.groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

LabelPartition connected_components(const AdjacencyMap& adj, const std::vector<LabelId>& all_labels) {
    std::unordered_map<LabelId, std::size_t> index;
    index.reserve(all_labels.size());
    for (std::size_t i = 0; i < all_labels.size(); ++i) index.emplace(all_labels[i], i);

    UnionFind uf(all_labels.size());
    for (const auto& [a, nbrs] : adj) {
        const auto ia = index.find(a);
        if (ia == index.end())
            throw std::invalid_argument("connected_components: adjacency key not in label set");
        for (LabelId b : nbrs) {
            const auto ib = index.find(b);
            if (ib == index.end() || !adj_contains(adj, b, a))
                throw std::invalid_argument("connected_components: asymmetric adjacency");
            uf.unite(ia->second, ib->second);
        }
    }

    std::unordered_map<std::size_t, std::vector<LabelId>> by_root;
    for (std::size_t i = 0; i < all_labels.size(); ++i)
        by_root[uf.find(i)].push_back(all_labels[i]);

    LabelPartition p;
    p.groups.reserve(by_root.size());
    for (auto& [root, members] : by_root) p.groups.push_back(std::move(members));
    sort_groups(p);
    return p;
}

ValidationReport validate_partition(const LabelPartition& p,
                                    const std::map<LabelId, Rect>& gmbrs,
                                    std::size_t l_max) {
    std::unordered_map<LabelId, std::size_t> group_of;
    for (std::size_t g = 0; g < p.groups.size(); ++g) {
        for (LabelId l : p.groups[g]) {
            if (!gmbrs.contains(l))
                throw std::invalid_argument("validate_partition: unknown label " + std::to_string(l));
            if (!group_of.emplace(l, g).second)
                throw std::invalid_argument("validate_partition: label " + std::to_string(l) + " in two groups");
        }
    }
    if (group_of.size() != gmbrs.size())
        throw std::invalid_argument("validate_partition: partition does not cover all labels");

    ValidationReport rep;

    for (std::size_t g = 0; g < p.groups.size(); ++g) {
        const auto& members = p.groups[g];
        if (members.size() > l_max) {
            rep.size_ok = false;
            rep.failures.push_back("condition 3: group " + std::to_string(g) + " has " +
                                   std::to_string(members.size()) + " labels (l_max=" +
                                   std::to_string(l_max) + ")");
        }
        if (members.size() < 2) continue;
        // BFS over the intersection graph restricted to this group.
        std::vector<bool> seen(members.size(), false);
        std::vector<std::size_t> frontier{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!frontier.empty()) {
            const std::size_t i = frontier.back();
            frontier.pop_back();
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (seen[j]) continue;
                if (rect_intersects(gmbrs.at(members[i]), gmbrs.at(members[j]))) {
                    seen[j] = true;
                    ++reached;
                    frontier.push_back(j);
                }
            }
        }
        if (reached != members.size()) {
            rep.connectivity_ok = false;
            rep.failures.push_back("condition 1: group " + std::to_string(g) + " is not chain-connected");
        }
    }

    for (auto a = gmbrs.begin(); a != gmbrs.end(); ++a) {
        for (auto b = std::next(a); b != gmbrs.end(); ++b) {
            if (group_of.at(a->first) != group_of.at(b->first) &&
                rect_intersects(a->second, b->second)) {
                rep.separation_ok = false;
                rep.failures.push_back("condition 2: labels " + std::to_string(a->first) + " and " +
                                       std::to_string(b->first) + " intersect across groups");
            }
        }
    }
    return rep;
}

AdjacencyMap run_join(JoinMethod method, std::span<const LabeledRect> rects,
                      const GridConfig& cfg, CostCounters& counters, int n_threads) {
    switch (method) {
        case JoinMethod::TwoLayer: {
            auto [adj, c] = two_layer_label_partition(cfg, rects, n_threads);
            counters += c;
            return adj;
        }
        case JoinMethod::IG:
            return ig_join(rects, cfg, counters, n_threads);
        case JoinMethod::RTree:
            return rtree_join(rects, counters, n_threads);
        case JoinMethod::Brute:
            return brute_force_join(rects, counters);
    }
    throw std::invalid_argument("run_join: unknown method");
}

std::pair<LabelPartition, PartitionTrace> select_label_partition(
    const std::map<LabelId, GaussianMixture2D>& labels,
    const PartitionLoopConfig& loop_cfg, const GridConfig& grid_cfg,
    JoinMethod method, int n_threads) {
    loop_cfg.check();
    grid_cfg.check();
    if (labels.empty())
        throw std::invalid_argument("select_label_partition: empty label set");

    std::vector<LabelId> ids;
    ids.reserve(labels.size());
    for (const auto& [id, mix] : labels) ids.push_back(id);

    PartitionTrace trace;
    LabelPartition partition;
    std::map<LabelId, Rect> prev_gmbrs;
    double pg = loop_cfg.pg_init;

    for (;;) {
        std::map<LabelId, Rect> gmbrs;
        std::vector<LabeledRect> rects;
        rects.reserve(labels.size());
        for (const auto& [id, mix] : labels) {
            const Rect box = gmbr_from_mixture(mix, pg);
            gmbrs.emplace(id, box);
            rects.push_back({id, box});
        }
        if (!prev_gmbrs.empty()) {
            for (const auto& [id, box] : gmbrs)
                if (!rect_contains(prev_gmbrs.at(id), box))
                    throw std::logic_error("select_label_partition: gate grew while reducing pg");
        }

        CostCounters counters;
        const AdjacencyMap adj = run_join(method, rects, grid_cfg, counters, n_threads);
        partition = connected_components(adj, ids);
        trace.iterations.push_back({pg, partition.max_group_size(), counters});
        trace.final_gmbrs = std::move(gmbrs);

        if (partition.max_group_size() <= loop_cfg.l_max) break;

        const double next_pg = pg * loop_cfg.pg_factor;
        if (next_pg < loop_cfg.pg_floor) {
            // Floor reached with an oversized group: split deterministically
            // by descending label id into chunks of l_max.
            std::vector<std::vector<LabelId>> split;
            for (auto& g : partition.groups) {
                if (g.size() <= loop_cfg.l_max) {
                    split.push_back(std::move(g));
                    continue;
                }
                std::sort(g.rbegin(), g.rend());
                for (std::size_t s = 0; s < g.size(); s += loop_cfg.l_max) {
                    const auto end = std::min(g.size(), s + loop_cfg.l_max);
                    split.emplace_back(g.begin() + s, g.begin() + end);
                }
            }
            partition.groups = std::move(split);
            sort_groups(partition);
            trace.fallback_applied = true;
            break;
        }
        prev_gmbrs = std::move(trace.final_gmbrs);
        pg = next_pg;
    }
    return {std::move(partition), std::move(trace)};
}

}  // namespace labelpart
