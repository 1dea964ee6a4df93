#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace hsrl {

// Node -> community assignment with the aggregates needed for incremental
// modularity: per community, the sum of member degrees (sigma_tot) and the
// total weight of intra-community edges (self-loops counted once).
struct Partition {
  std::vector<NodeId> assignment;
  std::vector<double> community_total_degree;
  std::vector<double> community_internal_weight;

  std::size_t community_count() const { return community_total_degree.size(); }
};

Partition singleton_partition(const Graph& g);

// Builds a Partition from an arbitrary assignment: ids are densified in
// first-appearance order and the aggregates recomputed from scratch.
Partition partition_from_assignment(const Graph& g, const std::vector<NodeId>& assignment);

// Newman modularity
//   Q = (1/2m) sum_ij (w_ij - k_i k_j / 2m) delta(c_i, c_j)
// evaluated through the equivalent per-community form
//   Q = sum_c [ W_in_c / m - (sigma_tot_c / 2m)^2 ].
// Recomputed from the assignment, ignoring the cached aggregates.
double modularity(const Graph& g, const Partition& p);

// One accepted relocation during local moving. `gain` is the incremental
// delta-Q the optimizer credited to the move.
struct MoveRecord {
  NodeId node;
  NodeId from;
  NodeId to;
  double gain;
};

// Local moving phase: starts from singletons and sweeps the nodes in a
// seed-determined random order (re-drawn each sweep), relocating each node to
// the adjacent community with the largest positive modularity gain, lowest
// community id on ties. Stops when a full sweep gains less than
// kModularityEps. The returned partition has dense community ids and
// Q >= Q(singletons). `trace`, when given, records every accepted move.
Partition modularity_optimization(const Graph& g, std::uint64_t seed,
                                  std::vector<MoveRecord>* trace = nullptr);

inline constexpr double kModularityEps = 1e-7;

// Collapses each community into one node. Edge weight between two community
// nodes is the summed weight of the crossing edges; each community node gets
// a self-loop carrying its total internal weight (constituent self-loops
// included). Total weight is preserved. Also returns the node -> community
// membership map.
std::pair<Graph, std::vector<NodeId>> node_aggregation(const Graph& g, const Partition& p);

// Compressed graph sequence G^0..G^K with the per-level membership maps.
struct Hierarchy {
  std::vector<Graph> graphs;
  std::vector<std::vector<NodeId>> memberships;

  std::size_t achieved_levels() const { return memberships.size(); }
};

// Alternates local moving and aggregation up to max_levels times, stopping
// early when a level no longer shrinks the node count. Level k uses seed + k
// for its moving phase. graphs[0] is the input graph.
Hierarchy hierarchical_sampling(const Graph& g, std::size_t max_levels, std::uint64_t seed);

// Persistence: level<k>.edges for every level plus level<k>.membership
// ("node_id community_id" per line) for every compression step. The loader
// restores the exact id spaces, isolated community nodes included.
void save_hierarchy(const Hierarchy& h, const std::string& directory);
Hierarchy load_hierarchy(const std::string& directory);

}  // namespace hsrl
