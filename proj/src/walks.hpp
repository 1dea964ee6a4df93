#pragma once

#include <vector>

#include "graph.hpp"
#include "learner.hpp"

namespace hsrl {

// Truncated random walk corpus: walks_per_node walks from every node, each at
// most walk_length long. Consecutive entries are always edges of the source
// graph; an isolated node yields a length-1 walk.
struct WalkCorpus {
  std::vector<std::vector<NodeId>> walks;
};

// Second-order biased walks. Each step samples the next node with probability
// proportional to edge weight times the node2vec factor: 1/p when stepping
// back to the previous node, 1 when the candidate also neighbors the previous
// node, 1/q otherwise. With p = q = 1 this is plain weighted sampling and the
// bias machinery is bypassed, so deepwalk and node2vec draw identical
// corpora from the same seed. Self-loops never appear as transitions.
WalkCorpus generate_walks(const Graph& g, const LearnerConfig& cfg);

}  // namespace hsrl
