#include "walks.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "rng.hpp"
#include "sampler.hpp"

namespace hsrl {

WalkCorpus generate_walks(const Graph& g, const LearnerConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("cannot walk an empty graph");

  // Per-node transition tables over non-loop neighbors with positive weight.
  std::vector<std::vector<NodeId>> targets(n);
  std::vector<std::unique_ptr<WeightedSampler>> samplers(n);
  for (NodeId v = 0; v < n; ++v) {
    std::vector<double> weights;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.node == v || nb.weight <= 0.0) continue;
      targets[v].push_back(nb.node);
      weights.push_back(nb.weight);
    }
    if (!weights.empty()) samplers[v] = std::make_unique<WeightedSampler>(weights);
  }

  const bool plain = cfg.p == 1.0 && cfg.q == 1.0;
  const double inv_p = 1.0 / cfg.p;
  const double inv_q = 1.0 / cfg.q;
  const double max_bias = std::max({1.0, inv_p, inv_q});

  Rng rng(mix_seed(cfg.seed, kWalkStream));
  WalkCorpus corpus;
  corpus.walks.reserve(cfg.walks_per_node * n);

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});

  for (std::size_t pass = 0; pass < cfg.walks_per_node; ++pass) {
    rng.shuffle(order);
    for (NodeId start : order) {
      std::vector<NodeId> walk;
      walk.reserve(cfg.walk_length);
      walk.push_back(start);
      NodeId cur = start;
      NodeId prev = start;
      bool have_prev = false;
      while (walk.size() < cfg.walk_length) {
        if (!samplers[cur]) break;
        NodeId next;
        if (plain || !have_prev) {
          next = targets[cur][samplers[cur]->sample(rng)];
        } else {
          // rejection sampling against the biased kernel
          while (true) {
            const NodeId cand = targets[cur][samplers[cur]->sample(rng)];
            const double bias = cand == prev ? inv_p : (g.has_edge(cand, prev) ? 1.0 : inv_q);
            if (rng.uniform() * max_bias < bias) {
              next = cand;
              break;
            }
          }
        }
        walk.push_back(next);
        prev = cur;
        cur = next;
        have_prev = true;
      }
      corpus.walks.push_back(std::move(walk));
    }
  }
  return corpus;
}

}  // namespace hsrl
