#pragma once

#include <span>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"
#include "learner.hpp"
#include "walks.hpp"

namespace hsrl {

// Loss means over the first and last tenth of the update stream, for
// convergence checks.
struct TrainStats {
  double first_decile_loss = 0.0;
  double last_decile_loss = 0.0;
  std::size_t samples = 0;
};

// Loss and analytic gradients of one skip-gram sample with fixed negatives:
//   L = -log sigmoid(t.c) - sum_n log sigmoid(-t.n)
struct SgnsPairGradient {
  double loss;
  std::vector<double> d_target;
  std::vector<double> d_context;
  std::vector<std::vector<double>> d_negatives;
};

SgnsPairGradient sgns_pair_objective(std::span<const double> target,
                                     std::span<const double> context,
                                     const std::vector<std::vector<double>>& negatives);

// Skip-gram with negative sampling over a walk corpus. Every node within
// `window` of a center forms a positive pair; each pair gets `negatives`
// contexts drawn from the degree^0.75 table. SGD with the learning rate
// decaying linearly from eta to eta * 1e-4 over the pair stream. Returns the
// target matrix; single-threaded and bitwise deterministic under one seed.
EmbeddingMatrix train_sgns(const WalkCorpus& corpus, const Graph& g, const LearnerConfig& cfg,
                           TrainStats* stats = nullptr);

}  // namespace hsrl
