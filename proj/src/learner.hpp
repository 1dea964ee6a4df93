#pragma once

#include <cstdint>

#include "embedding.hpp"
#include "graph.hpp"
#include "sampler.hpp"

namespace hsrl {

enum class Learner { kDeepWalk, kNode2Vec, kLine };

enum class LineOrder { kFirst, kSecond, kBoth };

// Shared knobs for every embedding learner. Defaults: d=64, t=10 walks of
// length l=40 per node, window w=5, eta=0.025, lambda=5 negatives.
struct LearnerConfig {
  std::size_t dim = 64;
  std::size_t walks_per_node = 10;
  std::size_t walk_length = 40;
  std::size_t window = 5;
  double learning_rate = 0.025;
  std::size_t negatives = 5;
  double p = 1.0;  // node2vec return bias
  double q = 1.0;  // node2vec in-out bias
  LineOrder line_order = LineOrder::kSecond;
  std::size_t epochs = 1;        // skip-gram passes over the walk corpus
  std::size_t line_samples = 0;  // total edge draws; 0 means 100 * |E|
  std::uint64_t seed = 0;

  void validate() const;
};

// rng substream ids, one per consumer of the user-facing seed
inline constexpr std::uint64_t kWalkStream = 1;
inline constexpr std::uint64_t kSgnsStream = 2;
inline constexpr std::uint64_t kLineStream = 3;

// Negative-sampling distribution: weighted degree raised to 0.75.
WeightedSampler make_negative_sampler(const Graph& g);

// Dispatches to walks + skip-gram (deepwalk forces p = q = 1, node2vec uses
// the configured bias) or to LINE edge sampling. One row per node.
EmbeddingMatrix learn_embeddings(const Graph& g, const LearnerConfig& cfg, Learner learner);

}  // namespace hsrl
