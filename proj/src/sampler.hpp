#pragma once

#include <cstdint>
#include <vector>

#include "rng.hpp"

namespace hsrl {

// Walker/Vose alias table over a non-negative weight vector: O(n) setup,
// O(1) draws, index i drawn with probability weights[i] / sum(weights).
class WeightedSampler {
 public:
  explicit WeightedSampler(const std::vector<double>& weights);

  std::size_t sample(Rng& rng) const;
  std::size_t size() const { return prob_.size(); }

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace hsrl
