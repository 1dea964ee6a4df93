#include "sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace hsrl {

WeightedSampler::WeightedSampler(const std::vector<double>& weights) {
  const std::size_t n = weights.size();
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0 || !std::isfinite(w))
      throw std::invalid_argument("sampler weights must be finite and non-negative");
    total += w;
  }
  if (n == 0 || total <= 0.0)
    throw std::invalid_argument("sampler needs at least one positive weight");

  prob_.resize(n);
  alias_.assign(n, 0);
  std::vector<std::uint32_t> small, large;
  small.reserve(n);
  large.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    prob_[i] = weights[i] * static_cast<double>(n) / total;
    (prob_[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    std::uint32_t s = small.back();
    std::uint32_t l = large.back();
    small.pop_back();
    alias_[s] = l;
    prob_[l] -= 1.0 - prob_[s];
    if (prob_[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // leftovers are 1 up to rounding
  for (std::uint32_t i : small) prob_[i] = 1.0;
  for (std::uint32_t i : large) prob_[i] = 1.0;
}

std::size_t WeightedSampler::sample(Rng& rng) const {
  std::size_t i = static_cast<std::size_t>(rng.below(prob_.size()));
  return rng.uniform() < prob_[i] ? i : alias_[i];
}

}  // namespace hsrl
