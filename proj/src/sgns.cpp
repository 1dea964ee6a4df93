#include "sgns.hpp"

#include <algorithm>
#include <cmath>

#include "rng.hpp"
#include "sampler.hpp"

namespace hsrl {

namespace {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// -log sigmoid(x), stable for large |x|
inline double softplus_neg(double x) {
  return x > 0.0 ? std::log1p(std::exp(-x)) : -x + std::log1p(std::exp(x));
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

SgnsPairGradient sgns_pair_objective(std::span<const double> target,
                                     std::span<const double> context,
                                     const std::vector<std::vector<double>>& negatives) {
  const std::size_t d = target.size();
  SgnsPairGradient out;
  out.d_target.assign(d, 0.0);
  out.d_context.assign(d, 0.0);

  const double s = dot(target, context);
  const double g = sigmoid(s) - 1.0;
  out.loss = softplus_neg(s);
  for (std::size_t i = 0; i < d; ++i) {
    out.d_target[i] += g * context[i];
    out.d_context[i] = g * target[i];
  }
  for (const auto& neg : negatives) {
    const double sn = dot(target, std::span<const double>(neg));
    const double gn = sigmoid(sn);
    out.loss += softplus_neg(-sn);
    auto& dn = out.d_negatives.emplace_back(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      out.d_target[i] += gn * neg[i];
      dn[i] = gn * target[i];
    }
  }
  return out;
}

EmbeddingMatrix train_sgns(const WalkCorpus& corpus, const Graph& g, const LearnerConfig& cfg,
                           TrainStats* stats) {
  cfg.validate();
  if (corpus.walks.empty()) throw std::invalid_argument("walk corpus is empty");
  const std::size_t n = g.node_count();
  const std::size_t d = cfg.dim;
  const std::size_t w = cfg.window;

  Rng rng(mix_seed(cfg.seed, kSgnsStream));
  EmbeddingMatrix target = uniform_init(n, d, rng);

  // total pair count fixes the learning-rate schedule up front
  std::size_t pairs_per_epoch = 0;
  for (const auto& walk : corpus.walks) {
    const std::size_t len = walk.size();
    for (std::size_t c = 0; c < len; ++c) {
      const std::size_t lo = c > w ? c - w : 0;
      const std::size_t hi = std::min(c + w, len - 1);
      pairs_per_epoch += hi - lo;  // window minus the center itself
    }
  }
  const std::size_t total = pairs_per_epoch * cfg.epochs;
  if (stats) *stats = TrainStats{};
  if (total == 0) return target;  // nothing to ever update

  EmbeddingMatrix context(n, d);
  WeightedSampler neg_table = make_negative_sampler(g);

  const double lr0 = cfg.learning_rate;
  const double lr_floor = lr0 * 1e-4;
  const std::size_t first_cut = std::max<std::size_t>(1, total / 10);
  const std::size_t last_cut = total - first_cut;
  double first_loss = 0.0, last_loss = 0.0;
  std::size_t first_n = 0, last_n = 0;

  std::vector<double> acc(d);
  std::size_t done = 0;
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (const auto& walk : corpus.walks) {
      const std::size_t len = walk.size();
      for (std::size_t c = 0; c < len; ++c) {
        const std::size_t lo = c > w ? c - w : 0;
        const std::size_t hi = std::min(c + w, len - 1);
        for (std::size_t jpos = lo; jpos <= hi; ++jpos) {
          if (jpos == c) continue;
          const double lr =
              std::max(lr0 * (1.0 - static_cast<double>(done) / static_cast<double>(total)),
                       lr_floor);
          double* x = target.row(walk[c]).data();
          double* y = context.row(walk[jpos]).data();

          std::fill(acc.begin(), acc.end(), 0.0);
          double s = 0.0;
          for (std::size_t i = 0; i < d; ++i) s += x[i] * y[i];
          double loss = softplus_neg(s);
          const double gpos = sigmoid(s) - 1.0;
          for (std::size_t i = 0; i < d; ++i) {
            acc[i] += gpos * y[i];
            y[i] -= lr * gpos * x[i];
          }
          for (std::size_t t = 0; t < cfg.negatives; ++t) {
            const auto nid = static_cast<NodeId>(neg_table.sample(rng));
            if (nid == walk[jpos]) continue;
            double* z = context.row(nid).data();
            double sn = 0.0;
            for (std::size_t i = 0; i < d; ++i) sn += x[i] * z[i];
            loss += softplus_neg(-sn);
            const double gneg = sigmoid(sn);
            for (std::size_t i = 0; i < d; ++i) {
              acc[i] += gneg * z[i];
              z[i] -= lr * gneg * x[i];
            }
          }
          for (std::size_t i = 0; i < d; ++i) x[i] -= lr * acc[i];

          if (done < first_cut) {
            first_loss += loss;
            ++first_n;
          }
          if (done >= last_cut) {
            last_loss += loss;
            ++last_n;
          }
          ++done;
        }
      }
    }
  }
  if (stats) {
    stats->samples = done;
    stats->first_decile_loss = first_n ? first_loss / static_cast<double>(first_n) : 0.0;
    stats->last_decile_loss = last_n ? last_loss / static_cast<double>(last_n) : 0.0;
  }
  return target;
}

}  // namespace hsrl
