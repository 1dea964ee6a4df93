#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace hsrl {

// Dense row-major node x dim matrix of doubles.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::size_t rows, std::size_t dim)
      : rows_(rows), dim_(dim), data_(rows * dim, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t dim() const { return dim_; }

  std::span<double> row(std::size_t i) {
    check_row(i);
    return {data_.data() + i * dim_, dim_};
  }
  std::span<const double> row(std::size_t i) const {
    check_row(i);
    return {data_.data() + i * dim_, dim_};
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  void check_row(std::size_t i) const {
    if (i >= rows_) throw std::out_of_range("embedding row " + std::to_string(i) + " out of range");
  }

  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

// word2vec-style init: targets uniform in [-0.5/dim, 0.5/dim].
EmbeddingMatrix uniform_init(std::size_t rows, std::size_t dim, Rng& rng);

// Text format: header "node_count dim", then one "label f1 ... fd" line per
// node with 6 significant digits. Labels come from `labels` when non-null,
// otherwise the row index is used.
void save_embeddings(const EmbeddingMatrix& z, std::ostream& out, const Graph* labels = nullptr);
void save_embeddings_file(const EmbeddingMatrix& z, const std::string& path,
                          const Graph* labels = nullptr);

// Reads the text format back; returns the matrix and the label column.
std::pair<EmbeddingMatrix, std::vector<std::string>> load_embeddings(std::istream& in);
std::pair<EmbeddingMatrix, std::vector<std::string>> load_embeddings_file(const std::string& path);

}  // namespace hsrl
