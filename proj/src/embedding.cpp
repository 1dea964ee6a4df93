#include "embedding.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hsrl {

EmbeddingMatrix uniform_init(std::size_t rows, std::size_t dim, Rng& rng) {
  EmbeddingMatrix z(rows, dim);
  const double half = 0.5 / static_cast<double>(dim);
  for (double& x : z.data()) x = rng.uniform(-half, half);
  return z;
}

void save_embeddings(const EmbeddingMatrix& z, std::ostream& out, const Graph* labels) {
  if (labels && labels->node_count() != z.rows())
    throw std::invalid_argument("label graph does not match embedding rows");
  out << z.rows() << ' ' << z.dim() << '\n';
  char buf[32];
  for (std::size_t i = 0; i < z.rows(); ++i) {
    out << (labels ? labels->label(static_cast<NodeId>(i)) : std::to_string(i));
    for (double x : z.row(i)) {
      std::snprintf(buf, sizeof(buf), "%.6g", x);
      out << ' ' << buf;
    }
    out << '\n';
  }
}

void save_embeddings_file(const EmbeddingMatrix& z, const std::string& path, const Graph* labels) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  save_embeddings(z, out, labels);
}

std::pair<EmbeddingMatrix, std::vector<std::string>> load_embeddings(std::istream& in) {
  std::size_t rows = 0, dim = 0;
  if (!(in >> rows >> dim)) throw ParseError(1, "missing embedding header");
  EmbeddingMatrix z(rows, dim);
  std::vector<std::string> labels(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!(in >> labels[i])) throw ParseError(i + 2, "missing embedding row");
    auto r = z.row(i);
    for (std::size_t j = 0; j < dim; ++j)
      if (!(in >> r[j])) throw ParseError(i + 2, "short embedding row");
  }
  return {std::move(z), std::move(labels)};
}

std::pair<EmbeddingMatrix, std::vector<std::string>> load_embeddings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return load_embeddings(in);
}

}  // namespace hsrl
