#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsrl {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;
  double weight;
};

struct Neighbor {
  NodeId node;
  double weight;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Undirected weighted graph with dense node ids. Immutable after
// construction, so concurrent reads need no synchronization. Parallel and
// reversed duplicate edges are merged at construction by summing weights;
// self-loops are allowed and stored once.
//
// Degree convention: a self-loop of weight w contributes 2w to its node's
// weighted degree and w to the total weight m. This is the convention under
// which modularity survives community aggregation unchanged.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t node_count, const std::vector<Edge>& edges,
        std::vector<std::string> labels = {});

  std::size_t node_count() const { return adjacency_.size(); }

  // Number of stored distinct edges, self-loops included.
  std::size_t edge_count() const { return edges_.size(); }

  // Canonicalized (u <= v), sorted, merged.
  const std::vector<Edge>& edges() const { return edges_; }

  // Sorted by neighbor id; a self-loop appears once with its stored weight.
  std::span<const Neighbor> neighbors(NodeId i) const {
    check_node(i);
    return adjacency_[i];
  }

  // k_i = sum of incident edge weights, self-loop counted twice.
  double weighted_degree(NodeId i) const {
    check_node(i);
    return degree_[i];
  }

  double self_loop_weight(NodeId i) const {
    check_node(i);
    return loop_[i];
  }

  // m = sum over distinct edges of w (self-loops once). Throws if zero,
  // since everything downstream divides by it.
  double total_weight() const;

  bool has_edge(NodeId u, NodeId v) const;
  double edge_weight(NodeId u, NodeId v) const;  // 0 when absent

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(NodeId i) const;

 private:
  void check_node(NodeId i) const {
    if (i >= adjacency_.size()) throw std::out_of_range("node id " + std::to_string(i) + " out of range");
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> degree_;
  std::vector<double> loop_;
  double total_weight_ = 0.0;
  std::vector<std::string> labels_;
};

// Edge-list ingestion. Each non-comment line is "u v" or "u v w" with
// whitespace-separated tokens; '#' lines and blank lines are skipped; tokens
// are mapped to dense ids in first-appearance order. Missing weights default
// to default_weight. Malformed lines raise ParseError with the line number.
Graph load_edge_list(std::istream& in, double default_weight = 1.0);
Graph load_edge_list_file(const std::string& path, double default_weight = 1.0);
Graph parse_edge_list(const std::string& text, double default_weight = 1.0);

// One "label label weight" line per stored edge, full double precision.
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

// Graphviz export, one "--" edge per line with the weight as attribute.
void save_dot(const Graph& g, std::ostream& out);
void save_dot_file(const Graph& g, const std::string& path);

}  // namespace hsrl
