#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace hsrl {

Graph::Graph(std::size_t node_count, const std::vector<Edge>& edges,
             std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != node_count)
    throw std::invalid_argument("label count does not match node count");

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count)
      throw std::out_of_range("edge endpoint out of range");
    if (e.weight < 0.0 || !std::isfinite(e.weight))
      throw std::invalid_argument("edge weight must be a finite non-negative real");
    canon.push_back(e.u <= e.v ? e : Edge{e.v, e.u, e.weight});
  }
  std::sort(canon.begin(), canon.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const Edge& e : canon) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
      edges_.back().weight += e.weight;  // merge duplicates
    else
      edges_.push_back(e);
  }

  adjacency_.resize(node_count);
  degree_.assign(node_count, 0.0);
  loop_.assign(node_count, 0.0);
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      adjacency_[e.u].push_back({e.u, e.weight});
      degree_[e.u] += 2.0 * e.weight;
      loop_[e.u] += e.weight;
    } else {
      adjacency_[e.u].push_back({e.v, e.weight});
      adjacency_[e.v].push_back({e.u, e.weight});
      degree_[e.u] += e.weight;
      degree_[e.v] += e.weight;
    }
    total_weight_ += e.weight;
  }
  for (auto& nbrs : adjacency_)
    std::sort(nbrs.begin(), nbrs.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
}

double Graph::total_weight() const {
  if (total_weight_ <= 0.0)
    throw std::domain_error("graph total weight is zero");
  return total_weight_;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto& nbrs = adjacency_[u];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Neighbor& n, NodeId id) { return n.node < id; });
  return it != nbrs.end() && it->node == v;
}

double Graph::edge_weight(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto& nbrs = adjacency_[u];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Neighbor& n, NodeId id) { return n.node < id; });
  return (it != nbrs.end() && it->node == v) ? it->weight : 0.0;
}

std::string Graph::label(NodeId i) const {
  check_node(i);
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

namespace {

bool parse_weight(const std::string& token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

}  // namespace

Graph load_edge_list(std::istream& in, double default_weight) {
  if (default_weight < 0.0 || !std::isfinite(default_weight))
    throw std::invalid_argument("default weight must be a finite non-negative real");

  std::unordered_map<std::string, NodeId> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  auto intern = [&](const std::string& token) -> NodeId {
    auto [it, inserted] = index.try_emplace(token, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> tokens;
  while (std::getline(in, line)) {
    ++lineno;
    tokens.clear();
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() < 2 || tokens.size() > 3)
      throw ParseError(lineno, "expected 'u v' or 'u v w', got " +
                                   std::to_string(tokens.size()) + " token(s)");
    double w = default_weight;
    if (tokens.size() == 3) {
      if (!parse_weight(tokens[2], w))
        throw ParseError(lineno, "weight '" + tokens[2] + "' is not a finite number");
      if (w < 0.0)
        throw ParseError(lineno, "negative weight " + tokens[2]);
    }
    edges.push_back({intern(tokens[0]), intern(tokens[1]), w});
  }
  if (edges.empty()) throw ParseError(lineno, "edge list is empty");
  return Graph(labels.size(), edges, std::move(labels));
}

Graph load_edge_list_file(const std::string& path, double default_weight) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return load_edge_list(in, default_weight);
}

Graph parse_edge_list(const std::string& text, double default_weight) {
  std::istringstream in(text);
  return load_edge_list(in, default_weight);
}

void save_edge_list(const Graph& g, std::ostream& out) {
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.weight);
    out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << buf << '\n';
  }
}

void save_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  save_edge_list(g, out);
}

void save_dot(const Graph& g, std::ostream& out) {
  char buf[64];
  out << "graph g {\n";
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.weight);
    out << "  \"" << g.label(e.u) << "\" -- \"" << g.label(e.v) << "\" [weight=" << buf
        << "];\n";
  }
  out << "}\n";
}

void save_dot_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  save_dot(g, out);
}

}  // namespace hsrl
