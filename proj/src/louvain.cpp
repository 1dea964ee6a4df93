#include "louvain.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "rng.hpp"

namespace hsrl {

Partition singleton_partition(const Graph& g) {
  const std::size_t n = g.node_count();
  Partition p;
  p.assignment.resize(n);
  std::iota(p.assignment.begin(), p.assignment.end(), NodeId{0});
  p.community_total_degree.resize(n);
  p.community_internal_weight.resize(n);
  for (NodeId i = 0; i < n; ++i) {
    p.community_total_degree[i] = g.weighted_degree(i);
    p.community_internal_weight[i] = g.self_loop_weight(i);
  }
  return p;
}

Partition partition_from_assignment(const Graph& g, const std::vector<NodeId>& assignment) {
  const std::size_t n = g.node_count();
  if (assignment.size() != n)
    throw std::invalid_argument("assignment size does not match graph node count");

  Partition p;
  p.assignment.resize(n);
  std::unordered_map<NodeId, NodeId> dense;
  dense.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = dense.try_emplace(assignment[i], static_cast<NodeId>(dense.size()));
    p.assignment[i] = it->second;
  }
  const std::size_t c = dense.size();
  p.community_total_degree.assign(c, 0.0);
  p.community_internal_weight.assign(c, 0.0);
  for (NodeId i = 0; i < n; ++i)
    p.community_total_degree[p.assignment[i]] += g.weighted_degree(i);
  for (const Edge& e : g.edges())
    if (p.assignment[e.u] == p.assignment[e.v])
      p.community_internal_weight[p.assignment[e.u]] += e.weight;
  return p;
}

double modularity(const Graph& g, const Partition& p) {
  const std::size_t n = g.node_count();
  if (p.assignment.size() != n)
    throw std::invalid_argument("partition does not cover the graph");
  const double m = g.total_weight();

  NodeId max_c = 0;
  for (NodeId c : p.assignment) max_c = std::max(max_c, c);
  std::vector<double> tot(max_c + 1, 0.0), win(max_c + 1, 0.0);
  for (NodeId i = 0; i < n; ++i) tot[p.assignment[i]] += g.weighted_degree(i);
  for (const Edge& e : g.edges())
    if (p.assignment[e.u] == p.assignment[e.v]) win[p.assignment[e.u]] += e.weight;

  double q = 0.0;
  for (std::size_t c = 0; c < tot.size(); ++c) {
    const double frac = tot[c] / (2.0 * m);
    q += win[c] / m - frac * frac;
  }
  return q;
}

Partition modularity_optimization(const Graph& g, std::uint64_t seed,
                                  std::vector<MoveRecord>* trace) {
  const std::size_t n = g.node_count();
  const double m = g.total_weight();

  // Community slots are node ids; they empty out but are never renumbered
  // until the end, so cached aggregates stay index-stable.
  std::vector<NodeId> assign(n);
  std::iota(assign.begin(), assign.end(), NodeId{0});
  std::vector<double> tot(n), win(n);
  for (NodeId i = 0; i < n; ++i) {
    tot[i] = g.weighted_degree(i);
    win[i] = g.self_loop_weight(i);
  }

  Rng rng(seed);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});

  std::vector<double> link(n, 0.0);        // weight from the moving node into each community
  std::vector<std::uint64_t> stamp(n, 0);  // validity marker for `link`
  std::uint64_t visit = 0;
  std::vector<NodeId> touched;

  while (true) {
    rng.shuffle(order);
    double sweep_gain = 0.0;
    for (NodeId i : order) {
      const NodeId from = assign[i];
      const double k_i = g.weighted_degree(i);
      const double loop_i = g.self_loop_weight(i);

      ++visit;
      touched.clear();
      for (const Neighbor& nb : g.neighbors(i)) {
        if (nb.node == i) continue;
        const NodeId c = assign[nb.node];
        if (stamp[c] != visit) {
          stamp[c] = visit;
          link[c] = 0.0;
          touched.push_back(c);
        }
        link[c] += nb.weight;
      }
      const double link_from = stamp[from] == visit ? link[from] : 0.0;

      // Take i out of its community, then score re-insertion into every
      // adjacent community. Insertion gain into c (i currently detached):
      //   dQ = link_c / m - tot_c * k_i / (2 m^2)
      // which is the per-community closed form differentiated for one node.
      tot[from] -= k_i;
      win[from] -= link_from + loop_i;

      const double scale = k_i / (2.0 * m * m);
      NodeId best = from;
      double best_gain = link_from / m - tot[from] * scale;
      const double stay_gain = best_gain;
      std::sort(touched.begin(), touched.end());
      for (NodeId c : touched) {
        if (c == from) continue;
        const double gain = link[c] / m - tot[c] * scale;
        if (gain > best_gain) {  // strict: equal gains keep the lowest id seen
          best_gain = gain;
          best = c;
        }
      }

      const double link_best = best == from ? link_from : link[best];
      tot[best] += k_i;
      win[best] += link_best + loop_i;
      assign[i] = best;

      if (best != from) {
        const double gain = best_gain - stay_gain;
        sweep_gain += gain;
        if (trace) trace->push_back({i, from, best, gain});
      }
    }
    if (sweep_gain < kModularityEps) break;
  }
  return partition_from_assignment(g, assign);
}

std::pair<Graph, std::vector<NodeId>> node_aggregation(const Graph& g, const Partition& p) {
  const std::size_t n = g.node_count();
  if (p.assignment.size() != n)
    throw std::invalid_argument("partition does not cover the graph");
  const std::size_t c = p.community_count();

  std::unordered_map<std::uint64_t, double> acc;
  acc.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    NodeId cu = p.assignment[e.u];
    NodeId cv = p.assignment[e.v];
    if (cu > cv) std::swap(cu, cv);
    acc[static_cast<std::uint64_t>(cu) * c + cv] += e.weight;
  }
  std::vector<Edge> edges;
  edges.reserve(acc.size());
  for (const auto& [key, w] : acc)
    edges.push_back({static_cast<NodeId>(key / c), static_cast<NodeId>(key % c), w});
  return {Graph(c, edges), p.assignment};
}

Hierarchy hierarchical_sampling(const Graph& g, std::size_t max_levels, std::uint64_t seed) {
  Hierarchy h;
  h.graphs.push_back(g);
  for (std::size_t k = 0; k < max_levels; ++k) {
    const Graph& cur = h.graphs.back();
    Partition p = modularity_optimization(cur, seed + k);
    if (p.community_count() == cur.node_count()) break;  // no further compression
    auto [next, membership] = node_aggregation(cur, p);
    h.graphs.push_back(std::move(next));
    h.memberships.push_back(std::move(membership));
  }
  return h;
}

namespace {

std::filesystem::path edges_path(const std::string& dir, std::size_t k) {
  return std::filesystem::path(dir) / ("level" + std::to_string(k) + ".edges");
}

std::filesystem::path membership_path(const std::string& dir, std::size_t k) {
  return std::filesystem::path(dir) / ("level" + std::to_string(k) + ".membership");
}

// Level files carry dense ids, not labels, so the id spaces of the edge and
// membership files line up exactly on reload.
void save_level_edges(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.weight);
    out << e.u << ' ' << e.v << ' ' << buf << '\n';
  }
}

std::vector<Edge> read_level_edges(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::uint64_t u, v;
    double w;
    if (!(ls >> u >> v >> w)) {
      if (line.empty() || line[0] == '#') continue;
      throw ParseError(lineno, "malformed level edge line in " + path.string());
    }
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
  }
  return edges;
}

}  // namespace

void save_hierarchy(const Hierarchy& h, const std::string& directory) {
  std::filesystem::create_directories(directory);
  for (std::size_t k = 0; k < h.graphs.size(); ++k)
    save_level_edges(h.graphs[k], edges_path(directory, k));
  for (std::size_t k = 0; k < h.memberships.size(); ++k) {
    std::ofstream out(membership_path(directory, k));
    if (!out)
      throw std::runtime_error("cannot write membership file for level " + std::to_string(k));
    for (std::size_t i = 0; i < h.memberships[k].size(); ++i)
      out << i << ' ' << h.memberships[k][i] << '\n';
  }
}

Hierarchy load_hierarchy(const std::string& directory) {
  // Node counts come from the membership files; the edge files alone could
  // not represent isolated nodes.
  std::vector<std::vector<NodeId>> memberships;
  for (std::size_t k = 0;; ++k) {
    auto path = membership_path(directory, k);
    if (!std::filesystem::exists(path)) break;
    std::ifstream in(path);
    std::vector<NodeId> memb;
    std::uint64_t node, comm;
    std::size_t expected = 0;
    while (in >> node >> comm) {
      if (node != expected)
        throw std::runtime_error("membership file for level " + std::to_string(k) +
                                 " is not densely indexed");
      memb.push_back(static_cast<NodeId>(comm));
      ++expected;
    }
    memberships.push_back(std::move(memb));
  }

  Hierarchy h;
  const std::size_t levels = memberships.size() + 1;
  for (std::size_t k = 0; k < levels; ++k) {
    std::vector<Edge> edges = read_level_edges(edges_path(directory, k));
    std::size_t count;
    if (k < memberships.size()) {
      count = memberships[k].size();
    } else if (!memberships.empty()) {
      NodeId max_c = 0;
      for (NodeId c : memberships.back()) max_c = std::max(max_c, c);
      count = static_cast<std::size_t>(max_c) + 1;
    } else {
      // single-level hierarchy: fall back to the largest id in the edge file
      NodeId max_id = 0;
      for (const Edge& e : edges) max_id = std::max({max_id, e.u, e.v});
      count = edges.empty() ? 0 : static_cast<std::size_t>(max_id) + 1;
    }
    h.graphs.emplace_back(count, edges);
  }
  h.memberships = std::move(memberships);
  return h;
}

}  // namespace hsrl
