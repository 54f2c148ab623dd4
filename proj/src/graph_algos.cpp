#include "aggtree/graph_algos.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <string>

#include "aggtree/errors.hpp"

namespace aggtree {

std::vector<int> bfs_layers(const SimpleGraph& graph, NodeId from) {
  if (from < 0 || from >= graph.node_count()) {
    throw InvalidInput("node id out of range: " + std::to_string(from));
  }
  std::vector<int> dist(graph.node_count(), kUnreachable);
  std::queue<NodeId> frontier;
  dist[from] = 0;
  frontier.push(from);
  while (!frontier.empty()) {
    NodeId v = frontier.front();
    frontier.pop();
    for (NodeId w : graph.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

std::vector<int> hop_distances(const SimpleGraph& graph, NodeId from) {
  auto dist = bfs_layers(graph, from);
  if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) {
    throw InvalidInput("disconnected");
  }
  return dist;
}

std::vector<int> hop_distances(const Network& net, NodeId from) {
  return hop_distances(net.graph(), from);
}

std::vector<Rational> shortest_distances(const WeightedGraph& graph, NodeId from) {
  const int n = graph.node_count();
  if (from < 0 || from >= n) throw InvalidInput("node id out of range: " + std::to_string(from));
  std::vector<std::optional<Rational>> best(n);
  std::vector<char> done(n, 0);
  using Entry = std::pair<Rational, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  best[from] = Rational(0);
  heap.push({Rational(0), from});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (done[v]) continue;
    done[v] = 1;
    for (const auto& arc : graph.arcs(v)) {
      Rational candidate = d + arc.weight;
      if (!best[arc.to] || candidate < *best[arc.to]) {
        best[arc.to] = candidate;
        heap.push({candidate, arc.to});
      }
    }
  }
  std::vector<Rational> dist(n);
  for (NodeId v = 0; v < n; ++v) {
    if (!best[v]) throw InvalidInput("disconnected");
    dist[v] = *best[v];
  }
  return dist;
}

Path lexicographic_shortest_path(const WeightedGraph& graph, NodeId from, NodeId to,
                                 std::span<const Rational> dist_to) {
  Path path{from};
  NodeId current = from;
  while (current != to) {
    NodeId next = kNoNode;
    // arcs are sorted by id, so the first tight arc is the smallest id
    for (const auto& arc : graph.arcs(current)) {
      if (dist_to[arc.to] + arc.weight == dist_to[current]) {
        next = arc.to;
        break;
      }
    }
    if (next == kNoNode) throw InternalError("shortest path walk found no tight arc");
    path.push_back(next);
    current = next;
  }
  return path;
}

Path shortest_path(const WeightedGraph& graph, NodeId from, NodeId to) {
  auto dist_to = shortest_distances(graph, to);
  if (from < 0 || from >= graph.node_count()) {
    throw InvalidInput("node id out of range: " + std::to_string(from));
  }
  return lexicographic_shortest_path(graph, from, to, dist_to);
}

Rational path_length(const WeightedGraph& graph, const Path& path) {
  Rational total(0);
  for (std::size_t i = 1; i < path.size(); ++i) {
    auto w = graph.weight(path[i - 1], path[i]);
    if (!w) {
      throw InvalidInput("path uses non-edge " + std::to_string(path[i - 1]) + "-" +
                         std::to_string(path[i]));
    }
    total += *w;
  }
  return total;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<WeightedEdge> minimum_spanning_tree(const WeightedGraph& graph) {
  std::vector<WeightedEdge> edges = graph.edges();
  std::stable_sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  DisjointSets sets(graph.node_count());
  std::vector<WeightedEdge> tree;
  tree.reserve(graph.node_count() > 0 ? graph.node_count() - 1 : 0);
  for (const auto& e : edges) {
    if (sets.unite(e.u, e.v)) tree.push_back(e);
  }
  if (static_cast<int>(tree.size()) + 1 != graph.node_count()) throw InvalidInput("disconnected");
  return tree;
}

MetricClosure::MetricClosure(std::vector<NodeId> terminals, WeightedGraph graph,
                             std::vector<std::vector<Path>> witnesses)
    : terminals_(std::move(terminals)), graph_(std::move(graph)), witnesses_(std::move(witnesses)) {}

int MetricClosure::index_of(NodeId host_node) const {
  auto it = std::lower_bound(terminals_.begin(), terminals_.end(), host_node);
  if (it == terminals_.end() || *it != host_node) {
    throw InvalidInput("node " + std::to_string(host_node) + " is not a closure terminal");
  }
  return static_cast<int>(it - terminals_.begin());
}

Rational MetricClosure::weight(int i, int j) const {
  if (i == j) return Rational(0);
  return *graph_.weight(i, j);
}

MetricClosure metric_closure(const WeightedGraph& graph, std::span<const NodeId> terminals) {
  std::vector<NodeId> sorted(terminals.begin(), terminals.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 2) throw InvalidInput("metric closure needs at least two terminals");
  for (NodeId t : sorted) {
    if (t < 0 || t >= graph.node_count()) throw InvalidInput("terminal out of range: " + std::to_string(t));
  }
  const int k = static_cast<int>(sorted.size());
  std::vector<std::vector<Rational>> dist(k);
  for (int i = 0; i < k; ++i) dist[i] = shortest_distances(graph, sorted[i]);

  std::vector<std::vector<Path>> witnesses(k, std::vector<Path>(k));
  std::vector<WeightedEdge> closure_edges;
  for (int i = 0; i < k; ++i) {
    witnesses[i][i] = Path{sorted[i]};
    for (int j = i + 1; j < k; ++j) {
      Path forward = lexicographic_shortest_path(graph, sorted[i], sorted[j], dist[j]);
      witnesses[j][i] = Path(forward.rbegin(), forward.rend());
      witnesses[i][j] = std::move(forward);
      closure_edges.push_back({i, j, dist[i][sorted[j]]});
    }
  }
  return MetricClosure(std::move(sorted), WeightedGraph(k, std::move(closure_edges)),
                       std::move(witnesses));
}

MetricClosure metric_closure(const Network& net, std::span<const NodeId> terminals,
                             const Rational& edge_weight) {
  if (edge_weight <= 0) throw InvalidInput("edge weight must be positive");
  return metric_closure(with_uniform_length(net.graph(), edge_weight), terminals);
}

}  // namespace aggtree
