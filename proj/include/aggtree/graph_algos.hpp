#pragma once

#include <span>
#include <vector>

#include "aggtree/network.hpp"
#include "aggtree/rational.hpp"

namespace aggtree {

using Path = std::vector<NodeId>;

inline constexpr int kUnreachable = -1;

/// BFS layer of every node, kUnreachable where no path exists.
std::vector<int> bfs_layers(const SimpleGraph& graph, NodeId from);

/// BFS layer of every node. Throws InvalidInput("disconnected") if any node
/// cannot be reached.
std::vector<int> hop_distances(const SimpleGraph& graph, NodeId from);
std::vector<int> hop_distances(const Network& net, NodeId from);

/// Single-source shortest path lengths (Dijkstra, exact arithmetic).
std::vector<Rational> shortest_distances(const WeightedGraph& graph, NodeId from);

/// Minimum-length path; among those, the lexicographically smallest node
/// sequence. `from == to` yields the one-node path {from} (length 0).
Path shortest_path(const WeightedGraph& graph, NodeId from, NodeId to);

/// Same tie-break, with the distances to `to` already known.
Path lexicographic_shortest_path(const WeightedGraph& graph, NodeId from, NodeId to,
                                 std::span<const Rational> dist_to);

Rational path_length(const WeightedGraph& graph, const Path& path);

/// Kruskal with (weight, u, v) lexicographic order; returns |V|-1 edges.
std::vector<WeightedEdge> minimum_spanning_tree(const WeightedGraph& graph);

/// Complete graph over a terminal set, weighted by shortest-path length in
/// the host graph, with one witness path per terminal pair fixed at build time.
class MetricClosure {
 public:
  MetricClosure(std::vector<NodeId> terminals, WeightedGraph graph,
                std::vector<std::vector<Path>> witnesses);

  /// Closure index i corresponds to host node terminals()[i] (ascending).
  const std::vector<NodeId>& terminals() const { return terminals_; }
  const WeightedGraph& graph() const { return graph_; }
  int index_of(NodeId host_node) const;
  /// Host-node path from terminals()[i] to terminals()[j].
  const Path& witness(int i, int j) const { return witnesses_.at(i).at(j); }
  Rational weight(int i, int j) const;

 private:
  std::vector<NodeId> terminals_;
  WeightedGraph graph_;
  std::vector<std::vector<Path>> witnesses_;
};

/// Hop-count closure: weight(u, v) = hop distance * edge_weight.
MetricClosure metric_closure(const Network& net, std::span<const NodeId> terminals,
                             const Rational& edge_weight);
MetricClosure metric_closure(const WeightedGraph& graph, std::span<const NodeId> terminals);

}  // namespace aggtree
