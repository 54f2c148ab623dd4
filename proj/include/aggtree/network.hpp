#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aggtree/rational.hpp"

namespace aggtree {

/// Nodes are dense integers 0..n-1.
using NodeId = int;
inline constexpr NodeId kNoNode = -1;

/// Undirected edge, always stored with u < v.
struct Edge {
  NodeId u = kNoNode;
  NodeId v = kNoNode;
  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(NodeId a, NodeId b);

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

enum class Role { sink, source, relay };

/// Simple undirected graph with sorted adjacency lists. May be disconnected;
/// `Network` adds the connectivity requirement on top.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(int node_count, std::vector<Edge> edges);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(NodeId a, NodeId b) const;
  bool connected() const;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<Edge> edges_;
};

/// A sensor network: connected graph, per-node report sizes, one sink.
/// Sources are the nodes with a positive report size; every other non-sink
/// node is a relay.
class Network {
 public:
  Network(int node_count, std::vector<Edge> edges, std::vector<std::int64_t> report_size,
          NodeId sink, std::optional<std::vector<Point>> coords = std::nullopt);

  int node_count() const { return graph_.node_count(); }
  const SimpleGraph& graph() const { return graph_; }
  std::span<const NodeId> neighbors(NodeId v) const { return graph_.neighbors(v); }
  const std::vector<Edge>& edges() const { return graph_.edges(); }
  bool has_edge(NodeId a, NodeId b) const { return graph_.has_edge(a, b); }

  NodeId sink() const { return sink_; }
  std::int64_t report_size(NodeId v) const { return report_size_.at(v); }
  const std::vector<std::int64_t>& report_sizes() const { return report_size_; }
  std::int64_t total_report_size() const { return total_report_; }
  Role role(NodeId v) const;
  bool is_source(NodeId v) const { return report_size_.at(v) > 0; }

  /// Ascending ids.
  const std::vector<NodeId>& sources() const { return sources_; }
  const std::vector<NodeId>& relays() const { return relays_; }
  bool has_relays() const { return !relays_.empty(); }

  const std::optional<std::vector<Point>>& coords() const { return coords_; }

 private:
  SimpleGraph graph_;
  std::vector<std::int64_t> report_size_;
  NodeId sink_ = kNoNode;
  std::vector<NodeId> sources_;
  std::vector<NodeId> relays_;
  std::int64_t total_report_ = 0;
  std::optional<std::vector<Point>> coords_;
};

struct WeightedEdge {
  NodeId u = kNoNode;
  NodeId v = kNoNode;
  Rational weight;
};

struct Arc {
  NodeId to = kNoNode;
  Rational weight;
};

/// Connected undirected graph with strictly positive edge lengths.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int node_count, std::vector<WeightedEdge> edges);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  /// Sorted by `to`.
  std::span<const Arc> arcs(NodeId v) const { return adjacency_.at(v); }
  /// Sorted by (u, v) with u < v.
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  std::optional<Rational> weight(NodeId a, NodeId b) const;
  Rational total_weight() const;

 private:
  std::vector<std::vector<Arc>> adjacency_;
  std::vector<WeightedEdge> edges_;
};

/// Every edge of `graph` with the same length. Requires `graph` connected.
WeightedGraph with_uniform_length(const SimpleGraph& graph, const Rational& length);

}  // namespace aggtree
