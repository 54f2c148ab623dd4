#include "aggtree/network.hpp"

#include <algorithm>
#include <string>

#include "aggtree/errors.hpp"

namespace aggtree {

namespace {

bool bfs_reaches_all(const std::vector<std::vector<NodeId>>& adjacency) {
  if (adjacency.empty()) return true;
  std::vector<char> seen(adjacency.size(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adjacency.size();
}

void check_node(NodeId v, int n) {
  if (v < 0 || v >= n) throw InvalidInput("node id out of range: " + std::to_string(v));
}

}  // namespace

Edge make_edge(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

SimpleGraph::SimpleGraph(int node_count, std::vector<Edge> edges) {
  if (node_count <= 0) throw InvalidInput("graph needs at least one node");
  adjacency_.resize(node_count);
  for (auto& e : edges) {
    check_node(e.u, node_count);
    check_node(e.v, node_count);
    if (e.u == e.v) throw InvalidInput("self-loop at node " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    auto dup = *std::adjacent_find(edges.begin(), edges.end());
    throw InvalidInput("duplicate edge " + std::to_string(dup.u) + "-" + std::to_string(dup.v));
  }
  for (const auto& e : edges) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  edges_ = std::move(edges);
}

bool SimpleGraph::has_edge(NodeId a, NodeId b) const {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

bool SimpleGraph::connected() const { return bfs_reaches_all(adjacency_); }

Network::Network(int node_count, std::vector<Edge> edges, std::vector<std::int64_t> report_size,
                 NodeId sink, std::optional<std::vector<Point>> coords)
    : graph_(node_count, std::move(edges)),
      report_size_(std::move(report_size)),
      sink_(sink),
      coords_(std::move(coords)) {
  check_node(sink, node_count);
  if (static_cast<int>(report_size_.size()) != node_count) {
    throw InvalidInput("report size count does not match node count");
  }
  if (coords_ && static_cast<int>(coords_->size()) != node_count) {
    throw InvalidInput("coordinate count does not match node count");
  }
  if (!graph_.connected()) throw InvalidInput("disconnected");
  if (report_size_[sink] != 0) throw InvalidInput("sink must have report size 0");
  for (NodeId v = 0; v < node_count; ++v) {
    if (report_size_[v] < 0) throw InvalidInput("negative report size at node " + std::to_string(v));
    if (v == sink) continue;
    if (report_size_[v] > 0) {
      sources_.push_back(v);
      total_report_ += report_size_[v];
    } else {
      relays_.push_back(v);
    }
  }
}

Role Network::role(NodeId v) const {
  if (v == sink_) return Role::sink;
  return report_size_.at(v) > 0 ? Role::source : Role::relay;
}

WeightedGraph::WeightedGraph(int node_count, std::vector<WeightedEdge> edges) {
  if (node_count <= 0) throw InvalidInput("graph needs at least one node");
  adjacency_.resize(node_count);
  for (auto& e : edges) {
    check_node(e.u, node_count);
    check_node(e.v, node_count);
    if (e.u == e.v) throw InvalidInput("self-loop at node " + std::to_string(e.u));
    if (e.weight <= 0) throw InvalidInput("edge lengths must be positive");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw InvalidInput("duplicate edge " + std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v));
    }
  }
  for (const auto& e : edges) {
    adjacency_[e.u].push_back({e.v, e.weight});
    adjacency_[e.v].push_back({e.u, e.weight});
  }
  std::vector<std::vector<NodeId>> plain(node_count);
  for (NodeId v = 0; v < node_count; ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
    for (const auto& arc : list) plain[v].push_back(arc.to);
  }
  if (!bfs_reaches_all(plain)) throw InvalidInput("disconnected");
  edges_ = std::move(edges);
}

std::optional<Rational> WeightedGraph::weight(NodeId a, NodeId b) const {
  if (a < 0 || a >= node_count()) return std::nullopt;
  const auto& list = adjacency_[a];
  auto it = std::lower_bound(list.begin(), list.end(), b,
                             [](const Arc& arc, NodeId target) { return arc.to < target; });
  if (it == list.end() || it->to != b) return std::nullopt;
  return it->weight;
}

Rational WeightedGraph::total_weight() const {
  Rational total(0);
  for (const auto& e : edges_) total += e.weight;
  return total;
}

WeightedGraph with_uniform_length(const SimpleGraph& graph, const Rational& length) {
  std::vector<WeightedEdge> edges;
  edges.reserve(graph.edges().size());
  for (const auto& e : graph.edges()) edges.push_back({e.u, e.v, length});
  return WeightedGraph(graph.node_count(), std::move(edges));
}

}  // namespace aggtree
