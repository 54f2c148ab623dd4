#include "aggtree/tree_builders.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <string>

#include "aggtree/errors.hpp"
#include "aggtree/graph_algos.hpp"

namespace aggtree {

RoutingTree shortest_path_tree(const SimpleGraph& graph, NodeId root, std::span<const NodeId> span,
                               std::span<const int> tie_rank) {
  const int n = graph.node_count();
  if (!tie_rank.empty() && static_cast<int>(tie_rank.size()) != n) {
    throw InvalidInput("tie rank must cover every node");
  }
  auto layer = bfs_layers(graph, root);
  auto rank = [&](NodeId v) { return tie_rank.empty() ? v : tie_rank[v]; };

  std::vector<NodeId> chosen(n, kNoNode);
  for (NodeId v = 0; v < n; ++v) {
    if (v == root || layer[v] == kUnreachable) continue;
    for (NodeId w : graph.neighbors(v)) {
      if (layer[w] != layer[v] - 1) continue;
      if (chosen[v] == kNoNode || rank(w) < rank(chosen[v]) ||
          (rank(w) == rank(chosen[v]) && w < chosen[v])) {
        chosen[v] = w;
      }
    }
  }

  RoutingTree tree(n, root);
  for (NodeId v : span) {
    if (v < 0 || v >= n) throw InvalidInput("span node out of range: " + std::to_string(v));
    if (layer[v] == kUnreachable) throw InvalidInput("disconnected");
    for (NodeId x = v; x != root && !(tree.is_member(x) && tree.parent(x) != kNoNode); x = chosen[x]) {
      tree.attach(x, chosen[x]);
    }
  }
  return tree;
}

RoutingTree spanning_shortest_path_tree(const Network& net, NodeId root, std::span<const int> tie_rank) {
  std::vector<NodeId> all(net.node_count());
  for (NodeId v = 0; v < net.node_count(); ++v) all[v] = v;
  return shortest_path_tree(net.graph(), root, all, tie_rank);
}

RoutingTree shortest_path_tree(const Network& net, NodeId root, std::span<const NodeId> span,
                               std::span<const int> tie_rank) {
  return shortest_path_tree(net.graph(), root, span, tie_rank);
}

RoutingTree steiner_tree_2approx(const Network& net, std::span<const NodeId> terminals, NodeId root) {
  std::vector<NodeId> terms(terminals.begin(), terminals.end());
  terms.push_back(root);
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());

  RoutingTree tree(net.node_count(), root);
  if (terms.size() < 2) return tree;

  auto closure = metric_closure(net, terms, Rational(1));
  auto mst = minimum_spanning_tree(closure.graph());
  const int k = static_cast<int>(terms.size());
  std::vector<std::vector<int>> adjacency(k);
  for (const auto& e : mst) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());

  // Expand closure edges outward from the root. A path node already in the
  // tree keeps its first parent and the walk continues from it.
  std::vector<char> seen(k, 0);
  std::queue<int> frontier;
  int root_index = closure.index_of(root);
  seen[root_index] = 1;
  frontier.push(root_index);
  while (!frontier.empty()) {
    int a = frontier.front();
    frontier.pop();
    for (int b : adjacency[a]) {
      if (seen[b]) continue;
      seen[b] = 1;
      frontier.push(b);
      const Path& path = closure.witness(a, b);
      for (std::size_t i = 1; i < path.size(); ++i) {
        if (!tree.is_member(path[i])) tree.attach(path[i], path[i - 1]);
      }
    }
  }

  std::vector<char> is_terminal(net.node_count(), 0);
  for (NodeId t : terms) is_terminal[t] = 1;
  auto child_count = std::vector<int>(net.node_count(), 0);
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (tree.parent(v) != kNoNode) ++child_count[tree.parent(v)];
  }
  std::vector<NodeId> leaves;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (tree.is_member(v) && v != root && child_count[v] == 0 && !is_terminal[v]) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    NodeId v = leaves.back();
    leaves.pop_back();
    NodeId p = tree.parent(v);
    tree.detach(v);
    if (--child_count[p] == 0 && p != root && !is_terminal[p]) leaves.push_back(p);
  }
  return tree;
}

void LastParams::validate() const {
  if (alpha <= 1) throw InvalidInput("LAST alpha must be greater than 1");
  if (beta < 1 + Rational(2) / (alpha - 1)) {
    throw InvalidInput("LAST beta must be at least 1 + 2/(alpha - 1) for the given alpha");
  }
}

std::vector<NodeId> WeightedTree::path_to_root(NodeId v) const {
  std::vector<NodeId> path{v};
  while (v != root) {
    v = parent.at(v);
    if (v == kNoNode || path.size() > parent.size()) throw InternalError("weighted tree is not rooted");
    path.push_back(v);
  }
  return path;
}

std::vector<Rational> tree_distances(const WeightedGraph& graph, const WeightedTree& tree) {
  const int n = graph.node_count();
  std::vector<std::optional<Rational>> dist(n);
  dist[tree.root] = Rational(0);
  for (NodeId v = 0; v < n; ++v) {
    auto path = tree.path_to_root(v);
    // resolve from the top of the path down
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (dist[*it]) continue;
      NodeId p = tree.parent[*it];
      auto w = graph.weight(*it, p);
      if (!w) throw InternalError("tree edge is not a graph edge");
      dist[*it] = *dist[p] + *w;
    }
  }
  std::vector<Rational> out(n);
  for (NodeId v = 0; v < n; ++v) out[v] = *dist[v];
  return out;
}

Rational tree_weight(const WeightedGraph& graph, const WeightedTree& tree) {
  Rational total(0);
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (v == tree.root) continue;
    auto w = graph.weight(v, tree.parent[v]);
    if (!w) throw InternalError("tree edge is not a graph edge");
    total += *w;
  }
  return total;
}

namespace {

/// MST depth-first tour with relaxation; grafts the shortest-path-tree
/// route to any node first reached more than alpha times too far.
class LastBuilder {
 public:
  LastBuilder(const WeightedGraph& graph, NodeId root, const Rational& alpha)
      : graph_(graph), root_(root), alpha_(alpha), n_(graph.node_count()) {
    shortest_ = shortest_distances(graph, root);
    spt_parent_.assign(n_, kNoNode);
    for (NodeId v = 0; v < n_; ++v) {
      if (v == root) continue;
      for (const auto& arc : graph.arcs(v)) {
        if (shortest_[arc.to] + arc.weight == shortest_[v]) {
          spt_parent_[v] = arc.to;
          break;
        }
      }
    }
    mst_adjacency_.resize(n_);
    for (const auto& e : minimum_spanning_tree(graph)) {
      mst_adjacency_[e.u].push_back({e.v, e.weight});
      mst_adjacency_[e.v].push_back({e.u, e.weight});
    }
    for (auto& list : mst_adjacency_) {
      std::sort(list.begin(), list.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
    }
  }

  WeightedTree build() {
    estimate_.assign(n_, std::nullopt);
    parent_.assign(n_, kNoNode);
    estimate_[root_] = Rational(0);
    visit(root_, kNoNode);
    return WeightedTree{root_, parent_};
  }

 private:
  void relax(NodeId from, NodeId to, const Rational& weight) {
    Rational candidate = *estimate_[from] + weight;
    if (!estimate_[to] || candidate < *estimate_[to]) {
      estimate_[to] = candidate;
      parent_[to] = from;
    }
  }

  void add_path(NodeId v) {
    if (v == root_ || *estimate_[v] <= shortest_[v]) return;
    NodeId p = spt_parent_[v];
    add_path(p);
    relax(p, v, *graph_.weight(p, v));
  }

  void visit(NodeId v, NodeId from) {
    if (*estimate_[v] > alpha_ * shortest_[v]) add_path(v);
    for (const auto& arc : mst_adjacency_[v]) {
      if (arc.to == from) continue;
      relax(v, arc.to, arc.weight);
      visit(arc.to, v);
      relax(arc.to, v, arc.weight);
    }
  }

  const WeightedGraph& graph_;
  NodeId root_;
  Rational alpha_;
  int n_;
  std::vector<Rational> shortest_;
  std::vector<NodeId> spt_parent_;
  std::vector<std::vector<Arc>> mst_adjacency_;
  std::vector<std::optional<Rational>> estimate_;
  std::vector<NodeId> parent_;
};

}  // namespace

WeightedTree last_tree(const WeightedGraph& graph, NodeId root, const LastParams& params) {
  params.validate();
  if (root < 0 || root >= graph.node_count()) throw InvalidInput("LAST root out of range");
  LastBuilder builder(graph, root, params.alpha);
  WeightedTree tree = builder.build();

  auto shortest = shortest_distances(graph, root);
  auto along_tree = tree_distances(graph, tree);
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (along_tree[v] > params.alpha * shortest[v]) throw InternalError("LAST invariant violated");
  }
  Rational mst_weight(0);
  for (const auto& e : minimum_spanning_tree(graph)) mst_weight += e.weight;
  if (tree_weight(graph, tree) > params.beta * mst_weight) throw InternalError("LAST invariant violated");
  return tree;
}

}  // namespace aggtree
