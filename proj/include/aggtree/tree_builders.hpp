#pragma once

#include <span>
#include <vector>

#include "aggtree/cost_model.hpp"
#include "aggtree/network.hpp"
#include "aggtree/rational.hpp"

namespace aggtree {

/// Hop shortest-path tree rooted at `root`. Each node's parent is its
/// neighbor one layer closer to the root with the smallest tie rank (node id
/// when `tie_rank` is empty). With a `span`, only the parent chains of the
/// span members are kept.
RoutingTree shortest_path_tree(const SimpleGraph& graph, NodeId root, std::span<const NodeId> span,
                               std::span<const int> tie_rank = {});
/// Every node of the network.
RoutingTree spanning_shortest_path_tree(const Network& net, NodeId root, std::span<const int> tie_rank = {});
RoutingTree shortest_path_tree(const Network& net, NodeId root, std::span<const NodeId> span,
                               std::span<const int> tie_rank = {});

/// MST of the hop metric closure over `terminals`, expanded through the
/// closure's witness paths and pruned until every leaf is a terminal.
/// Edge count is at most twice the optimum Steiner tree's.
RoutingTree steiner_tree_2approx(const Network& net, std::span<const NodeId> terminals, NodeId root);

/// (alpha, beta) of a light approximate shortest-path tree.
struct LastParams {
  Rational alpha{3};
  Rational beta{2};

  /// Requires alpha > 1 and beta >= 1 + 2 / (alpha - 1), the weight bound
  /// the construction can actually promise for that alpha.
  void validate() const;
};

/// Spanning tree of a weighted graph given as parent pointers.
struct WeightedTree {
  NodeId root = kNoNode;
  std::vector<NodeId> parent;
  /// Path from v up to the root, inclusive at both ends.
  std::vector<NodeId> path_to_root(NodeId v) const;
};

/// Every node is at most alpha times its shortest distance from the root,
/// and the total weight is at most beta times the MST weight. Both are
/// checked on the result; a failure throws InternalError.
WeightedTree last_tree(const WeightedGraph& graph, NodeId root, const LastParams& params = {});

/// Root distance of every node along the tree.
std::vector<Rational> tree_distances(const WeightedGraph& graph, const WeightedTree& tree);
Rational tree_weight(const WeightedGraph& graph, const WeightedTree& tree);

}  // namespace aggtree
