#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aggtree/network.hpp"
#include "aggtree/rational.hpp"

namespace aggtree {

/// Aggregation ratio q (report units per packet), per-packet energies, and
/// the optional decision budget C.
struct CostParams {
  std::int64_t q = 1;
  Rational tx{1};
  Rational rx{1};
  std::optional<Rational> budget;

  void validate() const;
  Rational per_packet() const { return tx + rx; }
};

/// Directed tree toward `root`, stored as a parent map over its members.
class RoutingTree {
 public:
  RoutingTree() = default;
  RoutingTree(int node_count, NodeId root);

  int node_count() const { return static_cast<int>(parent_.size()); }
  NodeId root() const { return root_; }
  /// kNoNode for the root and for non-members.
  NodeId parent(NodeId v) const { return parent_.at(v); }
  bool is_member(NodeId v) const { return member_.at(v) != 0; }
  std::vector<NodeId> members() const;
  std::size_t edge_count() const;

  /// Makes `child` and `parent` members and sets the child's parent.
  void attach(NodeId child, NodeId parent);
  /// Removes a member; it must have no children pointing at it.
  void detach(NodeId v);

  std::vector<std::vector<NodeId>> children() const;

  bool operator==(const RoutingTree&) const = default;

 private:
  NodeId root_ = kNoNode;
  std::vector<NodeId> parent_;
  std::vector<char> member_;
};

/// How much of the network a tree must cover.
enum class TreeScope {
  all_nodes,  // MECAT: V_T = V
  sources,    // MECAT_RN: V_T contains every source and the sink
};

/// Throws MalformedTree unless the tree is rooted at the sink, acyclic,
/// follows network edges and covers `scope`.
void validate_tree(const RoutingTree& tree, const Network& net, TreeScope scope = TreeScope::sources);

/// Hop depth of every member (kNoNode-style -1 for non-members).
std::vector<int> tree_depths(const RoutingTree& tree);

/// des_T(v): total report size of v's strict descendants. 0 for non-members.
std::vector<std::int64_t> descendant_loads(const RoutingTree& tree, const Network& net);

/// ceil((des(v) + s(v)) / q) per member; the root sends nothing.
std::vector<std::int64_t> packets_sent(const RoutingTree& tree, const Network& net,
                                       const CostParams& params);

std::int64_t total_packets(const RoutingTree& tree, const Network& net, const CostParams& params);

/// (Tx + Rx) times the number of packets sent.
Rational tree_cost(const RoutingTree& tree, const Network& net, const CostParams& params);

/// tree_cost <= budget. Throws InvalidInput("no budget set") without a budget.
bool check_budget(const RoutingTree& tree, const Network& net, const CostParams& params);

/// Relay members whose subtree carries no report; they cost nothing but
/// should be pruned.
std::vector<NodeId> idle_relays(const RoutingTree& tree, const Network& net);
RoutingTree prune_idle_relays(const RoutingTree& tree, const Network& net);

}  // namespace aggtree
