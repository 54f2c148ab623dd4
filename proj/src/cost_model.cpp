#include "aggtree/cost_model.hpp"

#include <algorithm>
#include <string>

#include "aggtree/errors.hpp"

namespace aggtree {

void CostParams::validate() const {
  if (q < 1) throw InvalidInput("aggregation ratio q must be >= 1");
  if (tx <= 0 || rx <= 0) throw InvalidInput("Tx and Rx must be positive");
  if (budget && *budget < 0) throw InvalidInput("budget must be non-negative");
}

RoutingTree::RoutingTree(int node_count, NodeId root)
    : root_(root), parent_(node_count, kNoNode), member_(node_count, 0) {
  if (root < 0 || root >= node_count) throw InvalidInput("tree root out of range");
  member_[root] = 1;
}

std::vector<NodeId> RoutingTree::members() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < node_count(); ++v) {
    if (member_[v]) out.push_back(v);
  }
  return out;
}

std::size_t RoutingTree::edge_count() const {
  return static_cast<std::size_t>(std::count_if(parent_.begin(), parent_.end(),
                                                [](NodeId p) { return p != kNoNode; }));
}

void RoutingTree::attach(NodeId child, NodeId parent) {
  if (child < 0 || child >= node_count() || parent < 0 || parent >= node_count()) {
    throw InvalidInput("tree node out of range");
  }
  if (child == root_) throw MalformedTree("root cannot have a parent");
  if (child == parent) throw MalformedTree("self parent at node " + std::to_string(child));
  parent_[child] = parent;
  member_[child] = 1;
  member_[parent] = 1;
}

void RoutingTree::detach(NodeId v) {
  if (v == root_) throw MalformedTree("cannot detach the root");
  for (NodeId p : parent_) {
    if (p == v) throw MalformedTree("cannot detach node " + std::to_string(v) + " with children");
  }
  parent_.at(v) = kNoNode;
  member_.at(v) = 0;
}

std::vector<std::vector<NodeId>> RoutingTree::children() const {
  std::vector<std::vector<NodeId>> out(node_count());
  for (NodeId v = 0; v < node_count(); ++v) {
    if (parent_[v] != kNoNode) out[parent_[v]].push_back(v);
  }
  return out;
}

namespace {

/// Depths via walk-to-root with visit marking; throws on cycles or members
/// that do not reach the root.
std::vector<int> checked_depths(const RoutingTree& tree) {
  const int n = tree.node_count();
  std::vector<int> depth(n, -1);
  std::vector<char> state(n, 0);  // 0 fresh, 1 on current walk, 2 resolved
  depth[tree.root()] = 0;
  state[tree.root()] = 2;
  std::vector<NodeId> walk;
  for (NodeId start = 0; start < n; ++start) {
    if (!tree.is_member(start) || state[start] == 2) continue;
    walk.clear();
    NodeId v = start;
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      NodeId p = tree.parent(v);
      if (p == kNoNode) throw MalformedTree("node " + std::to_string(v) + " does not reach the root");
      if (!tree.is_member(p)) throw MalformedTree("parent of " + std::to_string(v) + " is not a member");
      v = p;
    }
    if (state[v] == 1) throw MalformedTree("cycle through node " + std::to_string(v));
    int base = depth[v];
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
      depth[*it] = ++base;
      state[*it] = 2;
    }
  }
  return depth;
}

void check_against_network(const RoutingTree& tree, const Network& net) {
  if (tree.node_count() != net.node_count()) throw MalformedTree("tree and network sizes differ");
  if (tree.root() != net.sink()) throw MalformedTree("tree root is not the sink");
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    NodeId p = tree.parent(v);
    if (p != kNoNode && !net.has_edge(v, p)) {
      throw MalformedTree("parent edge " + std::to_string(v) + "->" + std::to_string(p) +
                          " is not a network edge");
    }
  }
  for (NodeId u : net.sources()) {
    if (!tree.is_member(u)) throw MalformedTree("source " + std::to_string(u) + " is not in the tree");
  }
}

}  // namespace

void validate_tree(const RoutingTree& tree, const Network& net, TreeScope scope) {
  check_against_network(tree, net);
  checked_depths(tree);
  if (scope == TreeScope::all_nodes) {
    for (NodeId v = 0; v < net.node_count(); ++v) {
      if (!tree.is_member(v)) throw MalformedTree("node " + std::to_string(v) + " is not in the tree");
    }
  }
}

std::vector<int> tree_depths(const RoutingTree& tree) { return checked_depths(tree); }

std::vector<std::int64_t> descendant_loads(const RoutingTree& tree, const Network& net) {
  check_against_network(tree, net);
  auto depth = checked_depths(tree);
  std::vector<NodeId> order;
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (tree.is_member(v)) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return depth[a] > depth[b]; });
  std::vector<std::int64_t> des(tree.node_count(), 0);
  for (NodeId v : order) {
    NodeId p = tree.parent(v);
    if (p != kNoNode) des[p] += des[v] + net.report_size(v);
  }
  return des;
}

std::vector<std::int64_t> packets_sent(const RoutingTree& tree, const Network& net,
                                       const CostParams& params) {
  params.validate();
  auto des = descendant_loads(tree, net);
  std::vector<std::int64_t> packets(tree.node_count(), 0);
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (v == tree.root() || !tree.is_member(v)) continue;
    packets[v] = ceil_div(des[v] + net.report_size(v), params.q);
  }
  return packets;
}

std::int64_t total_packets(const RoutingTree& tree, const Network& net, const CostParams& params) {
  auto packets = packets_sent(tree, net, params);
  std::int64_t total = 0;
  for (auto p : packets) total += p;
  return total;
}

Rational tree_cost(const RoutingTree& tree, const Network& net, const CostParams& params) {
  return params.per_packet() * Rational(total_packets(tree, net, params));
}

bool check_budget(const RoutingTree& tree, const Network& net, const CostParams& params) {
  if (!params.budget) throw InvalidInput("no budget set");
  return tree_cost(tree, net, params) <= *params.budget;
}

std::vector<NodeId> idle_relays(const RoutingTree& tree, const Network& net) {
  auto des = descendant_loads(tree, net);
  std::vector<NodeId> idle;
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (v != tree.root() && tree.is_member(v) && des[v] + net.report_size(v) == 0) idle.push_back(v);
  }
  return idle;
}

RoutingTree prune_idle_relays(const RoutingTree& tree, const Network& net) {
  auto idle = idle_relays(tree, net);
  RoutingTree pruned(tree.node_count(), tree.root());
  std::vector<char> drop(tree.node_count(), 0);
  for (NodeId v : idle) drop[v] = 1;
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (tree.is_member(v) && !drop[v] && tree.parent(v) != kNoNode) pruned.attach(v, tree.parent(v));
  }
  return pruned;
}

}  // namespace aggtree
