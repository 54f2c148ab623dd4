#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aggtree/cost_model.hpp"
#include "aggtree/network.hpp"

namespace aggtree {

/// Load-balanced semi-matching: assign every left node to one adjacent right
/// node so that no right node carries more than k total left weight.
struct LbsmInstance {
  std::vector<std::int64_t> weight;          // left node i -> w(u_i) >= 1
  int right_count = 0;
  std::vector<std::pair<int, int>> edges;    // (left, right)
  std::int64_t k = 1;

  void validate() const;
  int left_count() const { return static_cast<int>(weight.size()); }
};

/// assignment[i] = right node chosen by left node i.
using SemiMatching = std::vector<int>;

/// Max right-side load, or nullopt if the assignment uses a non-edge.
std::optional<std::int64_t> semi_matching_load(const LbsmInstance& inst, const SemiMatching& m);
/// Some semi-matching with load <= k, by enumeration.
std::optional<SemiMatching> solve_lbsm(const LbsmInstance& inst);

struct DsInstance {
  SimpleGraph graph;
  int k = 1;

  void validate() const;
};

bool is_dominating_set(const SimpleGraph& graph, const std::vector<NodeId>& set);
/// Smallest dominating set (lexicographically first among the smallest).
std::vector<NodeId> minimum_dominating_set(const SimpleGraph& graph);
bool ds_feasible(const DsInstance& inst);

/// A decision instance: network plus parameters carrying the budget.
struct Gadget {
  Network net;
  CostParams params;
};

/// Node layout: sink 0, then u_1..u_|U|, then v_1..v_|V|, then the padding
/// nodes w_{i,j} grouped by i. Every non-sink node has report size 1.
struct LbsmLayout {
  int left_count = 0;
  int right_count = 0;
  std::vector<std::vector<NodeId>> padding;  // per left node
  NodeId left(int i) const { return 1 + i; }
  NodeId right(int j) const { return 1 + left_count + j; }
};

Gadget gadget_lbsm_to_mecat(const LbsmInstance& inst, LbsmLayout* layout = nullptr);
/// The tree built from a semi-matching: v_j -> r, u_i -> its v, w_{i,j} -> u_i.
RoutingTree lbsm_matching_to_tree(const LbsmInstance& inst, const SemiMatching& m);
/// Reads each u_i's parent (always a right node, since padding nodes hang
/// only off their own u_i).
SemiMatching lbsm_tree_to_matching(const LbsmInstance& inst, const RoutingTree& tree);

/// Node layout: sink 0, relays w_1..w_n as 1..n, sources u_1..u_n as n+1..2n.
Gadget gadget_ds_to_mecat_rn(const DsInstance& inst);
/// w_i -> r for v_i in the set; each u_j under its smallest dominating w.
RoutingTree ds_set_to_tree(const DsInstance& inst, const std::vector<NodeId>& set);
/// The original vertices whose relay carries load in the tree.
std::vector<NodeId> ds_tree_to_set(const DsInstance& inst, const RoutingTree& tree);

/// An adversarial family instance with its two reference trees.
struct FamilyInstance {
  Network net;
  CostParams params;
  RoutingTree reference;  // the poor tree the targeted heuristic builds
  RoutingTree good;       // the cheap tree exhibited against it
  std::vector<NodeId> u;  // u_1..u_|U|
};

/// Chain u_1..u_|U| hanging off r, plus a relay s_i joining r and u_i for
/// i >= 3. q = 2. `reference` is the chain, `good` routes u_i via s_i.
/// Node layout: r = 0, relays s_3..s_|U|, then u_1..u_|U|.
FamilyInstance shortcut_family(int size);

/// Same chain, but u_i (i >= 3) reaches r through a relay path of i-2 nodes.
/// q = |U|. `reference` is the shortest-path tree through the relay paths,
/// `good` is the chain. Node layout: r = 0, relay paths in order of i, then
/// u_1..u_|U|; with this order the id tie-break SPT equals `reference`.
FamilyInstance relay_path_family(int size);

}  // namespace aggtree
