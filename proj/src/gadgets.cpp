#include "aggtree/gadgets.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "aggtree/errors.hpp"

namespace aggtree {

void LbsmInstance::validate() const {
  if (weight.empty() || right_count < 1) throw InvalidInput("LBSM needs at least one node per side");
  for (auto w : weight) {
    if (w < 1) throw InvalidInput("LBSM weights must be >= 1");
  }
  if (k < 1) throw InvalidInput("LBSM k must be >= 1");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= left_count() || v < 0 || v >= right_count) throw InvalidInput("LBSM edge out of range");
    if (!seen.insert({u, v}).second) throw InvalidInput("duplicate LBSM edge");
  }
}

std::optional<std::int64_t> semi_matching_load(const LbsmInstance& inst, const SemiMatching& m) {
  if (static_cast<int>(m.size()) != inst.left_count()) return std::nullopt;
  std::vector<std::int64_t> load(inst.right_count, 0);
  for (int i = 0; i < inst.left_count(); ++i) {
    auto it = std::find(inst.edges.begin(), inst.edges.end(), std::pair{i, m[i]});
    if (it == inst.edges.end()) return std::nullopt;
    load[m[i]] += inst.weight[i];
  }
  return *std::max_element(load.begin(), load.end());
}

std::optional<SemiMatching> solve_lbsm(const LbsmInstance& inst) {
  inst.validate();
  std::vector<std::vector<int>> options(inst.left_count());
  for (auto [u, v] : inst.edges) options[u].push_back(v);
  for (auto& o : options) {
    if (o.empty()) return std::nullopt;
    std::sort(o.begin(), o.end());
  }
  SemiMatching m(inst.left_count());
  std::vector<std::int64_t> load(inst.right_count, 0);
  auto search = [&](auto&& self, int i) -> bool {
    if (i == inst.left_count()) return true;
    for (int v : options[i]) {
      if (load[v] + inst.weight[i] > inst.k) continue;
      load[v] += inst.weight[i];
      m[i] = v;
      if (self(self, i + 1)) return true;
      load[v] -= inst.weight[i];
    }
    return false;
  };
  if (search(search, 0)) return m;
  return std::nullopt;
}

void DsInstance::validate() const {
  if (graph.node_count() < 1) throw InvalidInput("DS graph needs a vertex");
  if (k < 1) throw InvalidInput("DS k must be >= 1");
}

bool is_dominating_set(const SimpleGraph& graph, const std::vector<NodeId>& set) {
  std::vector<char> covered(graph.node_count(), 0);
  for (NodeId v : set) {
    covered.at(v) = 1;
    for (NodeId w : graph.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::vector<NodeId> minimum_dominating_set(const SimpleGraph& graph) {
  const int n = graph.node_count();
  if (n > 24) throw OracleLimit();
  std::vector<NodeId> best;
  int best_size = n + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best_size) continue;
    std::vector<NodeId> set;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) set.push_back(v);
    }
    if (is_dominating_set(graph, set)) {
      best = std::move(set);
      best_size = size;
    }
  }
  return best;
}

bool ds_feasible(const DsInstance& inst) {
  inst.validate();
  return static_cast<int>(minimum_dominating_set(inst.graph).size()) <= inst.k;
}

Gadget gadget_lbsm_to_mecat(const LbsmInstance& inst, LbsmLayout* layout_out) {
  inst.validate();
  LbsmLayout layout{inst.left_count(), inst.right_count, {}};
  NodeId next = 1 + inst.left_count() + inst.right_count;
  std::vector<Edge> edges;
  for (int j = 0; j < inst.right_count; ++j) edges.push_back(make_edge(0, layout.right(j)));
  for (auto [u, v] : inst.edges) edges.push_back(make_edge(layout.left(u), layout.right(v)));
  std::int64_t padding_total = 0;
  std::int64_t left_packets = 0;
  const std::int64_t q = inst.k + 1;
  for (int i = 0; i < inst.left_count(); ++i) {
    std::vector<NodeId> pad;
    for (std::int64_t j = 1; j < inst.weight[i]; ++j) {
      pad.push_back(next);
      edges.push_back(make_edge(layout.left(i), next));
      ++next;
    }
    padding_total += static_cast<std::int64_t>(pad.size());
    left_packets += ceil_div(static_cast<std::int64_t>(pad.size()) + 1, q);
    layout.padding.push_back(std::move(pad));
  }
  std::vector<std::int64_t> sizes(next, 1);
  sizes[0] = 0;
  CostParams params;
  params.q = q;
  params.tx = params.rx = Rational(1);
  params.budget = Rational(2 * (padding_total + left_packets + inst.right_count));
  Gadget g{Network(next, std::move(edges), std::move(sizes), 0), params};
  if (layout_out) *layout_out = layout;
  return g;
}

RoutingTree lbsm_matching_to_tree(const LbsmInstance& inst, const SemiMatching& m) {
  LbsmLayout layout;
  Gadget g = gadget_lbsm_to_mecat(inst, &layout);
  RoutingTree tree(g.net.node_count(), 0);
  for (int j = 0; j < inst.right_count; ++j) tree.attach(layout.right(j), 0);
  for (int i = 0; i < inst.left_count(); ++i) {
    tree.attach(layout.left(i), layout.right(m.at(i)));
    for (NodeId w : layout.padding[i]) tree.attach(w, layout.left(i));
  }
  validate_tree(tree, g.net, TreeScope::all_nodes);
  return tree;
}

SemiMatching lbsm_tree_to_matching(const LbsmInstance& inst, const RoutingTree& tree) {
  LbsmLayout layout;
  Gadget g = gadget_lbsm_to_mecat(inst, &layout);
  validate_tree(tree, g.net, TreeScope::all_nodes);
  SemiMatching m(inst.left_count());
  for (int i = 0; i < inst.left_count(); ++i) {
    NodeId p = tree.parent(layout.left(i));
    int j = p - layout.right(0);
    if (j < 0 || j >= inst.right_count) throw InternalError("left node not under a right node");
    m[i] = j;
  }
  return m;
}

Gadget gadget_ds_to_mecat_rn(const DsInstance& inst) {
  inst.validate();
  const int n = inst.graph.node_count();
  std::vector<Edge> edges;
  int max_degree = 0;
  for (NodeId i = 0; i < n; ++i) {
    edges.push_back(make_edge(0, 1 + i));
    edges.push_back(make_edge(1 + i, 1 + n + i));
    max_degree = std::max(max_degree, static_cast<int>(inst.graph.neighbors(i).size()));
  }
  for (const auto& e : inst.graph.edges()) {
    edges.push_back(make_edge(1 + e.u, 1 + n + e.v));
    edges.push_back(make_edge(1 + e.v, 1 + n + e.u));
  }
  std::vector<std::int64_t> sizes(2 * n + 1, 0);
  for (int i = 0; i < n; ++i) sizes[1 + n + i] = 1;
  CostParams params;
  params.q = max_degree + 1;
  params.tx = params.rx = Rational(1);
  params.budget = Rational(2 * (n + inst.k));
  return {Network(2 * n + 1, std::move(edges), std::move(sizes), 0), params};
}

RoutingTree ds_set_to_tree(const DsInstance& inst, const std::vector<NodeId>& set) {
  if (!is_dominating_set(inst.graph, set)) throw InvalidInput("not a dominating set");
  const int n = inst.graph.node_count();
  Gadget g = gadget_ds_to_mecat_rn(inst);
  std::vector<char> chosen(n, 0);
  for (NodeId v : set) chosen.at(v) = 1;
  RoutingTree tree(2 * n + 1, 0);
  for (NodeId j = 0; j < n; ++j) {
    NodeId dominator = chosen[j] ? j : kNoNode;
    for (NodeId i : inst.graph.neighbors(j)) {
      if (chosen[i] && (dominator == kNoNode || i < dominator)) dominator = i;
    }
    tree.attach(1 + dominator, 0);
    tree.attach(1 + n + j, 1 + dominator);
  }
  validate_tree(tree, g.net, TreeScope::sources);
  return tree;
}

std::vector<NodeId> ds_tree_to_set(const DsInstance& inst, const RoutingTree& tree) {
  const int n = inst.graph.node_count();
  Gadget g = gadget_ds_to_mecat_rn(inst);
  validate_tree(tree, g.net, TreeScope::sources);
  auto load = descendant_loads(tree, g.net);
  std::vector<NodeId> set;
  for (NodeId i = 0; i < n; ++i) {
    if (tree.is_member(1 + i) && load[1 + i] > 0) set.push_back(i);
  }
  return set;
}

FamilyInstance shortcut_family(int size) {
  if (size < 3) throw InvalidInput("family size must be >= 3");
  const int relays = size - 2;
  const int n = 1 + relays + size;
  auto s = [](int i) { return 1 + (i - 3); };  // s_i, i = 3..size
  auto u = [&](int i) { return 1 + relays + (i - 1); };
  std::vector<Edge> edges{make_edge(0, u(1))};
  for (int i = 1; i < size; ++i) edges.push_back(make_edge(u(i), u(i + 1)));
  for (int i = 3; i <= size; ++i) {
    edges.push_back(make_edge(0, s(i)));
    edges.push_back(make_edge(s(i), u(i)));
  }
  std::vector<std::int64_t> sizes(n, 0);
  for (int i = 1; i <= size; ++i) sizes[u(i)] = 1;
  CostParams params;
  params.q = 2;
  FamilyInstance f{Network(n, std::move(edges), std::move(sizes), 0), params, RoutingTree(n, 0),
                   RoutingTree(n, 0), {}};
  f.reference.attach(u(1), 0);
  for (int i = 1; i < size; ++i) f.reference.attach(u(i + 1), u(i));
  f.good.attach(u(1), 0);
  f.good.attach(u(2), u(1));
  for (int i = 3; i <= size; ++i) {
    f.good.attach(s(i), 0);
    f.good.attach(u(i), s(i));
  }
  for (int i = 1; i <= size; ++i) f.u.push_back(u(i));
  return f;
}

FamilyInstance relay_path_family(int size) {
  if (size < 3) throw InvalidInput("family size must be >= 3");
  // s_{i,j} for 3 <= i <= size, 1 <= j <= i-2, numbered consecutively.
  std::vector<std::vector<NodeId>> s(size + 1);
  NodeId next = 1;
  for (int i = 3; i <= size; ++i) {
    for (int j = 1; j <= i - 2; ++j) s[i].push_back(next++);
  }
  const NodeId first_u = next;
  auto u = [&](int i) { return first_u + (i - 1); };
  const int n = first_u + size;
  std::vector<Edge> edges{make_edge(0, u(1))};
  for (int i = 1; i < size; ++i) edges.push_back(make_edge(u(i), u(i + 1)));
  for (int i = 3; i <= size; ++i) {
    edges.push_back(make_edge(0, s[i].front()));
    edges.push_back(make_edge(s[i].back(), u(i)));
    for (int j = 0; j + 1 < i - 2; ++j) edges.push_back(make_edge(s[i][j], s[i][j + 1]));
  }
  std::vector<std::int64_t> sizes(n, 0);
  for (int i = 1; i <= size; ++i) sizes[u(i)] = 1;
  CostParams params;
  params.q = size;
  FamilyInstance f{Network(n, std::move(edges), std::move(sizes), 0), params, RoutingTree(n, 0),
                   RoutingTree(n, 0), {}};
  f.reference.attach(u(1), 0);
  f.reference.attach(u(2), u(1));
  for (int i = 3; i <= size; ++i) {
    f.reference.attach(s[i].front(), 0);
    for (int j = 1; j < i - 2; ++j) f.reference.attach(s[i][j], s[i][j - 1]);
    f.reference.attach(u(i), s[i].back());
  }
  f.good.attach(u(1), 0);
  for (int i = 1; i < size; ++i) f.good.attach(u(i + 1), u(i));
  for (int i = 1; i <= size; ++i) f.u.push_back(u(i));
  return f;
}

}  // namespace aggtree
