#include "aggtree/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "aggtree/errors.hpp"
#include "aggtree/graph_algos.hpp"
#include "aggtree/tree_builders.hpp"

namespace aggtree {

int oracle_cap(int fallback) {
  if (const char* env = std::getenv("AGGTREE_ORACLE_CAP")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<int>(value);
  }
  return fallback;
}

namespace {

/// Enumerates sink-rooted spanning arborescences of the subgraph induced by
/// `allowed`. With pruning enabled, branches whose packet lower bound
/// reaches the incumbent are cut.
class ArborescenceSearch {
 public:
  ArborescenceSearch(const SimpleGraph& graph, NodeId root, std::vector<char> allowed,
                     std::span<const std::int64_t> report, std::int64_t q)
      : graph_(graph), root_(root), allowed_(std::move(allowed)), report_(report), q_(q) {
    const int n = graph.node_count();
    // nodes nearer the root choose first, which tightens the bound early
    std::vector<int> layer(n, kUnreachable);
    std::vector<NodeId> queue{root};
    layer[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      NodeId v = queue[head];
      for (NodeId w : graph.neighbors(v)) {
        if (allowed_[w] && layer[w] == kUnreachable) {
          layer[w] = layer[v] + 1;
          queue.push_back(w);
        }
      }
    }
    order_.assign(queue.begin() + 1, queue.end());
    parent_.assign(n, kNoNode);
    load_.assign(n, 0);
    for (NodeId v = 0; v < n; ++v) {
      if (allowed_[v]) load_[v] = report_[v];
    }
  }

  /// False if some allowed node is unreachable inside the allowed set.
  bool spans_allowed() const {
    auto count = std::count(allowed_.begin(), allowed_.end(), char{1});
    return static_cast<std::size_t>(count) == order_.size() + 1;
  }

  std::uint64_t count_all() {
    prune_ = false;
    count_ = 0;
    recurse(0);
    return count_;
  }

  /// Improves `best_packets` / `best_parent` in place when a cheaper tree exists.
  void minimize(std::int64_t& best_packets, std::vector<NodeId>& best_parent) {
    prune_ = true;
    best_packets_ = &best_packets;
    best_parent_ = &best_parent;
    packets_ = 0;
    for (NodeId v : order_) packets_ += ceil_div(load_[v], q_);
    recurse(0);
  }

  std::uint64_t examined() const { return count_; }

 private:
  void recurse(std::size_t index) {
    if (prune_ && packets_ >= *best_packets_) return;
    if (index == order_.size()) {
      ++count_;
      if (prune_) {
        *best_packets_ = packets_;
        *best_parent_ = parent_;
      }
      return;
    }
    NodeId v = order_[index];
    for (NodeId p : graph_.neighbors(v)) {
      if (!allowed_[p] || closes_cycle(v, p)) continue;
      parent_[v] = p;
      shift_load(p, load_[v]);
      recurse(index + 1);
      shift_load(p, -load_[v]);
      parent_[v] = kNoNode;
    }
  }

  bool closes_cycle(NodeId v, NodeId p) const {
    for (NodeId x = p; x != kNoNode && x != root_; x = parent_[x]) {
      if (x == v) return true;
    }
    return false;
  }

  void shift_load(NodeId from, std::int64_t delta) {
    for (NodeId x = from; x != kNoNode; x = parent_[x]) {
      if (x != root_) {
        packets_ -= ceil_div(load_[x], q_);
        load_[x] += delta;
        packets_ += ceil_div(load_[x], q_);
      } else {
        load_[x] += delta;
      }
    }
  }

  const SimpleGraph& graph_;
  NodeId root_;
  std::vector<char> allowed_;
  std::span<const std::int64_t> report_;
  std::int64_t q_;
  std::vector<NodeId> order_;
  std::vector<NodeId> parent_;
  std::vector<std::int64_t> load_;
  std::int64_t packets_ = 0;
  bool prune_ = false;
  std::uint64_t count_ = 0;
  std::int64_t* best_packets_ = nullptr;
  std::vector<NodeId>* best_parent_ = nullptr;
};

RoutingTree tree_from_parents(const std::vector<NodeId>& parent, NodeId root) {
  RoutingTree tree(static_cast<int>(parent.size()), root);
  for (NodeId v = 0; v < static_cast<NodeId>(parent.size()); ++v) {
    if (parent[v] != kNoNode) tree.attach(v, parent[v]);
  }
  return tree;
}

}  // namespace

OracleResult brute_force_mecat(const Network& net, const CostParams& params, std::optional<int> cap) {
  params.validate();
  if (net.node_count() > cap.value_or(oracle_cap(kMecatOracleCap))) throw OracleLimit();
  ArborescenceSearch search(net.graph(), net.sink(), std::vector<char>(net.node_count(), 1),
                            net.report_sizes(), params.q);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<NodeId> best_parent;
  search.minimize(best, best_parent);
  OracleResult result;
  result.tree = tree_from_parents(best_parent, net.sink());
  result.packets = best;
  result.cost = params.per_packet() * Rational(best);
  result.trees_examined = search.examined();
  return result;
}

OracleResult brute_force_mecat_rn(const Network& net, const CostParams& params, std::optional<int> cap) {
  params.validate();
  if (net.node_count() > cap.value_or(oracle_cap(kMecatRnOracleCap))) throw OracleLimit();
  const auto& relays = net.relays();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<NodeId> best_parent;
  std::uint64_t examined = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << relays.size()); ++mask) {
    std::vector<char> allowed(net.node_count(), 0);
    allowed[net.sink()] = 1;
    for (NodeId u : net.sources()) allowed[u] = 1;
    for (std::size_t i = 0; i < relays.size(); ++i) {
      if (mask >> i & 1) allowed[relays[i]] = 1;
    }
    ArborescenceSearch search(net.graph(), net.sink(), std::move(allowed), net.report_sizes(), params.q);
    if (!search.spans_allowed()) continue;
    search.minimize(best, best_parent);
    examined += search.examined();
  }
  if (best_parent.empty()) throw InternalError("no relay subset connects the sources");
  OracleResult result;
  result.tree = prune_idle_relays(tree_from_parents(best_parent, net.sink()), net);
  result.packets = best;
  result.cost = params.per_packet() * Rational(best);
  result.trees_examined = examined;
  return result;
}

std::uint64_t count_spanning_arborescences(const SimpleGraph& graph, NodeId root) {
  std::vector<std::int64_t> zero(graph.node_count(), 0);
  ArborescenceSearch search(graph, root, std::vector<char>(graph.node_count(), 1), zero, 1);
  if (!search.spans_allowed()) return 0;
  return search.count_all();
}

LowerBound lower_bound_terms(const Network& net, const CostParams& params) {
  params.validate();
  auto hops = hop_distances(net, net.sink());
  Rational fractional(0);
  for (NodeId u : net.sources()) fractional += Rational(net.report_size(u) * hops[u], params.q);
  auto steiner = steiner_tree_2approx(net, net.sources(), net.sink());
  std::size_t edges = steiner.edge_count();
  Rational edge_estimate = std::max(Rational(static_cast<std::int64_t>(edges), 2),
                                    Rational(static_cast<std::int64_t>(net.sources().size())));
  LowerBound lb;
  lb.routing_term = params.per_packet() * fractional;
  lb.steiner_term = params.per_packet() * edge_estimate;
  lb.steiner_tree_edges = edges;
  lb.value = std::max(lb.routing_term, lb.steiner_term);
  return lb;
}

Rational lower_bound(const Network& net, const CostParams& params) {
  return lower_bound_terms(net, params).value;
}

namespace {

bool induced_connected(const SimpleGraph& graph, const std::vector<char>& in) {
  NodeId start = kNoNode;
  int total = 0;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (in[v]) {
      ++total;
      if (start == kNoNode) start = v;
    }
  }
  if (total == 0) return true;
  std::vector<char> seen(graph.node_count(), 0);
  std::vector<NodeId> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : graph.neighbors(v)) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == total;
}

std::vector<NodeId> non_terminals(int n, std::span<const NodeId> terminals, std::vector<char>& is_terminal) {
  is_terminal.assign(n, 0);
  for (NodeId t : terminals) is_terminal.at(t) = 1;
  std::vector<NodeId> others;
  for (NodeId v = 0; v < n; ++v) {
    if (!is_terminal[v]) others.push_back(v);
  }
  if (others.size() > 24) throw OracleLimit();
  return others;
}

}  // namespace

int brute_force_steiner_edges(const SimpleGraph& graph, std::span<const NodeId> terminals) {
  std::vector<char> is_terminal;
  auto others = non_terminals(graph.node_count(), terminals, is_terminal);
  int terminal_count = static_cast<int>(std::count(is_terminal.begin(), is_terminal.end(), char{1}));
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
    int extra = __builtin_popcount(mask);
    if (terminal_count + extra - 1 >= best) continue;
    std::vector<char> in = is_terminal;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask >> i & 1) in[others[i]] = 1;
    }
    if (induced_connected(graph, in)) best = terminal_count + extra - 1;
  }
  if (best == std::numeric_limits<int>::max()) throw InvalidInput("disconnected");
  return best;
}

Rational brute_force_steiner_length(const WeightedGraph& graph, std::span<const NodeId> terminals) {
  std::vector<char> is_terminal;
  auto others = non_terminals(graph.node_count(), terminals, is_terminal);
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
    std::vector<char> in = is_terminal;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask >> i & 1) in[others[i]] = 1;
    }
    // Kruskal restricted to the chosen nodes
    std::vector<WeightedEdge> edges;
    for (const auto& e : graph.edges()) {
      if (in[e.u] && in[e.v]) edges.push_back(e);
    }
    std::stable_sort(edges.begin(), edges.end(),
                     [](const WeightedEdge& a, const WeightedEdge& b) { return a.weight < b.weight; });
    std::vector<NodeId> root(graph.node_count());
    for (NodeId v = 0; v < graph.node_count(); ++v) root[v] = v;
    auto find = [&](NodeId x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    int members = static_cast<int>(std::count(in.begin(), in.end(), char{1}));
    int joined = 0;
    Rational length(0);
    for (const auto& e : edges) {
      NodeId a = find(e.u), b = find(e.v);
      if (a == b) continue;
      root[a] = b;
      length += e.weight;
      ++joined;
    }
    if (joined + 1 != members) continue;
    if (!best || length < *best) best = length;
  }
  if (!best) throw InvalidInput("disconnected");
  return *best;
}

CndOracleResult brute_force_cnd(const CndInstance& inst, std::size_t path_limit) {
  inst.validate();
  const int n = inst.graph.node_count();
  // edge ids for incremental facility accounting
  std::vector<std::vector<int>> edge_id(n, std::vector<int>(n, -1));
  std::vector<Rational> length;
  for (const auto& e : inst.graph.edges()) {
    edge_id[e.u][e.v] = edge_id[e.v][e.u] = static_cast<int>(length.size());
    length.push_back(e.weight);
  }

  std::vector<std::vector<Path>> options;
  for (NodeId u : inst.sources) {
    std::vector<Path> paths;
    Path current{u};
    std::vector<char> used(n, 0);
    used[u] = 1;
    auto dfs = [&](auto&& self, NodeId v) -> void {
      if (v == inst.sink) {
        if (paths.size() == path_limit) throw OracleLimit();
        paths.push_back(current);
        return;
      }
      for (const auto& arc : inst.graph.arcs(v)) {
        if (used[arc.to]) continue;
        used[arc.to] = 1;
        current.push_back(arc.to);
        self(self, arc.to);
        current.pop_back();
        used[arc.to] = 0;
      }
    };
    dfs(dfs, u);
    options.push_back(std::move(paths));
  }

  std::vector<std::int64_t> load(length.size(), 0);
  std::vector<std::size_t> pick(inst.sources.size(), 0), best_pick;
  std::optional<Rational> best;
  Rational cost(0);
  auto apply = [&](const Path& path, std::int64_t demand) {
    for (std::size_t i = 1; i < path.size(); ++i) {
      int id = edge_id[path[i - 1]][path[i]];
      cost -= Rational(ceil_div(load[id], inst.capacity)) * length[id];
      load[id] += demand;
      cost += Rational(ceil_div(load[id], inst.capacity)) * length[id];
    }
  };
  auto search = [&](auto&& self, std::size_t index) -> void {
    if (best && cost >= *best) return;
    if (index == inst.sources.size()) {
      best = cost;
      best_pick = pick;
      return;
    }
    std::int64_t demand = inst.demand[inst.sources[index]];
    for (std::size_t k = 0; k < options[index].size(); ++k) {
      pick[index] = k;
      apply(options[index][k], demand);
      self(self, index + 1);
      apply(options[index][k], -demand);
    }
  };
  search(search, 0);

  CndOracleResult result;
  result.cost = best.value_or(Rational(0));
  for (std::size_t i = 0; i < inst.sources.size(); ++i) {
    result.route.paths.emplace(inst.sources[i], options[i][best_pick[i]]);
  }
  return result;
}

}  // namespace aggtree
