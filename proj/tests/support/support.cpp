#include "support.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "aggtree/errors.hpp"

namespace testsupport {

Network example1_network() {
  // r=0; 1:1 2:2 3:2 4:2 5:2 6:1 7:1
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 3}, {3, 7}, {6, 7}, {2, 6}, {1, 4}, {2, 5}};
  return Network(8, edges, {0, 1, 2, 2, 2, 2, 1, 1}, 0);
}

CostParams example1_params() {
  CostParams p;
  p.q = 3;
  return p;
}

RoutingTree example1_tree() {
  RoutingTree t(8, 0);
  t.attach(1, 0);
  t.attach(2, 0);
  t.attach(3, 1);
  t.attach(4, 1);
  t.attach(5, 2);
  t.attach(7, 3);
  t.attach(6, 7);
  return t;
}

RoutingTree example1_tree_variant() {
  RoutingTree t = example1_tree();
  t.attach(6, 2);
  return t;
}

Network non_spt_optimal_network() {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 3}, {3, 4}, {2, 4}};
  return Network(5, edges, {0, 9, 7, 1, 1}, 0);
}

CostParams non_spt_optimal_params() {
  CostParams p;
  p.q = 9;
  return p;
}

Network fig5_network() {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {0, 5}};
  return Network(6, edges, {0, 1, 1, 1, 1, 0}, 0);
}

CostParams fig5_params() {
  CostParams p;
  p.q = 5;
  return p;
}

SimpleGraph random_connected_graph(Rng& rng, int n, double extra) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) {
    edges.push_back(make_edge(v, static_cast<NodeId>(rng.uniform_int(0, v - 1))));
  }
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (std::find(edges.begin(), edges.end(), Edge{a, b}) != edges.end()) continue;
      if (rng.bernoulli(extra)) edges.push_back({a, b});
    }
  }
  return SimpleGraph(n, edges);
}

Network random_network(Rng& rng, int n, double extra, std::int64_t max_size, double relay_prob) {
  SimpleGraph g = random_connected_graph(rng, n, extra);
  std::vector<std::int64_t> sizes(n, 0);
  for (NodeId v = 1; v < n; ++v) {
    bool relay = rng.bernoulli(relay_prob);
    std::int64_t s = rng.uniform_int(1, max_size);
    if (!relay) sizes[v] = s;
  }
  if (n > 1 && std::all_of(sizes.begin(), sizes.end(), [](auto s) { return s == 0; })) sizes[n - 1] = 1;
  return Network(n, g.edges(), sizes, 0);
}

RoutingTree random_tree(Rng& rng, const Network& net) {
  const int n = net.node_count();
  RoutingTree tree(n, net.sink());
  std::vector<char> seen(n, 0);
  std::vector<NodeId> frontier{net.sink()};
  seen[net.sink()] = 1;
  while (!frontier.empty()) {
    auto pick = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(frontier.size()) - 1));
    NodeId v = frontier[pick];
    std::vector<NodeId> fresh;
    for (NodeId w : net.neighbors(v)) {
      if (!seen[w]) fresh.push_back(w);
    }
    if (fresh.empty()) {
      frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
      continue;
    }
    NodeId w = fresh[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(fresh.size()) - 1))];
    seen[w] = 1;
    tree.attach(w, v);
    frontier.push_back(w);
  }
  return prune_idle_relays(tree, net);
}

WeightedGraph random_weighted_graph(Rng& rng, int n, double extra, std::int64_t max_w) {
  SimpleGraph g = random_connected_graph(rng, n, extra);
  std::vector<WeightedEdge> edges;
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, Rational(rng.uniform_int(1, max_w))});
  return WeightedGraph(n, edges);
}

Rational min_spanning_weight_by_enumeration(const WeightedGraph& g) {
  const auto& edges = g.edges();
  const int n = g.node_count();
  const int m = static_cast<int>(edges.size());
  if (m > 24) throw OracleLimit();
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != n - 1) continue;
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
      while (comp[x] != x) x = comp[x];
      return x;
    };
    bool acyclic = true;
    Rational weight(0);
    for (int i = 0; i < m && acyclic; ++i) {
      if (!(mask >> i & 1)) continue;
      int a = find(edges[i].u), b = find(edges[i].v);
      if (a == b) acyclic = false;
      comp[a] = b;
      weight += edges[i].weight;
    }
    if (acyclic && (!best || weight < *best)) best = weight;
  }
  return *best;
}

std::uint64_t kirchhoff_count(const SimpleGraph& g) {
  const int n = g.node_count();
  if (n == 1) return 1;
  // Reduced Laplacian without row/column 0; Bareiss elimination.
  const int m = n - 1;
  std::vector<std::vector<__int128>> a(m, std::vector<__int128>(m, 0));
  for (NodeId v = 1; v < n; ++v) {
    a[v - 1][v - 1] = static_cast<__int128>(g.neighbors(v).size());
    for (NodeId w : g.neighbors(v)) {
      if (w != 0) a[v - 1][w - 1] = -1;
    }
  }
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < m; ++r) {
        if (a[r][k] != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return static_cast<std::uint64_t>(sign * a[m - 1][m - 1]);
}

std::vector<int> reference_hops(const SimpleGraph& g, NodeId from) {
  std::vector<int> d(g.node_count(), -1);
  std::deque<NodeId> queue{from};
  d[from] = 0;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(v)) {
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return d;
}

std::int64_t reference_packets(const RoutingTree& tree, const Network& net, std::int64_t q) {
  std::vector<std::int64_t> carried(tree.node_count(), 0);
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (!tree.is_member(v)) continue;
    for (NodeId x = v; x != tree.root(); x = tree.parent(x)) carried[x] += net.report_size(v);
  }
  std::int64_t total = 0;
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (tree.is_member(v) && v != tree.root()) total += (carried[v] + q - 1) / q;
  }
  return total;
}

}  // namespace testsupport
