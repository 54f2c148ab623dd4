#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "aggtree/errors.hpp"
#include "aggtree/graph_algos.hpp"
#include "aggtree/oracle.hpp"
#include "aggtree/tree_builders.hpp"
#include "support.hpp"

using namespace aggtree;
using namespace testsupport;

namespace {

Network uniform(int n, std::vector<Edge> edges) {
  std::vector<std::int64_t> sizes(n, 1);
  sizes[0] = 0;
  return Network(n, std::move(edges), sizes, 0);
}

std::int64_t des_sum(const RoutingTree& t, const Network& net) {
  auto des = descendant_loads(t, net);
  std::int64_t sum = 0;
  for (NodeId v : t.members()) {
    if (v != t.root()) sum += des[v];
  }
  return sum;
}

}  // namespace

TEST_CASE("shortest path tree") {
  auto path = uniform(4, {{0, 1}, {1, 2}, {2, 3}});
  auto t = spanning_shortest_path_tree(path, 0);
  CHECK(t.parent(1) == 0);
  CHECK(t.parent(2) == 1);
  CHECK(t.parent(3) == 2);

  // r=0 a=1 b=2 c=3: b could hang under a or c
  auto cycle = uniform(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(spanning_shortest_path_tree(cycle, 0).parent(2) == 1);
  std::vector<int> rank{0, 3, 2, 1};
  CHECK(spanning_shortest_path_tree(cycle, 0, rank).parent(2) == 3);
}

TEST_CASE("span-restricted tree keeps only the chains of the span") {
  Network net(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}}, {0, 0, 1, 0, 0}, 0);
  std::vector<NodeId> span{2};
  auto t = shortest_path_tree(net, 0, span);
  CHECK(t.members() == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("every SPT member sits at its hop distance") {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    auto net = random_network(rng, static_cast<int>(rng.uniform_int(2, 20)), 0.2, 3, 0.3);
    auto hops = reference_hops(net.graph(), 0);
    for (const auto& t : {spanning_shortest_path_tree(net, 0), shortest_path_tree(net, 0, net.sources())}) {
      auto depth = tree_depths(t);
      for (NodeId v : t.members()) CHECK(depth[v] == hops[v]);
      validate_tree(t, net, TreeScope::sources);
    }
  }
}

TEST_CASE("descendant sum and level loads do not depend on SPT tie-breaking") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    auto net = random_network(rng, static_cast<int>(rng.uniform_int(3, 30)), 0.15, 5);
    const int n = net.node_count();
    std::vector<int> rank(n);
    std::iota(rank.begin(), rank.end(), 0);
    auto base = spanning_shortest_path_tree(net, 0);
    const auto expected = des_sum(base, net);
    auto hops = hop_distances(net, 0);
    for (int perm = 0; perm < 6; ++perm) {
      rng.shuffle(rank);
      auto t = spanning_shortest_path_tree(net, 0, rank);
      CHECK(des_sum(t, net) == expected);
      auto depth = tree_depths(t);
      for (NodeId v = 0; v < n; ++v) CHECK(depth[v] == hops[v]);
    }
  }
}

TEST_CASE("steiner 2-approximation") {
  SUBCASE("all nodes as terminals gives a spanning tree") {
    auto net = uniform(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}});
    std::vector<NodeId> all{0, 1, 2, 3, 4};
    auto t = steiner_tree_2approx(net, all, 0);
    CHECK(t.edge_count() == 4);
    validate_tree(t, net, TreeScope::all_nodes);
  }
  SUBCASE("terminals already on an induced path") {
    Network net(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 2}}, {0, 1, 1, 0, 0}, 0);
    std::vector<NodeId> terms{0, 1, 2};
    auto t = steiner_tree_2approx(net, terms, 0);
    CHECK(t.members() == std::vector<NodeId>{0, 1, 2});
    CHECK(t.parent(2) == 1);
  }
  SUBCASE("random instances against the exhaustive optimum") {
    Rng rng(4);
    for (int trial = 0; trial < 150; ++trial) {
      auto net = random_network(rng, 9, 0.15, 1);
      std::vector<NodeId> terms{0};
      std::vector<NodeId> others{1, 2, 3, 4, 5, 6, 7, 8};
      rng.shuffle(others);
      terms.insert(terms.end(), others.begin(), others.begin() + 3);
      auto t = steiner_tree_2approx(net, terms, 0);
      auto children = t.children();
      for (NodeId v : t.members()) {
        bool terminal = std::find(terms.begin(), terms.end(), v) != terms.end();
        if (!terminal) CHECK_FALSE(children[v].empty());
        if (t.parent(v) != kNoNode) CHECK(net.has_edge(v, t.parent(v)));
      }
      for (NodeId v : terms) CHECK(t.is_member(v));
      int best = brute_force_steiner_edges(net.graph(), terms);
      CHECK(static_cast<int>(t.edge_count()) <= 2 * best);
    }
  }
}

TEST_CASE("LAST parameters") {
  LastParams p;
  CHECK_NOTHROW(p.validate());
  p.alpha = Rational(1);
  CHECK_THROWS_AS(p.validate(), InvalidInput);
  p.alpha = Rational(2);
  p.beta = Rational(2);
  CHECK_THROWS_AS(p.validate(), InvalidInput);  // alpha 2 only promises beta 3
  p.beta = Rational(3);
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("LAST on trees it should return unchanged") {
  WeightedGraph star(4, {{0, 1, Rational(2)}, {0, 2, Rational(1)}, {0, 3, Rational(5)}});
  auto t = last_tree(star, 0);
  for (NodeId v = 1; v < 4; ++v) CHECK(t.parent[v] == 0);

  WeightedGraph path(4, {{0, 1, Rational(1)}, {1, 2, Rational(3)}, {2, 3, Rational(2)}});
  auto tp = last_tree(path, 0);
  CHECK(tp.parent[1] == 0);
  CHECK(tp.parent[2] == 1);
  CHECK(tp.parent[3] == 2);
}

TEST_CASE("LAST conditions on random closures") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 30));
    auto host = random_weighted_graph(rng, n, 0.1, 9);
    std::vector<NodeId> terms;
    for (NodeId v = 0; v < n; ++v) {
      if (v == 0 || rng.bernoulli(0.6)) terms.push_back(v);
    }
    if (terms.size() < 2) terms.push_back(n - 1);
    auto mc = metric_closure(host, terms);
    auto t = last_tree(mc.graph(), 0);
    auto along = tree_distances(mc.graph(), t);
    auto shortest = shortest_distances(mc.graph(), 0);
    for (NodeId v = 0; v < mc.graph().node_count(); ++v) CHECK(along[v] <= 3 * shortest[v]);
    Rational mst(0);
    for (const auto& e : minimum_spanning_tree(mc.graph())) mst += e.weight;
    CHECK(tree_weight(mc.graph(), t) <= 2 * mst);
  }
}
