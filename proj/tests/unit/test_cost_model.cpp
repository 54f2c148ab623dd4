#include "doctest.h"

#include "aggtree/cost_model.hpp"
#include "aggtree/errors.hpp"
#include "support.hpp"

using namespace aggtree;
using namespace testsupport;

namespace {

Network path_network(std::vector<std::int64_t> sizes) {
  std::vector<Edge> edges;
  for (int v = 1; v < static_cast<int>(sizes.size()); ++v) edges.push_back({v - 1, v});
  return Network(static_cast<int>(sizes.size()), edges, sizes, 0);
}

RoutingTree path_tree(int n) {
  RoutingTree t(n, 0);
  for (int v = 1; v < n; ++v) t.attach(v, v - 1);
  return t;
}

}  // namespace

TEST_CASE("params validation") {
  CostParams p;
  p.q = 0;
  CHECK_THROWS_AS(p.validate(), InvalidInput);
  p.q = 1;
  p.tx = Rational(0);
  CHECK_THROWS_AS(p.validate(), InvalidInput);
  p.tx = Rational(1);
  p.rx = Rational(-1);
  CHECK_THROWS_AS(p.validate(), InvalidInput);
}

TEST_CASE("descendant loads") {
  auto net = path_network({0, 1, 1});
  auto des = descendant_loads(path_tree(3), net);
  CHECK(des[2] == 0);
  CHECK(des[1] == 1);

  Network star(4, {{0, 1}, {0, 2}, {0, 3}}, {0, 2, 3, 4}, 0);
  RoutingTree t(4, 0);
  for (int v = 1; v < 4; ++v) t.attach(v, 0);
  auto star_des = descendant_loads(t, star);
  CHECK(star_des[1] == 0);
  CHECK(star_des[2] == 0);
  CHECK(star_des[3] == 0);
  CHECK(star_des[0] == 9);

  // node 7 forwards node 6's report
  auto ex = descendant_loads(example1_tree(), example1_network());
  CHECK(ex[7] == example1_network().report_size(6));
}

TEST_CASE("example tree packet counts") {
  auto net = example1_network();
  auto params = example1_params();
  auto packets = packets_sent(example1_tree(), net, params);
  CHECK(std::vector<std::int64_t>(packets.begin() + 1, packets.end()) ==
        std::vector<std::int64_t>{3, 2, 2, 1, 1, 1, 1});
  CHECK(total_packets(example1_tree(), net, params) == 11);
  CHECK(tree_cost(example1_tree(), net, params) == Rational(22));
  CHECK(total_packets(example1_tree_variant(), net, params) == 9);
  CHECK(tree_cost(example1_tree_variant(), net, params) == Rational(18));
}

TEST_CASE("hand-evaluated path cost") {
  auto net = path_network({0, 1, 1, 1});
  CostParams p;
  p.q = 2;
  p.tx = Rational(2);
  p.rx = Rational(1);
  auto packets = packets_sent(path_tree(4), net, p);
  CHECK(packets[3] == 1);
  CHECK(packets[2] == 1);
  CHECK(packets[1] == 2);
  CHECK(tree_cost(path_tree(4), net, p) == Rational(12));
}

TEST_CASE("q extremes") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto net = random_network(rng, 9, 0.2, 1);
    auto tree = random_tree(rng, net);
    CostParams big;
    big.q = net.total_report_size();
    auto packets = packets_sent(tree, net, big);
    for (NodeId v = 1; v < net.node_count(); ++v) CHECK(packets[v] == 1);

    auto sized = random_network(rng, 9, 0.2, 5);
    auto t2 = random_tree(rng, sized);
    CostParams one;
    auto des = descendant_loads(t2, sized);
    auto p1 = packets_sent(t2, sized, one);
    for (NodeId v = 1; v < sized.node_count(); ++v) CHECK(p1[v] == des[v] + sized.report_size(v));
  }
}

TEST_CASE("cost properties over random trees") {
  Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    auto net = random_network(rng, static_cast<int>(rng.uniform_int(2, 12)), 0.25, 5, trial % 2 ? 0.3 : 0.0);
    auto tree = random_tree(rng, net);
    validate_tree(tree, net, net.has_relays() ? TreeScope::sources : TreeScope::all_nodes);
    CostParams p;
    p.tx = Rational(rng.uniform_int(1, 5), rng.uniform_int(1, 3));
    p.rx = Rational(rng.uniform_int(1, 5), rng.uniform_int(1, 3));
    Rational previous(-1);
    auto des = descendant_loads(tree, net);
    std::int64_t carrying = 0;
    for (NodeId v : tree.members()) {
      if (v != tree.root() && des[v] + net.report_size(v) > 0) ++carrying;
    }
    for (std::int64_t q = net.total_report_size(); q >= 1; --q) {
      p.q = q;
      auto cost = tree_cost(tree, net, p);
      auto packets = total_packets(tree, net, p);
      CHECK(packets == reference_packets(tree, net, q));
      CHECK(cost == p.per_packet() * Rational(packets));
      CHECK(cost >= p.per_packet() * Rational(carrying));
      if (previous >= 0) CHECK(cost >= previous);  // q is decreasing here
      previous = cost;
    }
    p.q = 1;
    std::int64_t sum = 0;
    for (NodeId v : tree.members()) {
      if (v != tree.root()) sum += des[v] + net.report_size(v);
    }
    CHECK(tree_cost(tree, net, p) == p.per_packet() * Rational(sum));
  }
}

TEST_CASE("budget check") {
  auto net = example1_network();
  auto p = example1_params();
  CHECK_THROWS_WITH_AS(check_budget(example1_tree(), net, p), "no budget set", InvalidInput);
  p.budget = Rational(22);
  CHECK(check_budget(example1_tree(), net, p));
  p.budget = Rational(219, 10);
  CHECK_FALSE(check_budget(example1_tree(), net, p));
}

TEST_CASE("malformed trees") {
  auto net = path_network({0, 1, 1, 1});
  RoutingTree cycle(4, 0);
  cycle.attach(1, 0);
  cycle.attach(2, 3);
  cycle.attach(3, 2);
  CHECK_THROWS_AS(descendant_loads(cycle, net), MalformedTree);
  CHECK_THROWS_WITH(descendant_loads(cycle, net), doctest::Contains("malformed tree"));

  RoutingTree off_graph(4, 0);
  off_graph.attach(1, 0);
  off_graph.attach(2, 1);
  off_graph.attach(3, 1);  // no edge 1-3
  CHECK_THROWS_AS(tree_cost(off_graph, net, CostParams{}), MalformedTree);

  RoutingTree partial(4, 0);
  partial.attach(1, 0);
  CHECK_THROWS_AS(validate_tree(partial, net, TreeScope::sources), MalformedTree);

  RoutingTree wrong_root(4, 1);
  wrong_root.attach(0, 1);
  wrong_root.attach(2, 1);
  wrong_root.attach(3, 2);
  CHECK_THROWS_AS(validate_tree(wrong_root, net, TreeScope::all_nodes), MalformedTree);
}

TEST_CASE("idle relays are free but flagged") {
  Network net(4, {{0, 1}, {0, 2}, {2, 3}}, {0, 1, 0, 0}, 0);
  RoutingTree t(4, 0);
  t.attach(1, 0);
  t.attach(2, 0);
  t.attach(3, 2);
  CostParams p;
  CHECK(tree_cost(t, net, p) == Rational(2));
  CHECK(idle_relays(t, net) == std::vector<NodeId>{2, 3});
  auto pruned = prune_idle_relays(t, net);
  CHECK(pruned.members() == std::vector<NodeId>{0, 1});
  CHECK(tree_cost(pruned, net, p) == Rational(2));
}
