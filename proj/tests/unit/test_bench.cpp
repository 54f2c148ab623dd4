#include <cmath>

#include "doctest.h"

#include "aggtree/chart.hpp"
#include "aggtree/errors.hpp"
#include "aggtree/io.hpp"
#include "aggtree/rgg.hpp"
#include "aggtree/sweep.hpp"
#include "support.hpp"

using namespace aggtree;
using namespace testsupport;

TEST_CASE("rng is reproducible and in range") {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    double u = r.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    auto k = r.uniform_int(-2, 3);
    CHECK(k >= -2);
    CHECK(k <= 3);
  }
}

TEST_CASE("geometric generator") {
  SUBCASE("two nodes in range") {
    RggConfig cfg;
    cfg.n = 2;
    cfg.range = 200;
    auto g = generate_rgg(cfg);
    CHECK(g.net.edges() == std::vector<Edge>{{0, 1}});
    CHECK(g.seed_offset == 0);
    CHECK((*g.net.coords())[0] == Point{50, 50});
  }
  SUBCASE("same seed, same file") {
    RggConfig cfg;
    cfg.seed = 77;
    cfg.relays = true;
    cfg.size_mode = SizeMode::nonuniform;
    auto a = format_network(generate_rgg(cfg).net);
    auto b = format_network(generate_rgg(cfg).net);
    CHECK(a == b);
  }
  SUBCASE("roles and sizes") {
    RggConfig cfg;
    cfg.relays = true;
    cfg.size_mode = SizeMode::nonuniform;
    auto net = generate_rgg(cfg).net;
    CHECK(net.has_relays());
    for (NodeId v : net.sources()) {
      CHECK(net.report_size(v) >= 1);
      CHECK(net.report_size(v) <= 5);
    }
    cfg.relays = false;
    auto plain = generate_rgg(cfg).net;
    CHECK_FALSE(plain.has_relays());
    // the role coin is drawn either way, so the geometry matches
    CHECK(*plain.coords() == *net.coords());
  }
  SUBCASE("mean degree near the boundary-corrected expectation") {
    double total = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      RggConfig cfg;
      cfg.seed = seed * 1000;
      auto net = generate_rgg(cfg).net;
      total += 2.0 * static_cast<double>(net.edges().size()) / net.node_count();
    }
    double mean = total / 30;
    // n pi R^2 / field^2 ignores the border; two uniform points in a unit
    // square are within r of each other with probability pi r^2 - 8r^3/3 + r^4/2
    const double r = 0.2;
    double naive = 100 * M_PI * r * r;
    double corrected = 99 * (M_PI * r * r - 8 * r * r * r / 3 + r * r * r * r / 2);
    CHECK(naive == doctest::Approx(12.566).epsilon(0.001));
    CHECK(mean > 0.8 * corrected);
    CHECK(mean < 1.2 * corrected);
  }
  SUBCASE("hopeless settings give up") {
    RggConfig cfg;
    cfg.range = 0.5;
    CHECK_THROWS_WITH(generate_rgg(cfg), "generation failed; lower n or raise range");
    cfg.relay_prob = 1.0;
    CHECK_THROWS_AS(generate_rgg(cfg), InvalidInput);
  }
}

TEST_CASE("network file round trip") {
  auto net = example1_network();
  CostParams p = example1_params();
  p.tx = Rational(3, 2);
  p.budget = Rational(22);
  auto text = format_network(net, p);
  auto back = parse_network(text);
  CHECK(format_network(back.net, back.params) == text);
  CHECK(back.params->tx == Rational(3, 2));
  CHECK(*back.params->budget == Rational(22));

  RggConfig cfg;
  cfg.n = 30;
  cfg.range = 40;
  auto g = generate_rgg(cfg).net;
  auto gtext = format_network(g);
  CHECK(format_network(parse_network(gtext).net) == gtext);
  CHECK(*parse_network(gtext).net.coords() == *g.coords());
}

TEST_CASE("network file errors name the line") {
  CHECK_THROWS_WITH(parse_network("node 0 0 sink\n"), doctest::Contains("'net <n>' must come first"));
  CHECK_THROWS_WITH(parse_network("net 2\nnode 0 0 sink\nnode 1 0 source\nedge 0 1\n"),
                    doctest::Contains("line 3"));
  CHECK_THROWS_WITH(parse_network("net 2\nnode 1 1 source\nedge 0 1\n"), doctest::Contains("no sink"));
  CHECK_THROWS_WITH(parse_network("net 2\nnode 0 0 sink\nnode 1 1 source\n"), doctest::Contains("disconnected"));
  CHECK_THROWS_WITH(parse_network("net 2\nparam q 0 tx 1 rx 1\n"), doctest::Contains("line 2"));
  CHECK_THROWS_AS(parse_network("net 2\nnode 0 0 sink\nnode 1 1 source\nedge 0 1\nedge 1 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_network("net 2\nbogus\n"), InvalidInput);
  // comments and relays by omission
  auto f = parse_network("# hi\nnet 3\nnode 0 0 sink  # the sink\nnode 2 4 source\nedge 0 1\nedge 1 2\n");
  CHECK(f.net.relays() == std::vector<NodeId>{1});
  CHECK_FALSE(f.params.has_value());
}

TEST_CASE("tree and instance files") {
  auto tree = example1_tree();
  CHECK(parse_tree(format_tree(tree), 8) == tree);
  CHECK_THROWS_AS(parse_tree("parent 1 0\n", 8), InvalidInput);
  CHECK_THROWS_AS(parse_tree("root 0\nparent 1 0\nparent 1 2\n", 8), InvalidInput);

  LbsmInstance lbsm{{2, 1, 3}, 2, {{0, 0}, {1, 0}, {2, 1}}, 4};
  auto lb_back = parse_lbsm(format_lbsm(lbsm));
  CHECK(lb_back.weight == lbsm.weight);
  CHECK(lb_back.edges == lbsm.edges);
  CHECK(lb_back.k == 4);

  DsInstance ds{SimpleGraph(4, {{0, 1}, {2, 3}}), 2};
  auto ds_back = parse_ds(format_ds(ds));
  CHECK(ds_back.graph.edges() == ds.graph.edges());
  CHECK(ds_back.k == 2);
}

TEST_CASE("sweep") {
  SweepConfig cfg;
  cfg.trials = 3;
  cfg.q_values = {2, 10, 4};
  RggConfig rgg;
  rgg.n = 30;
  rgg.range = 35;
  auto result = run_sweep(cfg, rgg);
  CHECK(result.rows.size() == 3 * 3 * 2);
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    const auto& a = result.rows[i - 1];
    const auto& b = result.rows[i];
    CHECK(std::tie(a.trial, a.q, a.algorithm) < std::tie(b.trial, b.q, b.algorithm));
  }
  for (const auto& row : result.rows) {
    REQUIRE(row.cost.has_value());
    CHECK(*row.cost >= row.lower_bound);
    CHECK(row.seed == 1 + 1000 * static_cast<std::uint64_t>(row.trial));
  }
  CHECK(result.means.size() == 3 * 2);
  CHECK(rows_csv(result, false) == rows_csv(run_sweep(cfg, rgg), false));
  CHECK(rows_csv(result, false).rfind("trial,seed,q,algorithm,cost,lower_bound,status\n", 0) == 0);
  CHECK(rows_csv(result, true).find("runtime_ms") != std::string::npos);

  SUBCASE("relay mode and failing solvers") {
    rgg.relays = true;
    cfg.algorithms = {"alg2", "spanning"};
    auto r = run_sweep(cfg, rgg);
    bool spanning_failed = false;
    for (const auto& row : r.rows) {
      if (row.algorithm == "spanning") spanning_failed = !row.cost.has_value();
      if (row.algorithm == "alg2") CHECK(*row.cost >= row.lower_bound);
    }
    CHECK(spanning_failed);
    CHECK(rows_csv(r, false).find("failed: network has relay nodes") != std::string::npos);
    CHECK_FALSE(r.log.empty());
  }
}

TEST_CASE("chart") {
  CHECK_THROWS_AS(emit_chart(""), InvalidInput);
  CHECK_THROWS_AS(emit_chart("q,algorithm,trials,mean_cost,mean_lower_bound\n"), InvalidInput);
  CHECK_THROWS_AS(emit_chart("a,b\n1,2\n"), InvalidInput);
  auto one = emit_chart("q,algorithm,trials,mean_cost,mean_lower_bound\n4,spt,3,10.0,8.0\n");
  CHECK(one.find("<circle") != std::string::npos);
  CHECK(one.find("aggregation ratio q") != std::string::npos);
  CHECK(one.find("energy cost") != std::string::npos);
  CHECK(one.find("stroke-dasharray") != std::string::npos);

  SweepConfig cfg;
  cfg.trials = 2;
  cfg.q_values = {2, 4, 6};
  RggConfig rgg;
  rgg.n = 20;
  rgg.range = 40;
  auto result = run_sweep(cfg, rgg);
  auto from_rows = emit_chart(rows_csv(result, false));
  auto from_means = emit_chart(means_csv(result));
  CHECK(from_rows == from_means);
  CHECK(from_rows.find(">spanning<") != std::string::npos);
}
