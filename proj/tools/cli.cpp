#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "aggtree/algorithms.hpp"
#include "aggtree/chart.hpp"
#include "aggtree/errors.hpp"
#include "aggtree/gadgets.hpp"
#include "aggtree/io.hpp"
#include "aggtree/oracle.hpp"
#include "aggtree/rgg.hpp"
#include "aggtree/sweep.hpp"

namespace aggtree::cli {

namespace {

using nlohmann::ordered_json;

/// Writes to `path`, or to `out` when the path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

/// Cost parameters: the file's `param` line, then any command-line override.
struct ParamFlags {
  std::optional<std::int64_t> q;
  std::optional<std::string> tx, rx, budget;

  void attach(CLI::App* app) {
    app->add_option("--q", q, "aggregation ratio (overrides the file)");
    app->add_option("--tx", tx, "energy per packet sent");
    app->add_option("--rx", rx, "energy per packet received");
    app->add_option("--budget", budget, "decision budget C");
  }

  CostParams resolve(const std::optional<CostParams>& from_file) const {
    CostParams p = from_file.value_or(CostParams{});
    if (q) p.q = *q;
    if (tx) p.tx = parse_rational(*tx);
    if (rx) p.rx = parse_rational(*rx);
    if (budget) p.budget = parse_rational(*budget);
    p.validate();
    return p;
  }
};

std::string report_text(const ordered_json& j, bool as_json) {
  if (as_json) return j.dump(2) + "\n";
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      out << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << key << ": " << value.dump() << '\n';
    }
  }
  return out.str();
}

std::vector<std::int64_t> parse_q_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stoll(item));
      continue;
    }
    // lo..hi[:step]
    std::int64_t lo = std::stoll(item.substr(0, dots));
    std::string rest = item.substr(dots + 2);
    std::int64_t step = 1;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      step = std::stoll(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    std::int64_t hi = std::stoll(rest);
    if (step < 1) throw InvalidInput("q step must be positive");
    for (std::int64_t q = lo; q <= hi; q += step) out.push_back(q);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy-aware data aggregation trees for sensor networks", "aggtree"};
  app.require_subcommand(1);
  int status = kOk;

  // gen-rgg
  RggConfig rgg;
  std::string size_mode = "uniform";
  std::string out_path;
  ParamFlags gen_params;
  auto* gen = app.add_subcommand("gen-rgg", "random geometric network");
  gen->add_option("--n", rgg.n, "node count, sink included")->capture_default_str();
  gen->add_option("--field", rgg.field, "side of the square field")->capture_default_str();
  gen->add_option("--range", rgg.range, "transmission range")->capture_default_str();
  gen->add_option("--relay-prob", rgg.relay_prob, "relay probability")->capture_default_str();
  gen->add_flag("--relays", rgg.relays, "draw relay nodes (MECAT_RN mode)");
  gen->add_option("--sizes", size_mode, "uniform | nonuniform")->check(CLI::IsMember({"uniform", "nonuniform"}));
  gen->add_option("--seed", rgg.seed, "generator seed")->capture_default_str();
  gen->add_option("--out", out_path, "output file (default stdout)");
  gen_params.attach(gen);
  gen->callback([&] {
    rgg.size_mode = size_mode == "uniform" ? SizeMode::uniform : SizeMode::nonuniform;
    auto result = generate_rgg(rgg);
    if (result.seed_offset != 0) {
      err << "disconnected draws: used seed " << rgg.seed << " + offset " << result.seed_offset << '\n';
    }
    std::optional<CostParams> params;
    if (gen_params.q || gen_params.tx || gen_params.rx || gen_params.budget) params = gen_params.resolve({});
    emit(out_path, format_network(result.net, params), out);
  });

  // solve
  std::string net_path, tree_path, alg = "spt", cnd = "salman";
  std::uint64_t seed = 0;
  bool as_json = false, with_oracle = false;
  ParamFlags params_flags;
  auto* solve = app.add_subcommand("solve", "build a routing tree");
  solve->add_option("--net", net_path, "network file")->required();
  solve->add_option("--alg", alg, "algorithm")->check(CLI::IsMember(algorithm_names()))->capture_default_str();
  solve->add_option("--cnd", cnd, "CND solver for alg3")->capture_default_str();
  solve->add_option("--seed", seed, "seed for the spanning baseline");
  solve->add_option("--out", out_path, "write the tree here");
  solve->add_flag("--json", as_json, "report as JSON");
  solve->add_flag("--oracle", with_oracle, "also compute the optimum (small instances)");
  params_flags.attach(solve);
  solve->callback([&] {
    auto file = parse_network(read_text_file(net_path));
    auto params = params_flags.resolve(file.params);
    auto start = std::chrono::steady_clock::now();
    auto tree = solve_by_name(alg, file.net, params, cnd, seed);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    auto cost = tree_cost(tree, file.net, params);
    auto lb = lower_bound(file.net, params);
    ordered_json report;
    report["algorithm"] = alg == "alg3" ? "alg3:" + cnd : alg;
    report["cost"] = format_rational(cost);
    report["packets"] = total_packets(tree, file.net, params);
    report["lower_bound"] = format_rational(lb);
    if (with_oracle) {
      auto best = exact_mecat_rn(file.net, params);
      report["oracle_cost"] = format_rational(best.cost);
      report["ratio_to_oracle"] = format_decimal(cost / best.cost, 4);
    }
    report["runtime_ms"] = ms;
    report["seed"] = seed;
    if (!out_path.empty()) write_text_file(out_path, format_tree(tree));
    out << report_text(report, as_json);
    if (out_path.empty() && !as_json) out << format_tree(tree);
  });

  // eval
  ParamFlags eval_flags;
  auto* eval = app.add_subcommand("eval", "cost of a given tree");
  eval->add_option("--net", net_path, "network file")->required();
  eval->add_option("--tree", tree_path, "tree file")->required();
  eval->add_flag("--json", as_json, "report as JSON");
  eval_flags.attach(eval);
  eval->callback([&] {
    auto file = parse_network(read_text_file(net_path));
    auto params = eval_flags.resolve(file.params);
    auto tree = parse_tree(read_text_file(tree_path), file.net.node_count());
    validate_tree(tree, file.net, file.net.has_relays() ? TreeScope::sources : TreeScope::all_nodes);
    auto packets = packets_sent(tree, file.net, params);
    ordered_json report;
    ordered_json per_node = ordered_json::object();
    for (NodeId v : tree.members()) {
      if (v != tree.root()) per_node[std::to_string(v)] = packets[v];
    }
    report["packets"] = per_node;
    report["total_packets"] = total_packets(tree, file.net, params);
    report["cost"] = format_rational(tree_cost(tree, file.net, params));
    auto idle = idle_relays(tree, file.net);
    if (!idle.empty()) report["idle_relays"] = idle;
    if (params.budget) {
      bool ok = check_budget(tree, file.net, params);
      report["budget"] = format_rational(*params.budget);
      report["within_budget"] = ok;
      if (!ok) status = kFailed;
    }
    out << report_text(report, as_json);
  });

  // lb
  ParamFlags lb_flags;
  auto* lb_cmd = app.add_subcommand("lb", "lower bound on the optimal cost");
  lb_cmd->add_option("--net", net_path, "network file")->required();
  lb_cmd->add_flag("--json", as_json, "report as JSON");
  lb_flags.attach(lb_cmd);
  lb_cmd->callback([&] {
    auto file = parse_network(read_text_file(net_path));
    auto terms = lower_bound_terms(file.net, lb_flags.resolve(file.params));
    ordered_json report;
    report["routing_term"] = format_rational(terms.routing_term);
    report["steiner_term"] = format_rational(terms.steiner_term);
    report["steiner_tree_edges"] = terms.steiner_tree_edges;
    report["lower_bound"] = format_rational(terms.value);
    out << report_text(report, as_json);
  });

  // oracle
  std::string method = "dp";
  ParamFlags oracle_flags;
  auto* oracle = app.add_subcommand("oracle", "exact optimum of a small instance");
  oracle->add_option("--net", net_path, "network file")->required();
  oracle->add_option("--method", method, "dp | enum")->check(CLI::IsMember({"dp", "enum"}))->capture_default_str();
  oracle->add_option("--out", out_path, "write the optimal tree here");
  oracle->add_flag("--json", as_json, "report as JSON");
  oracle_flags.attach(oracle);
  oracle->callback([&] {
    auto file = parse_network(read_text_file(net_path));
    auto params = oracle_flags.resolve(file.params);
    OracleResult best;
    if (method == "dp") {
      best = exact_mecat_rn(file.net, params);
    } else {
      best = file.net.has_relays() ? brute_force_mecat_rn(file.net, params) : brute_force_mecat(file.net, params);
    }
    ordered_json report;
    report["method"] = method;
    report["cost"] = format_rational(best.cost);
    report["packets"] = best.packets;
    if (method == "enum") report["trees_examined"] = best.trees_examined;
    if (params.budget) {
      bool ok = best.cost <= *params.budget;
      report["budget"] = format_rational(*params.budget);
      report["feasible"] = ok;
      if (!ok) status = kFailed;
    }
    if (!out_path.empty()) write_text_file(out_path, format_tree(best.tree));
    out << report_text(report, as_json);
    if (out_path.empty() && !as_json) out << format_tree(best.tree);
  });

  // gadget
  std::string in_path;
  bool decide = false;
  auto* gadget = app.add_subcommand("gadget", "hardness reduction gadgets");
  gadget->require_subcommand(1);
  auto* lbsm = gadget->add_subcommand("lbsm", "semi-matching instance -> MECAT instance");
  auto* ds = gadget->add_subcommand("ds", "dominating set instance -> MECAT_RN instance");
  for (auto* sub : {lbsm, ds}) {
    sub->add_option("--in", in_path, "source instance file")->required();
    sub->add_option("--out", out_path, "network file (default stdout)");
    sub->add_flag("--decide", decide, "solve both sides and compare feasibility");
  }
  auto report_decision = [&](bool source_side, const Gadget& g) {
    auto best = exact_mecat_rn(g.net, g.params);
    bool gadget_side = best.cost <= *g.params.budget;
    err << "source feasible: " << (source_side ? "yes" : "no") << ", gadget optimum "
        << format_rational(best.cost) << " vs budget " << format_rational(*g.params.budget) << '\n';
    if (source_side != gadget_side) throw InternalError("gadget feasibility disagrees with the source instance");
    if (!source_side) status = kFailed;
  };
  lbsm->callback([&] {
    auto inst = parse_lbsm(read_text_file(in_path));
    auto g = gadget_lbsm_to_mecat(inst);
    emit(out_path, format_network(g.net, g.params), out);
    if (decide) report_decision(solve_lbsm(inst).has_value(), g);
  });
  ds->callback([&] {
    auto inst = parse_ds(read_text_file(in_path));
    auto g = gadget_ds_to_mecat_rn(inst);
    emit(out_path, format_network(g.net, g.params), out);
    if (decide) report_decision(ds_feasible(inst), g);
  });

  // family
  int size = 5;
  std::string reference_path;
  auto* family = app.add_subcommand("family", "adversarial instance families");
  family->require_subcommand(1);
  auto* t4 = family->add_subcommand("t4", "chain with one-relay shortcuts (q = 2)");
  auto* t5 = family->add_subcommand("t5", "chain with relay paths (q = |U|)");
  for (auto* sub : {t4, t5}) {
    sub->add_option("--size", size, "|U|, at least 3")->capture_default_str();
    sub->add_option("--out", out_path, "network file (default stdout)");
    sub->add_option("--reference-tree", reference_path, "write the heuristic's reference tree here");
  }
  auto emit_family = [&](const FamilyInstance& f) {
    emit(out_path, format_network(f.net, f.params), out);
    if (!reference_path.empty()) write_text_file(reference_path, format_tree(f.reference));
    err << "reference tree cost " << format_rational(tree_cost(f.reference, f.net, f.params))
        << ", exhibited tree cost " << format_rational(tree_cost(f.good, f.net, f.params)) << '\n';
  };
  t4->callback([&] { emit_family(shortcut_family(size)); });
  t5->callback([&] { emit_family(relay_path_family(size)); });

  // sweep
  SweepConfig sweep_cfg;
  RggConfig sweep_rgg;
  std::string q_list, alg_list, means_path, sweep_sizes = "uniform", tx_text = "2", rx_text = "1";
  auto* sweep = app.add_subcommand("sweep", "cost-versus-q experiment over random networks");
  sweep->add_option("--trials", sweep_cfg.trials, "networks per point")->capture_default_str();
  sweep->add_option("--base-seed", sweep_cfg.base_seed, "trial t uses base + 1000 t")->capture_default_str();
  sweep->add_option("--q", q_list, "q values, e.g. 2..50:2 or 2,4,8");
  sweep->add_option("--alg", alg_list, "comma-separated algorithm labels");
  sweep->add_flag("--relays", sweep_rgg.relays, "MECAT_RN mode");
  sweep->add_option("--sizes", sweep_sizes, "uniform | nonuniform")->check(CLI::IsMember({"uniform", "nonuniform"}));
  sweep->add_option("--n", sweep_rgg.n, "nodes per network, sink included")->capture_default_str();
  sweep->add_option("--range", sweep_rgg.range, "transmission range")->capture_default_str();
  sweep->add_option("--relay-prob", sweep_rgg.relay_prob, "relay probability")->capture_default_str();
  sweep->add_option("--tx", tx_text, "energy per packet sent")->capture_default_str();
  sweep->add_option("--rx", rx_text, "energy per packet received")->capture_default_str();
  sweep->add_flag("--timing", sweep_cfg.timing, "add runtime_ms (breaks byte reproducibility)");
  sweep->add_option("--out", out_path, "per-row CSV (default stdout)");
  sweep->add_option("--means", means_path, "mean-per-point CSV");
  sweep->callback([&] {
    sweep_rgg.size_mode = sweep_sizes == "uniform" ? SizeMode::uniform : SizeMode::nonuniform;
    if (!q_list.empty()) sweep_cfg.q_values = parse_q_list(q_list);
    if (!alg_list.empty()) {
      std::stringstream in(alg_list);
      for (std::string a; std::getline(in, a, ',');) sweep_cfg.algorithms.push_back(a);
    }
    sweep_cfg.tx = parse_rational(tx_text);
    sweep_cfg.rx = parse_rational(rx_text);
    auto result = run_sweep(sweep_cfg, sweep_rgg);
    for (const auto& line : result.log) err << line << '\n';
    emit(out_path, rows_csv(result, sweep_cfg.timing), out);
    if (!means_path.empty()) write_text_file(means_path, means_csv(result));
    bool failed = std::any_of(result.rows.begin(), result.rows.end(), [](const SweepRow& r) { return !r.cost; });
    if (failed) status = kFailed;
  });

  // chart
  std::string csv_path;
  auto* chart = app.add_subcommand("chart", "SVG chart of sweep output");
  chart->add_option("--csv", csv_path, "sweep CSV (rows or means)")->required();
  chart->add_option("--out", out_path, "SVG file (default stdout)");
  chart->callback([&] { emit(out_path, emit_chart(read_text_file(csv_path)), out); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}

}  // namespace aggtree::cli
