#include "aggtree/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <tuple>

#include "aggtree/algorithms.hpp"
#include "aggtree/cnd.hpp"
#include "aggtree/errors.hpp"
#include "aggtree/oracle.hpp"

namespace aggtree {

void SweepConfig::validate() const {
  if (trials < 1) throw InvalidInput("trials must be >= 1");
  for (auto q : q_values) {
    if (q < 1) throw InvalidInput("q values must be positive");
  }
  if (tx <= 0 || rx <= 0) throw InvalidInput("tx and rx must be positive");
}

std::vector<std::int64_t> default_q_values(SizeMode mode) {
  std::vector<std::int64_t> out;
  const std::int64_t top = mode == SizeMode::uniform ? 50 : 100;
  for (std::int64_t q = 2; q <= top; q += 2) out.push_back(q);
  return out;
}

std::vector<std::string> sweep_algorithms(bool relays) {
  if (!relays) return {"spt", "spanning"};
  return {"spt", "steiner", "alg2", "alg3:salman", "alg3:sp-only", "route:sp-only"};
}

namespace {

/// What an algorithm produced for one trial: a tree, or a route costed as CND.
struct Built {
  std::optional<RoutingTree> tree;
  std::optional<CndRoute> route;
  std::string error;
  double ms = 0;
};

Built build(const std::string& alg, const Network& net, const CostParams& params, std::uint64_t seed) {
  Built out;
  auto start = std::chrono::steady_clock::now();
  try {
    if (alg.rfind("route:", 0) == 0) {
      auto inst = make_cnd_instance(net, params, params.per_packet());
      out.route = default_cnd_solvers().get(alg.substr(6)).solve(inst);
      validate_route(*out.route, inst);
    } else if (alg.rfind("alg3:", 0) == 0) {
      out.tree = solve_by_name("alg3", net, params, alg.substr(5), seed);
    } else {
      out.tree = solve_by_name(alg, net, params, "salman", seed);
    }
  } catch (const Error& e) {
    out.error = e.what();
  }
  out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg_in, const RggConfig& rgg_in) {
  SweepConfig cfg = cfg_in;
  cfg.validate();
  if (cfg.q_values.empty()) cfg.q_values = default_q_values(rgg_in.size_mode);
  if (cfg.algorithms.empty()) cfg.algorithms = sweep_algorithms(rgg_in.relays);
  std::sort(cfg.q_values.begin(), cfg.q_values.end());
  cfg.q_values.erase(std::unique(cfg.q_values.begin(), cfg.q_values.end()), cfg.q_values.end());

  SweepResult result;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    RggConfig rgg = rgg_in;
    rgg.seed = cfg.base_seed + 1000ull * static_cast<std::uint64_t>(trial);
    RggResult drawn = generate_rgg(rgg);
    const std::uint64_t seed = rgg.seed + drawn.seed_offset;
    if (drawn.seed_offset != 0) {
      result.log.push_back("trial " + std::to_string(trial) + ": disconnected draws, seed " +
                           std::to_string(rgg.seed) + " + offset " + std::to_string(drawn.seed_offset));
    }
    const Network& net = drawn.net;
    CostParams base;
    base.q = 1;
    base.tx = cfg.tx;
    base.rx = cfg.rx;
    // The routing term scales as 1/q and the Steiner term does not.
    LowerBound lb1 = lower_bound_terms(net, base);

    std::vector<Built> built;
    for (const auto& alg : cfg.algorithms) built.push_back(build(alg, net, base, seed));

    for (auto q : cfg.q_values) {
      CostParams params = base;
      params.q = q;
      Rational lb = std::max(lb1.routing_term / Rational(q), lb1.steiner_term);
      for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
        SweepRow row{trial, seed, q, cfg.algorithms[a], std::nullopt, lb, built[a].error, built[a].ms};
        if (built[a].tree) {
          row.cost = tree_cost(*built[a].tree, net, params);
        } else if (built[a].route) {
          row.cost = cnd_cost(*built[a].route, make_cnd_instance(net, params, params.per_packet()));
        }
        result.rows.push_back(std::move(row));
      }
    }
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
      if (!built[a].error.empty()) {
        result.log.push_back("trial " + std::to_string(trial) + ": " + cfg.algorithms[a] +
                             " failed: " + built[a].error);
      }
    }
  }
  std::stable_sort(result.rows.begin(), result.rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.trial, a.q, a.algorithm) < std::tie(b.trial, b.q, b.algorithm);
  });

  std::map<std::pair<std::int64_t, std::string>, SweepMean> sums;
  for (const auto& row : result.rows) {
    if (!row.cost) continue;
    auto& m = sums[{row.q, row.algorithm}];
    m.q = row.q;
    m.algorithm = row.algorithm;
    ++m.trials;
    m.mean_cost += *row.cost;
    m.mean_lower_bound += row.lower_bound;
  }
  for (auto& [key, m] : sums) {
    m.mean_cost /= m.trials;
    m.mean_lower_bound /= m.trials;
    result.means.push_back(m);
  }
  return result;
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

std::string rows_csv(const SweepResult& result, bool timing) {
  std::ostringstream out;
  out << "trial,seed,q,algorithm,cost,lower_bound,status";
  if (timing) out << ",runtime_ms";
  out << '\n';
  for (const auto& row : result.rows) {
    out << row.trial << ',' << row.seed << ',' << row.q << ',' << row.algorithm << ','
        << (row.cost ? format_decimal(*row.cost, 4) : std::string()) << ','
        << format_decimal(row.lower_bound, 4) << ','
        << (row.cost ? std::string("ok") : csv_field("failed: " + row.error));
    if (timing) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(3);
      ms << row.runtime_ms;
      out << ',' << ms.str();
    }
    out << '\n';
  }
  return out.str();
}

std::string means_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "q,algorithm,trials,mean_cost,mean_lower_bound\n";
  for (const auto& m : result.means) {
    out << m.q << ',' << m.algorithm << ',' << m.trials << ',' << format_decimal(m.mean_cost, 4) << ','
        << format_decimal(m.mean_lower_bound, 4) << '\n';
  }
  return out.str();
}

}  // namespace aggtree
