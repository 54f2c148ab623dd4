#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aggtree/rational.hpp"
#include "aggtree/rgg.hpp"

namespace aggtree {

struct SweepConfig {
  std::vector<std::int64_t> q_values;   // empty: 2,4,..,50 (uniform) or 2,4,..,100
  int trials = 30;
  std::vector<std::string> algorithms;  // empty: sweep_algorithms(relay mode)
  std::uint64_t base_seed = 1;
  Rational tx{2};                       // simulation defaults: Tx = 2, Rx = 1
  Rational rx{1};
  bool timing = false;                  // adds runtime_ms; output is then not reproducible

  void validate() const;
};

/// Default q list for the size mode.
std::vector<std::int64_t> default_q_values(SizeMode mode);

/// Without relays: spt, spanning. With relays: spt, steiner, alg2,
/// alg3:salman, alg3:sp-only, route:sp-only (the non-tree route itself,
/// costed as a CND solution with lengths Tx+Rx).
std::vector<std::string> sweep_algorithms(bool relays);

struct SweepRow {
  int trial = 0;
  std::uint64_t seed = 0;        // seed of the network actually used
  std::int64_t q = 0;
  std::string algorithm;
  std::optional<Rational> cost;  // empty when the solver failed
  Rational lower_bound;
  std::string error;
  double runtime_ms = 0;         // time to build the structure, shared by all q
};

struct SweepMean {
  std::int64_t q = 0;
  std::string algorithm;
  int trials = 0;                // successful rows
  Rational mean_cost;
  Rational mean_lower_bound;
};

struct SweepResult {
  std::vector<SweepRow> rows;    // sorted by (trial, q, algorithm)
  std::vector<SweepMean> means;  // sorted by (q, algorithm)
  std::vector<std::string> log;  // connectivity retries and failures
};

/// Trial t draws its network with seed base_seed + 1000 t (plus any retry
/// offset, always below 1000). Every algorithm builds its structure once per
/// trial, since none depends on q, and is then costed at every q.
SweepResult run_sweep(const SweepConfig& cfg, const RggConfig& rgg);

std::string rows_csv(const SweepResult& result, bool timing);
std::string means_csv(const SweepResult& result);

}  // namespace aggtree
