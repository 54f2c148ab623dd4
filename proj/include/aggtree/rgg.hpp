#pragma once

#include <cstdint>

#include "aggtree/network.hpp"

namespace aggtree {

enum class SizeMode { uniform, nonuniform };

struct RggConfig {
  int n = 100;  // the sink counts among the n nodes
  double field = 100.0;
  double range = 20.0;
  Point sink_at{50.0, 50.0};
  double relay_prob = 0.3;
  bool relays = false;  // MECAT_RN mode; relay_prob is ignored otherwise
  SizeMode size_mode = SizeMode::uniform;
  std::uint64_t seed = 1;

  void validate() const;
};

struct RggResult {
  Network net;
  /// Added to cfg.seed to get the draw that was connected (0 if the first was).
  std::uint64_t seed_offset = 0;
};

/// Sink is node 0 at sink_at. Every draw takes positions for nodes 1..n-1,
/// then one role coin per node, then one size per node, all from one
/// stream; the role coin is drawn even without relays so both modes see the
/// same geometry for a seed. Disconnected draws retry with seed+1, seed+2,
/// ... and give up after 1000 attempts.
RggResult generate_rgg(const RggConfig& cfg);

}  // namespace aggtree
