#include "aggtree/rgg.hpp"

#include <vector>

#include "aggtree/errors.hpp"
#include "aggtree/rng.hpp"

namespace aggtree {

void RggConfig::validate() const {
  if (n < 2) throw InvalidInput("n must be >= 2");
  if (!(field > 0)) throw InvalidInput("field must be > 0");
  if (!(range > 0)) throw InvalidInput("range must be > 0");
  if (!(relay_prob >= 0 && relay_prob < 1)) throw InvalidInput("relay_prob must be in [0, 1)");
}

namespace {

std::optional<Network> draw(const RggConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> pos(cfg.n);
  pos[0] = cfg.sink_at;
  for (int v = 1; v < cfg.n; ++v) {
    double x = rng.unit() * cfg.field;
    double y = rng.unit() * cfg.field;
    pos[v] = {x, y};
  }
  std::vector<char> relay(cfg.n, 0);
  for (int v = 1; v < cfg.n; ++v) {
    bool coin = rng.bernoulli(cfg.relay_prob);
    relay[v] = cfg.relays && coin;
  }
  std::vector<std::int64_t> sizes(cfg.n, 0);
  for (int v = 1; v < cfg.n; ++v) {
    std::int64_t s = cfg.size_mode == SizeMode::uniform ? 1 : rng.uniform_int(1, 5);
    if (!relay[v]) sizes[v] = s;
  }
  const double r2 = cfg.range * cfg.range;
  std::vector<Edge> edges;
  for (int a = 0; a < cfg.n; ++a) {
    for (int b = a + 1; b < cfg.n; ++b) {
      double dx = pos[a].x - pos[b].x;
      double dy = pos[a].y - pos[b].y;
      double d2 = dx * dx + dy * dy;
      if (d2 <= r2) edges.push_back({a, b});
    }
  }
  SimpleGraph graph(cfg.n, edges);
  if (!graph.connected()) return std::nullopt;
  // A draw where every node became a relay has nothing to aggregate.
  bool any_source = false;
  for (auto s : sizes) any_source = any_source || s > 0;
  if (!any_source) return std::nullopt;
  return Network(cfg.n, std::move(edges), std::move(sizes), 0, std::move(pos));
}

}  // namespace

RggResult generate_rgg(const RggConfig& cfg) {
  cfg.validate();
  for (std::uint64_t offset = 0; offset < 1000; ++offset) {
    if (auto net = draw(cfg, cfg.seed + offset)) return {std::move(*net), offset};
  }
  throw Error("generation failed; lower n or raise range");
}

}  // namespace aggtree
