#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aggtree/cost_model.hpp"
#include "aggtree/graph_algos.hpp"
#include "aggtree/network.hpp"
#include "aggtree/tree_builders.hpp"

namespace aggtree {

/// Single-sink capacitated network design: route every source's demand to
/// the sink; each edge pays ceil(load / capacity) facilities times its length.
struct CndInstance {
  WeightedGraph graph;
  std::vector<NodeId> sources;      // ascending
  std::vector<std::int64_t> demand; // per node, 0 for non-sources
  NodeId sink = kNoNode;
  std::int64_t capacity = 1;

  void validate() const;
};

/// Lengths all equal `edge_length`, demand s(u), capacity q.
CndInstance make_cnd_instance(const Network& net, const CostParams& params, const Rational& edge_length);

/// One path per source, source first, sink last. Need not form a tree.
struct CndRoute {
  std::map<NodeId, Path> paths;
};

/// Throws InvalidInput("invalid route") unless every source has a simple
/// path to the sink over graph edges.
void validate_route(const CndRoute& route, const CndInstance& inst);

/// Sum of s(u) over the paths crossing each edge.
std::map<Edge, std::int64_t> edge_demands(const CndRoute& route, const CndInstance& inst);

struct CndCost {
  Rational total;          // sum_e ceil(demand(e)/q) * l(e)
  Rational path_term;      // sum_u s(u)/q * l(P_u)
  Rational rounding_term;  // sum_e (ceil(z(e)) - z(e)) * l(e),  z(e) = demand(e)/q
  std::map<Edge, std::int64_t> facilities;
};

/// Computes the facility cost directly and through the per-path
/// decomposition; throws InternalError if the two disagree.
CndCost cnd_cost_breakdown(const CndRoute& route, const CndInstance& inst);
Rational cnd_cost(const CndRoute& route, const CndInstance& inst);

/// Salman et al.'s routing: (3,2)-LAST over the metric closure of the
/// sources and the sink, each source's LAST path expanded through witness
/// shortest paths (loops erased). Every path is checked to be at most alpha
/// times the source's shortest distance.
CndRoute salman_route(const CndInstance& inst, const LastParams& last = {});

/// Every source on its own lexicographically smallest shortest path.
CndRoute shortest_paths_route(const CndInstance& inst);

/// Each source's path to the root of a routing tree.
CndRoute route_from_tree(const RoutingTree& tree, const CndInstance& inst);

/// Removes cycles from a walk, keeping the first visit of every node.
Path erase_loops(const Path& walk);

class CndSolver {
 public:
  virtual ~CndSolver() = default;
  virtual std::string name() const = 0;
  /// Proven approximation factor, if any.
  virtual std::optional<Rational> approximation_factor() const = 0;
  virtual CndRoute solve(const CndInstance& inst) const = 0;
};

class SalmanSolver final : public CndSolver {
 public:
  std::string name() const override { return "salman"; }
  std::optional<Rational> approximation_factor() const override { return Rational(7); }
  CndRoute solve(const CndInstance& inst) const override { return salman_route(inst); }
};

class ShortestPathsSolver final : public CndSolver {
 public:
  std::string name() const override { return "sp-only"; }
  std::optional<Rational> approximation_factor() const override { return std::nullopt; }
  CndRoute solve(const CndInstance& inst) const override { return shortest_paths_route(inst); }
};

/// Name -> solver table. Fill it before sharing it between threads.
class CndSolverRegistry {
 public:
  void add(std::unique_ptr<CndSolver> solver);
  /// Throws InvalidInput for unknown names.
  const CndSolver& get(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, std::unique_ptr<CndSolver>> solvers_;
};

/// "salman" and "sp-only".
const CndSolverRegistry& default_cnd_solvers();

}  // namespace aggtree
