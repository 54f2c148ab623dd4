#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aggtree/cnd.hpp"
#include "aggtree/cost_model.hpp"
#include "aggtree/network.hpp"

namespace aggtree {

/// `fallback` unless AGGTREE_ORACLE_CAP holds a positive integer.
int oracle_cap(int fallback);

inline constexpr int kMecatOracleCap = 9;
inline constexpr int kMecatRnOracleCap = 10;
inline constexpr int kExactSolverCap = 16;

struct OracleResult {
  RoutingTree tree;
  Rational cost;
  std::int64_t packets = 0;
  std::uint64_t trees_examined = 0;
};

/// Minimum-cost tree spanning every node, by enumerating the sink-rooted
/// spanning arborescences (parent choice with acyclicity and cost-bound
/// pruning). First minimum in enumeration order wins. Throws OracleLimit
/// above `cap` nodes.
OracleResult brute_force_mecat(const Network& net, const CostParams& params,
                               std::optional<int> cap = std::nullopt);

/// Minimum-cost tree over sources and sink with any subset of relays: every
/// relay subset is solved by enumeration on the induced subgraph.
/// Idle relays are pruned from the returned tree.
OracleResult brute_force_mecat_rn(const Network& net, const CostParams& params,
                                  std::optional<int> cap = std::nullopt);

/// Same optimum as brute_force_mecat_rn by a different route: relay leaves
/// are dropped, relay chains become long edges, source leaves are folded
/// into their neighbor, and a subset dynamic program over the remaining
/// nodes finds the best tree. `cap` bounds the reduced node count.
OracleResult exact_mecat_rn(const Network& net, const CostParams& params,
                            std::optional<int> cap = std::nullopt);

/// Number of spanning arborescences rooted at `root` (unpruned enumeration).
std::uint64_t count_spanning_arborescences(const SimpleGraph& graph, NodeId root);

struct LowerBound {
  Rational routing_term;           // (Tx+Rx) * sum_u s(u)/q * hop(u, r)
  Rational steiner_term;           // (Tx+Rx) * max(|E_ST|/2, |U|)
  std::size_t steiner_tree_edges;  // |E_ST| of the 2-approximate Steiner tree
  Rational value;                  // max of the two terms
};

LowerBound lower_bound_terms(const Network& net, const CostParams& params);
Rational lower_bound(const Network& net, const CostParams& params);

/// Fewest edges of any tree in `graph` connecting `terminals`.
int brute_force_steiner_edges(const SimpleGraph& graph, std::span<const NodeId> terminals);
/// Least total length of any tree in `graph` connecting `terminals`.
Rational brute_force_steiner_length(const WeightedGraph& graph, std::span<const NodeId> terminals);

struct CndOracleResult {
  CndRoute route;
  Rational cost;
};

/// Exhaustive CND optimum over all simple source-to-sink paths. Throws
/// OracleLimit if any source has more than `path_limit` simple paths.
CndOracleResult brute_force_cnd(const CndInstance& inst, std::size_t path_limit = 2000);

}  // namespace aggtree
