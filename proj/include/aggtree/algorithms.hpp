#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aggtree/cnd.hpp"
#include "aggtree/cost_model.hpp"
#include "aggtree/network.hpp"

namespace aggtree {

/// MECAT (no relays): hop shortest-path tree over every node. Less than
/// twice the optimum cost. Throws InvalidInput if the network has relays.
RoutingTree solve_mecat_spt(const Network& net, const CostParams& params);

/// MECAT_RN: Salman routing on hop lengths, then a shortest-path tree inside
/// the union of the routes. At most 7 times the optimum.
RoutingTree solve_mecat_rn_alg2(const Network& net, const CostParams& params);

/// MECAT_RN from any CND solver: every edge gets length Tx + Rx, the solver
/// routes the sources, and a shortest-path tree is taken inside the union
/// of its paths. Less than 2*lambda times the optimum for a lambda-solver.
RoutingTree solve_mecat_rn_alg3(const Network& net, const CostParams& params, const CndSolver& solver);

/// Shortest-path tree rooted at the sink, spanning the sources, restricted
/// to the nodes and edges used by `route`.
RoutingTree spt_in_route_union(const Network& net, const CndRoute& route);

/// Randomized DFS spanning tree rooted at the sink; neighbor order is a
/// seeded shuffle. Throws InvalidInput if the network has relays.
RoutingTree solve_spanning_baseline(const Network& net, const CostParams& params, std::uint64_t seed);

/// Steiner-tree routing: the 2-approximate Steiner tree over sources and sink.
RoutingTree solve_steiner_routing(const Network& net);

/// Hop shortest-path tree restricted to the parent chains of the sources.
RoutingTree solve_source_spt(const Network& net);

/// Names accepted by `solve_by_name`.
std::vector<std::string> algorithm_names();

/// "spt" picks the full SPT without relays and the source-spanning SPT
/// with them; "alg3" uses `cnd_solver` from the default registry.
RoutingTree solve_by_name(const std::string& algorithm, const Network& net, const CostParams& params,
                          const std::string& cnd_solver = "salman", std::uint64_t seed = 0);

}  // namespace aggtree
