#pragma once

// Fixtures, random instance generators and independent oracles shared by
// the test binaries. Nothing here calls the library's own oracles.

#include <cstdint>
#include <vector>

#include "aggtree/cost_model.hpp"
#include "aggtree/network.hpp"
#include "aggtree/rng.hpp"

namespace testsupport {

using namespace aggtree;

// ---- fixtures ----------------------------------------------------------

/// The routing-tree example: sink 0, nodes 1..7, q = 3, Tx = Rx = 1.
/// Report sizes chosen so the tree below sends 3,2,2,1,1,1,1 packets.
Network example1_network();
CostParams example1_params();
RoutingTree example1_tree();          // 6 under 7
RoutingTree example1_tree_variant();  // 6 under 2

/// Sink 0; sources 1 (s=9) and 2 (s=7) next to it, 3 and 4 (s=1) forming a
/// detour 1-3-4-2. q = 9. The SPT costs 10 while 3 -> 4 -> 2 costs 8.
Network non_spt_optimal_network();
CostParams non_spt_optimal_params();

/// Six-node relay example, label k mapped to id k-1: edges 1-2, 2-3,
/// 3-4, 4-5, 4-6, 6-1 by label; node 6 (id 5) is the relay, every
/// source has s = 1, q = 5.
Network fig5_network();
CostParams fig5_params();

// ---- generators --------------------------------------------------------

/// Random connected graph on n nodes: a random recursive tree plus each
/// other pair with probability `extra`.
SimpleGraph random_connected_graph(Rng& rng, int n, double extra);

/// Sink 0, sizes uniform in 1..max_size, non-sink nodes relays with
/// probability relay_prob (at least one source is kept).
Network random_network(Rng& rng, int n, double extra, std::int64_t max_size, double relay_prob = 0.0);

/// Random tree over all nodes (or sources plus some relays) of `net`,
/// rooted at the sink, following network edges: a random-order BFS.
RoutingTree random_tree(Rng& rng, const Network& net);

/// Connected weighted graph with integer weights in 1..max_w.
WeightedGraph random_weighted_graph(Rng& rng, int n, double extra, std::int64_t max_w);

// ---- independent oracles -----------------------------------------------

/// Minimum spanning tree weight by trying every (n-1)-edge subset.
Rational min_spanning_weight_by_enumeration(const WeightedGraph& g);

/// Kirchhoff's theorem: number of spanning trees (= sink-rooted spanning
/// arborescences of the bidirected graph), by a fraction-free determinant.
std::uint64_t kirchhoff_count(const SimpleGraph& g);

/// BFS written out independently of the library.
std::vector<int> reference_hops(const SimpleGraph& g, NodeId from);

/// Packet count of a tree recomputed from scratch: walk every source's
/// report up to the root and count ceil(load / q) per member.
std::int64_t reference_packets(const RoutingTree& tree, const Network& net, std::int64_t q);

}  // namespace testsupport
