#include "aggtree/algorithms.hpp"

#include <algorithm>

#include "aggtree/errors.hpp"
#include "aggtree/rng.hpp"
#include "aggtree/tree_builders.hpp"

namespace aggtree {

namespace {

void require_no_relays(const Network& net) {
  if (net.has_relays()) throw InvalidInput("network has relay nodes; use MECAT_RN solvers");
}

}  // namespace

RoutingTree solve_mecat_spt(const Network& net, const CostParams& params) {
  params.validate();
  require_no_relays(net);
  return spanning_shortest_path_tree(net, net.sink());
}

RoutingTree spt_in_route_union(const Network& net, const CndRoute& route) {
  std::vector<Edge> used;
  for (const auto& [u, path] : route.paths) {
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (!net.has_edge(path[i - 1], path[i])) throw InvalidInput("invalid route: non-edge in path");
      used.push_back(make_edge(path[i - 1], path[i]));
    }
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  SimpleGraph sub(net.node_count(), std::move(used));
  return shortest_path_tree(sub, net.sink(), net.sources());
}

RoutingTree solve_mecat_rn_alg2(const Network& net, const CostParams& params) {
  params.validate();
  auto inst = make_cnd_instance(net, params, Rational(1));
  return spt_in_route_union(net, salman_route(inst));
}

RoutingTree solve_mecat_rn_alg3(const Network& net, const CostParams& params, const CndSolver& solver) {
  params.validate();
  auto inst = make_cnd_instance(net, params, params.per_packet());
  auto route = solver.solve(inst);
  validate_route(route, inst);
  return spt_in_route_union(net, route);
}

RoutingTree solve_spanning_baseline(const Network& net, const CostParams& params, std::uint64_t seed) {
  params.validate();
  require_no_relays(net);
  Rng rng(seed);
  const int n = net.node_count();
  RoutingTree tree(n, net.sink());
  std::vector<char> seen(n, 0);
  // iterative DFS; each node's remaining neighbors are shuffled on entry
  struct Frame {
    NodeId node;
    std::vector<NodeId> order;
    std::size_t next = 0;
  };
  auto enter = [&](NodeId v) {
    seen[v] = 1;
    auto nbrs = net.neighbors(v);
    Frame frame{v, std::vector<NodeId>(nbrs.begin(), nbrs.end())};
    rng.shuffle(frame.order);
    return frame;
  };
  std::vector<Frame> stack;
  stack.push_back(enter(net.sink()));
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.order.size()) {
      stack.pop_back();
      continue;
    }
    NodeId w = top.order[top.next++];
    if (seen[w]) continue;
    tree.attach(w, top.node);
    stack.push_back(enter(w));
  }
  return tree;
}

RoutingTree solve_steiner_routing(const Network& net) {
  return steiner_tree_2approx(net, net.sources(), net.sink());
}

RoutingTree solve_source_spt(const Network& net) {
  return shortest_path_tree(net, net.sink(), net.sources());
}

std::vector<std::string> algorithm_names() { return {"spt", "spanning", "steiner", "alg2", "alg3"}; }

RoutingTree solve_by_name(const std::string& algorithm, const Network& net, const CostParams& params,
                          const std::string& cnd_solver, std::uint64_t seed) {
  if (algorithm == "spt") {
    return net.has_relays() ? solve_source_spt(net) : solve_mecat_spt(net, params);
  }
  if (algorithm == "spanning") return solve_spanning_baseline(net, params, seed);
  if (algorithm == "steiner") return solve_steiner_routing(net);
  if (algorithm == "alg2") return solve_mecat_rn_alg2(net, params);
  if (algorithm == "alg3") return solve_mecat_rn_alg3(net, params, default_cnd_solvers().get(cnd_solver));
  throw InvalidInput("unknown algorithm '" + algorithm + "'");
}

}  // namespace aggtree
