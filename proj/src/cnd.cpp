#include "aggtree/cnd.hpp"

#include <algorithm>
#include <string>

#include "aggtree/errors.hpp"

namespace aggtree {

void CndInstance::validate() const {
  const int n = graph.node_count();
  if (capacity < 1) throw InvalidInput("facility capacity must be >= 1");
  if (sink < 0 || sink >= n) throw InvalidInput("sink out of range");
  if (static_cast<int>(demand.size()) != n) throw InvalidInput("demand vector size mismatch");
  for (NodeId u : sources) {
    if (u < 0 || u >= n) throw InvalidInput("source out of range");
    if (u == sink) throw InvalidInput("sink cannot be a source");
    if (demand[u] <= 0) throw InvalidInput("source demands must be positive");
  }
}

CndInstance make_cnd_instance(const Network& net, const CostParams& params, const Rational& edge_length) {
  params.validate();
  CndInstance inst{with_uniform_length(net.graph(), edge_length), net.sources(), net.report_sizes(),
                   net.sink(), params.q};
  inst.validate();
  return inst;
}

void validate_route(const CndRoute& route, const CndInstance& inst) {
  auto fail = [](const std::string& why) { throw InvalidInput("invalid route: " + why); };
  if (route.paths.size() != inst.sources.size()) fail("path count differs from source count");
  std::vector<char> on_path(inst.graph.node_count(), 0);
  for (NodeId u : inst.sources) {
    auto it = route.paths.find(u);
    if (it == route.paths.end()) fail("no path for source " + std::to_string(u));
    const Path& path = it->second;
    if (path.empty() || path.front() != u || path.back() != inst.sink) {
      fail("path of source " + std::to_string(u) + " does not run from source to sink");
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      NodeId v = path[i];
      if (v < 0 || v >= inst.graph.node_count()) fail("node out of range");
      if (on_path[v]) fail("path of source " + std::to_string(u) + " repeats node " + std::to_string(v));
      on_path[v] = 1;
      if (i > 0 && !inst.graph.weight(path[i - 1], v)) {
        fail("non-edge " + std::to_string(path[i - 1]) + "-" + std::to_string(v));
      }
    }
    for (NodeId v : path) on_path[v] = 0;
  }
}

std::map<Edge, std::int64_t> edge_demands(const CndRoute& route, const CndInstance& inst) {
  validate_route(route, inst);
  std::map<Edge, std::int64_t> load;
  for (const auto& [u, path] : route.paths) {
    for (std::size_t i = 1; i < path.size(); ++i) load[make_edge(path[i - 1], path[i])] += inst.demand[u];
  }
  return load;
}

CndCost cnd_cost_breakdown(const CndRoute& route, const CndInstance& inst) {
  inst.validate();
  auto load = edge_demands(route, inst);
  CndCost cost;
  cost.total = 0;
  cost.path_term = 0;
  cost.rounding_term = 0;
  const Rational q(inst.capacity);
  for (const auto& [edge, demand] : load) {
    Rational length = *inst.graph.weight(edge.u, edge.v);
    std::int64_t facilities = ceil_div(demand, inst.capacity);
    cost.facilities[edge] = facilities;
    cost.total += Rational(facilities) * length;
    Rational z = Rational(demand) / q;
    cost.rounding_term += (Rational(facilities) - z) * length;
  }
  for (const auto& [u, path] : route.paths) {
    cost.path_term += Rational(inst.demand[u]) / q * path_length(inst.graph, path);
  }
  if (cost.total != cost.path_term + cost.rounding_term) {
    throw InternalError("facility cost decomposition mismatch");
  }
  return cost;
}

Rational cnd_cost(const CndRoute& route, const CndInstance& inst) {
  return cnd_cost_breakdown(route, inst).total;
}

Path erase_loops(const Path& walk) {
  Path out;
  for (NodeId v : walk) {
    auto it = std::find(out.begin(), out.end(), v);
    if (it != out.end()) {
      out.erase(it + 1, out.end());
    } else {
      out.push_back(v);
    }
  }
  return out;
}

CndRoute salman_route(const CndInstance& inst, const LastParams& last) {
  inst.validate();
  CndRoute route;
  if (inst.sources.empty()) return route;
  std::vector<NodeId> terminals = inst.sources;
  terminals.push_back(inst.sink);
  auto closure = metric_closure(inst.graph, terminals);
  int root = closure.index_of(inst.sink);
  auto tree = last_tree(closure.graph(), root, last);
  auto to_sink = shortest_distances(inst.graph, inst.sink);

  for (NodeId u : inst.sources) {
    auto hops = tree.path_to_root(closure.index_of(u));
    Path walk{u};
    for (std::size_t i = 1; i < hops.size(); ++i) {
      const Path& piece = closure.witness(hops[i - 1], hops[i]);
      walk.insert(walk.end(), piece.begin() + 1, piece.end());
    }
    Path path = erase_loops(walk);
    if (path_length(inst.graph, path) > last.alpha * to_sink[u]) {
      throw InternalError("LAST invariant violated: route of source " + std::to_string(u) + " too long");
    }
    route.paths.emplace(u, std::move(path));
  }
  return route;
}

CndRoute shortest_paths_route(const CndInstance& inst) {
  inst.validate();
  auto to_sink = shortest_distances(inst.graph, inst.sink);
  CndRoute route;
  for (NodeId u : inst.sources) {
    route.paths.emplace(u, lexicographic_shortest_path(inst.graph, u, inst.sink, to_sink));
  }
  return route;
}

CndRoute route_from_tree(const RoutingTree& tree, const CndInstance& inst) {
  if (tree.root() != inst.sink) throw InvalidInput("tree is not rooted at the sink");
  CndRoute route;
  for (NodeId u : inst.sources) {
    if (!tree.is_member(u)) throw MalformedTree("source " + std::to_string(u) + " is not in the tree");
    Path path{u};
    for (NodeId v = u; v != tree.root();) {
      v = tree.parent(v);
      if (v == kNoNode || static_cast<int>(path.size()) > tree.node_count()) throw MalformedTree();
      path.push_back(v);
    }
    route.paths.emplace(u, std::move(path));
  }
  return route;
}

void CndSolverRegistry::add(std::unique_ptr<CndSolver> solver) {
  auto name = solver->name();
  solvers_[name] = std::move(solver);
}

const CndSolver& CndSolverRegistry::get(const std::string& name) const {
  auto it = solvers_.find(name);
  if (it == solvers_.end()) throw InvalidInput("unknown CND solver '" + name + "'");
  return *it->second;
}

std::vector<std::string> CndSolverRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, solver] : solvers_) out.push_back(name);
  return out;
}

const CndSolverRegistry& default_cnd_solvers() {
  static const CndSolverRegistry registry = [] {
    CndSolverRegistry r;
    r.add(std::make_unique<SalmanSolver>());
    r.add(std::make_unique<ShortestPathsSolver>());
    return r;
  }();
  return registry;
}

}  // namespace aggtree
