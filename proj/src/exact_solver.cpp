// Exact MECAT / MECAT_RN optimum by graph reduction plus a subset dynamic
// program. Kept separate from the enumeration oracle so the two can check
// each other.

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "aggtree/errors.hpp"
#include "aggtree/oracle.hpp"

namespace aggtree {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

/// A surviving edge of the reduced graph; `interior` lists the contracted
/// relays in order from edge.u to edge.v.
struct Link {
  std::int64_t length = 1;
  std::vector<NodeId> interior;
};

struct Fold {
  NodeId leaf;
  NodeId parent;
  std::vector<NodeId> interior;  // from leaf toward parent
};

class ReducedInstance {
 public:
  ReducedInstance(const Network& net, std::int64_t q) : q_(q), sink_(net.sink()) {
    const int n = net.node_count();
    alive_.assign(n, 1);
    load_ = net.report_sizes();
    adjacency_.resize(n);
    for (const auto& e : net.edges()) {
      links_[e] = Link{};
      adjacency_[e.u].insert(e.v);
      adjacency_[e.v].insert(e.u);
    }
    reduce();
  }

  std::vector<NodeId> alive_nodes() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < static_cast<NodeId>(alive_.size()); ++v) {
      if (alive_[v]) out.push_back(v);
    }
    return out;
  }
  std::int64_t load(NodeId v) const { return load_[v]; }
  const std::map<Edge, Link>& links() const { return links_; }
  const std::vector<Fold>& folds() const { return folds_; }
  std::int64_t constant_packets() const { return constant_; }

  /// Interior relays ordered from `from` to `to`.
  std::vector<NodeId> interior(NodeId from, NodeId to) const {
    const Link& link = links_.at(make_edge(from, to));
    if (from < to) return link.interior;
    return {link.interior.rbegin(), link.interior.rend()};
  }

 private:
  void remove_node(NodeId v) {
    for (NodeId w : adjacency_[v]) {
      adjacency_[w].erase(v);
      links_.erase(make_edge(v, w));
    }
    adjacency_[v].clear();
    alive_[v] = 0;
  }

  void reduce() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (NodeId v = 0; v < static_cast<NodeId>(alive_.size()); ++v) {
        if (!alive_[v] || v == sink_) continue;
        const std::size_t degree = adjacency_[v].size();
        if (load_[v] == 0 && degree <= 1) {
          remove_node(v);
          changed = true;
        } else if (load_[v] == 0 && degree == 2) {
          NodeId a = *adjacency_[v].begin();
          NodeId b = *std::next(adjacency_[v].begin());
          auto left = interior(a, v);
          auto right = interior(v, b);
          Link merged;
          merged.length = links_.at(make_edge(a, v)).length + links_.at(make_edge(v, b)).length;
          merged.interior = std::move(left);
          merged.interior.push_back(v);
          merged.interior.insert(merged.interior.end(), right.begin(), right.end());
          if (a > b) std::reverse(merged.interior.begin(), merged.interior.end());
          remove_node(v);
          auto existing = links_.find(make_edge(a, b));
          if (existing == links_.end()) {
            links_[make_edge(a, b)] = std::move(merged);
            adjacency_[a].insert(b);
            adjacency_[b].insert(a);
          } else if (merged.length < existing->second.length) {
            existing->second = std::move(merged);
          }
          changed = true;
        } else if (load_[v] > 0 && degree == 1) {
          NodeId p = *adjacency_[v].begin();
          const Link& link = links_.at(make_edge(v, p));
          constant_ += link.length * ceil_div(load_[v], q_);
          folds_.push_back({v, p, interior(v, p)});
          load_[p] += load_[v];
          remove_node(v);
          changed = true;
        }
      }
    }
  }

  std::int64_t q_;
  NodeId sink_;
  std::vector<char> alive_;
  std::vector<std::int64_t> load_;
  std::vector<std::set<NodeId>> adjacency_;
  std::map<Edge, Link> links_;
  std::vector<Fold> folds_;
  std::int64_t constant_ = 0;
};

void attach_chain(RoutingTree& tree, NodeId from, const std::vector<NodeId>& interior, NodeId to) {
  NodeId current = from;
  for (NodeId relay : interior) {
    tree.attach(current, relay);
    current = relay;
  }
  tree.attach(current, to);
}

}  // namespace

OracleResult exact_mecat_rn(const Network& net, const CostParams& params, std::optional<int> cap) {
  params.validate();
  ReducedInstance reduced(net, params.q);
  const auto nodes = reduced.alive_nodes();
  const int k = static_cast<int>(nodes.size());
  if (k > cap.value_or(oracle_cap(kExactSolverCap)) || k > 24) throw OracleLimit();

  std::map<NodeId, int> index;
  for (int i = 0; i < k; ++i) index[nodes[i]] = i;
  const int root = index.at(net.sink());
  std::vector<std::int64_t> length(k * k, 0);
  for (const auto& [edge, link] : reduced.links()) {
    int a = index.at(edge.u), b = index.at(edge.v);
    length[a * k + b] = length[b * k + a] = link.length;
  }
  std::uint32_t required = 1u << root;
  for (int i = 0; i < k; ++i) {
    if (reduced.load(nodes[i]) > 0) required |= 1u << i;
  }

  const std::uint32_t full = 1u << k;
  std::vector<std::int64_t> sum(full, 0);
  for (std::uint32_t s = 1; s < full; ++s) {
    int low = __builtin_ctz(s);
    sum[s] = sum[s & (s - 1)] + (low == root ? 0 : reduced.load(nodes[low]));
  }
  // best[S*k+v]: cheapest tree on exactly S rooted at v, v's own sends excluded.
  // hang[T*k+v]: cheapest way to hang a tree on T below v (v not in T).
  std::vector<std::int64_t> best(static_cast<std::size_t>(full) * k, kInf);
  std::vector<std::int64_t> hang(static_cast<std::size_t>(full) * k, kInf);
  std::vector<std::uint32_t> split(static_cast<std::size_t>(full) * k, 0);
  std::vector<int> via(static_cast<std::size_t>(full) * k, -1);

  for (std::uint32_t s = 1; s < full; ++s) {
    for (int v = 0; v < k; ++v) {
      if (!(s >> v & 1)) continue;
      std::size_t at = static_cast<std::size_t>(s) * k + v;
      std::uint32_t rest = s ^ (1u << v);
      if (rest == 0) {
        best[at] = 0;
        continue;
      }
      std::uint32_t low = rest & (~rest + 1);
      std::uint32_t others = rest ^ low;
      for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
        std::uint32_t t = sub | low;
        std::int64_t below = hang[static_cast<std::size_t>(t) * k + v];
        if (below < kInf) {
          std::int64_t remain = best[static_cast<std::size_t>(s ^ t) * k + v];
          if (remain < kInf && below + remain < best[at]) {
            best[at] = below + remain;
            split[at] = t;
          }
        }
        if (sub == 0) break;
      }
    }
    if (s >> root & 1) continue;  // nothing hangs a subtree that contains the sink
    const std::int64_t sends = ceil_div(sum[s], params.q);
    for (int v = 0; v < k; ++v) {
      if (s >> v & 1) continue;
      std::size_t at = static_cast<std::size_t>(s) * k + v;
      for (int c = 0; c < k; ++c) {
        if (!(s >> c & 1) || length[c * k + v] == 0) continue;
        std::int64_t inner = best[static_cast<std::size_t>(s) * k + c];
        if (inner >= kInf) continue;
        std::int64_t total = inner + length[c * k + v] * sends;
        if (total < hang[at]) {
          hang[at] = total;
          via[at] = c;
        }
      }
    }
  }

  std::int64_t optimum = kInf;
  std::uint32_t chosen = 0;
  for (std::uint32_t s = required; s < full; s = (s + 1) | required) {
    std::int64_t value = best[static_cast<std::size_t>(s) * k + root];
    if (value < optimum) {
      optimum = value;
      chosen = s;
    }
  }
  if (optimum >= kInf) throw InternalError("exact solver found no feasible tree");

  RoutingTree tree(net.node_count(), net.sink());
  auto rebuild = [&](auto&& self, std::uint32_t s, int v) -> void {
    std::size_t at = static_cast<std::size_t>(s) * k + v;
    if ((s ^ (1u << v)) == 0) return;
    std::uint32_t t = split[at];
    int c = via[static_cast<std::size_t>(t) * k + v];
    attach_chain(tree, nodes[c], reduced.interior(nodes[c], nodes[v]), nodes[v]);
    self(self, t, c);
    self(self, s ^ t, v);
  };
  rebuild(rebuild, chosen, root);
  const auto& folds = reduced.folds();
  for (auto it = folds.rbegin(); it != folds.rend(); ++it) attach_chain(tree, it->leaf, it->interior, it->parent);

  OracleResult result;
  result.tree = prune_idle_relays(tree, net);
  result.packets = optimum + reduced.constant_packets();
  result.cost = params.per_packet() * Rational(result.packets);
  if (tree_cost(result.tree, net, params) != result.cost) {
    throw InternalError("exact solver tree does not reproduce its cost");
  }
  return result;
}

}  // namespace aggtree
