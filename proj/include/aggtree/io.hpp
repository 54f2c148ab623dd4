#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "aggtree/cost_model.hpp"
#include "aggtree/gadgets.hpp"
#include "aggtree/network.hpp"

namespace aggtree {

// Line-based text formats; '#' starts a comment, blank lines are ignored.
//
//   net <n>
//   param q <int> tx <num> rx <num> [budget <num>]
//   node <id> <s> <source|relay|sink> [<x> <y>]
//   edge <u> <v>
//
//   root <id>
//   parent <child> <parent>
//
//   lbsm <left> <right> <k>        ds <n> <k>
//   weight <i> <w>                 edge <u> <v>
//   edge <i> <j>
//
// Nodes without a `node` line are relays. Numbers accept "3", "3/2", "1.5".

struct NetworkFile {
  Network net;
  std::optional<CostParams> params;
};

NetworkFile parse_network(std::string_view text);
std::string format_network(const Network& net, const std::optional<CostParams>& params = std::nullopt);

RoutingTree parse_tree(std::string_view text, int node_count);
std::string format_tree(const RoutingTree& tree);

LbsmInstance parse_lbsm(std::string_view text);
std::string format_lbsm(const LbsmInstance& inst);

DsInstance parse_ds(std::string_view text);
std::string format_ds(const DsInstance& inst);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace aggtree
