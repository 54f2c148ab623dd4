#include "aggtree/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "aggtree/errors.hpp"

namespace aggtree {

namespace {

struct Line {
  int number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (!line.words.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw InvalidInput("line " + std::to_string(line.number) + ": " + what);
}

std::int64_t to_int(const Line& line, const std::string& word) {
  std::int64_t value = 0;
  auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || end != word.data() + word.size()) fail(line, "expected integer, got '" + word + "'");
  return value;
}

Rational to_rational(const Line& line, const std::string& word) {
  try {
    return parse_rational(word);
  } catch (const std::exception&) {
    fail(line, "expected number, got '" + word + "'");
  }
}

double to_real(const Line& line, const std::string& word) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(word, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != word.size()) fail(line, "expected coordinate, got '" + word + "'");
  return value;
}

void expect_arity(const Line& line, std::size_t lo, std::size_t hi) {
  if (line.words.size() < lo || line.words.size() > hi) fail(line, "wrong number of fields for '" + line.words[0] + "'");
}

std::string format_real(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

}  // namespace

NetworkFile parse_network(std::string_view text) {
  auto lines = tokenize(text);
  int n = -1;
  std::optional<CostParams> params;
  std::vector<std::int64_t> sizes;
  std::vector<int> declared;
  std::vector<Point> coords;
  int with_coords = 0;
  NodeId sink = kNoNode;
  std::vector<Edge> edges;
  for (const auto& line : lines) {
    const auto& w = line.words;
    if (w[0] == "net") {
      expect_arity(line, 2, 2);
      if (n != -1) fail(line, "duplicate 'net'");
      n = static_cast<int>(to_int(line, w[1]));
      if (n < 1) fail(line, "node count must be positive");
      sizes.assign(n, 0);
      declared.assign(n, 0);
      coords.assign(n, Point{});
      continue;
    }
    if (n == -1) fail(line, "'net <n>' must come first");
    if (w[0] == "param") {
      if (params) fail(line, "duplicate 'param'");
      CostParams p;
      bool have_q = false, have_tx = false, have_rx = false;
      if (w.size() % 2 != 1) fail(line, "param expects key/value pairs");
      for (std::size_t i = 1; i < w.size(); i += 2) {
        if (w[i] == "q") {
          p.q = to_int(line, w[i + 1]);
          have_q = true;
        } else if (w[i] == "tx") {
          p.tx = to_rational(line, w[i + 1]);
          have_tx = true;
        } else if (w[i] == "rx") {
          p.rx = to_rational(line, w[i + 1]);
          have_rx = true;
        } else if (w[i] == "budget") {
          p.budget = to_rational(line, w[i + 1]);
        } else {
          fail(line, "unknown param '" + w[i] + "'");
        }
      }
      if (!have_q || !have_tx || !have_rx) fail(line, "param needs q, tx and rx");
      try {
        p.validate();
      } catch (const InvalidInput& e) {
        fail(line, e.what());
      }
      params = p;
    } else if (w[0] == "node") {
      if (w.size() != 4 && w.size() != 6) fail(line, "node expects <id> <s> <role> [<x> <y>]");
      auto id = to_int(line, w[1]);
      if (id < 0 || id >= n) fail(line, "node id out of range");
      if (declared[id]) fail(line, "duplicate node " + w[1]);
      declared[id] = 1;
      auto s = to_int(line, w[2]);
      if (s < 0) fail(line, "report size must be >= 0");
      const std::string& role = w[3];
      if (role == "sink") {
        if (sink != kNoNode) fail(line, "more than one sink");
        if (s != 0) fail(line, "sink report size must be 0");
        sink = static_cast<NodeId>(id);
      } else if (role == "source") {
        if (s < 1) fail(line, "source report size must be >= 1");
      } else if (role == "relay") {
        if (s != 0) fail(line, "relay report size must be 0");
      } else {
        fail(line, "unknown role '" + role + "'");
      }
      sizes[id] = s;
      if (w.size() == 6) {
        coords[id] = {to_real(line, w[4]), to_real(line, w[5])};
        ++with_coords;
      }
    } else if (w[0] == "edge") {
      expect_arity(line, 3, 3);
      auto a = to_int(line, w[1]), b = to_int(line, w[2]);
      if (a < 0 || a >= n || b < 0 || b >= n) fail(line, "edge endpoint out of range");
      edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b)});
    } else {
      fail(line, "unknown declaration '" + w[0] + "'");
    }
  }
  if (n == -1) throw InvalidInput("missing 'net <n>'");
  if (sink == kNoNode) throw InvalidInput("no sink declared");
  if (with_coords != 0 && with_coords != n) throw InvalidInput("coordinates must be given for all nodes or none");
  std::optional<std::vector<Point>> pos;
  if (with_coords == n) pos = std::move(coords);
  return {Network(n, std::move(edges), std::move(sizes), sink, std::move(pos)), params};
}

std::string format_network(const Network& net, const std::optional<CostParams>& params) {
  std::ostringstream out;
  out << "net " << net.node_count() << '\n';
  if (params) {
    out << "param q " << params->q << " tx " << format_rational(params->tx) << " rx "
        << format_rational(params->rx);
    if (params->budget) out << " budget " << format_rational(*params->budget);
    out << '\n';
  }
  for (NodeId v = 0; v < net.node_count(); ++v) {
    out << "node " << v << ' ' << net.report_size(v) << ' ';
    switch (net.role(v)) {
      case Role::sink: out << "sink"; break;
      case Role::source: out << "source"; break;
      case Role::relay: out << "relay"; break;
    }
    if (net.coords()) {
      const Point& p = (*net.coords())[v];
      out << ' ' << format_real(p.x) << ' ' << format_real(p.y);
    }
    out << '\n';
  }
  for (const auto& e : net.edges()) out << "edge " << e.u << ' ' << e.v << '\n';
  return out.str();
}

RoutingTree parse_tree(std::string_view text, int node_count) {
  auto lines = tokenize(text);
  std::optional<RoutingTree> tree;
  for (const auto& line : lines) {
    const auto& w = line.words;
    if (w[0] == "root") {
      expect_arity(line, 2, 2);
      if (tree) fail(line, "duplicate 'root'");
      auto r = to_int(line, w[1]);
      if (r < 0 || r >= node_count) fail(line, "root out of range");
      tree.emplace(node_count, static_cast<NodeId>(r));
    } else if (w[0] == "parent") {
      expect_arity(line, 3, 3);
      if (!tree) fail(line, "'root <id>' must come first");
      auto c = to_int(line, w[1]), p = to_int(line, w[2]);
      if (c < 0 || c >= node_count || p < 0 || p >= node_count) fail(line, "node id out of range");
      if (c == tree->root()) fail(line, "the root has no parent");
      if (tree->parent(static_cast<NodeId>(c)) != kNoNode) fail(line, "duplicate parent for " + w[1]);
      tree->attach(static_cast<NodeId>(c), static_cast<NodeId>(p));
    } else {
      fail(line, "unknown declaration '" + w[0] + "'");
    }
  }
  if (!tree) throw InvalidInput("missing 'root <id>'");
  return *tree;
}

std::string format_tree(const RoutingTree& tree) {
  std::ostringstream out;
  out << "root " << tree.root() << '\n';
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (tree.parent(v) != kNoNode) out << "parent " << v << ' ' << tree.parent(v) << '\n';
  }
  return out.str();
}

LbsmInstance parse_lbsm(std::string_view text) {
  auto lines = tokenize(text);
  std::optional<LbsmInstance> inst;
  std::vector<char> weighted;
  for (const auto& line : lines) {
    const auto& w = line.words;
    if (w[0] == "lbsm") {
      expect_arity(line, 4, 4);
      if (inst) fail(line, "duplicate 'lbsm'");
      auto left = to_int(line, w[1]);
      if (left < 1) fail(line, "left side must be non-empty");
      inst.emplace();
      inst->weight.assign(left, 1);
      weighted.assign(left, 0);
      inst->right_count = static_cast<int>(to_int(line, w[2]));
      inst->k = to_int(line, w[3]);
    } else if (!inst) {
      fail(line, "'lbsm <left> <right> <k>' must come first");
    } else if (w[0] == "weight") {
      expect_arity(line, 3, 3);
      auto i = to_int(line, w[1]);
      if (i < 0 || i >= inst->left_count()) fail(line, "left node out of range");
      if (weighted[i]) fail(line, "duplicate weight");
      weighted[i] = 1;
      inst->weight[i] = to_int(line, w[2]);
    } else if (w[0] == "edge") {
      expect_arity(line, 3, 3);
      inst->edges.emplace_back(static_cast<int>(to_int(line, w[1])), static_cast<int>(to_int(line, w[2])));
    } else {
      fail(line, "unknown declaration '" + w[0] + "'");
    }
  }
  if (!inst) throw InvalidInput("missing 'lbsm' header");
  inst->validate();
  return *inst;
}

std::string format_lbsm(const LbsmInstance& inst) {
  std::ostringstream out;
  out << "lbsm " << inst.left_count() << ' ' << inst.right_count << ' ' << inst.k << '\n';
  for (int i = 0; i < inst.left_count(); ++i) out << "weight " << i << ' ' << inst.weight[i] << '\n';
  for (auto [u, v] : inst.edges) out << "edge " << u << ' ' << v << '\n';
  return out.str();
}

DsInstance parse_ds(std::string_view text) {
  auto lines = tokenize(text);
  int n = -1;
  int k = 0;
  std::vector<Edge> edges;
  for (const auto& line : lines) {
    const auto& w = line.words;
    if (w[0] == "ds") {
      expect_arity(line, 3, 3);
      if (n != -1) fail(line, "duplicate 'ds'");
      n = static_cast<int>(to_int(line, w[1]));
      k = static_cast<int>(to_int(line, w[2]));
      if (n < 1) fail(line, "graph needs a vertex");
    } else if (n == -1) {
      fail(line, "'ds <n> <k>' must come first");
    } else if (w[0] == "edge") {
      expect_arity(line, 3, 3);
      auto a = to_int(line, w[1]), b = to_int(line, w[2]);
      if (a < 0 || a >= n || b < 0 || b >= n) fail(line, "edge endpoint out of range");
      edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b)});
    } else {
      fail(line, "unknown declaration '" + w[0] + "'");
    }
  }
  if (n == -1) throw InvalidInput("missing 'ds' header");
  DsInstance inst{SimpleGraph(n, std::move(edges)), k};
  inst.validate();
  return inst;
}

std::string format_ds(const DsInstance& inst) {
  std::ostringstream out;
  out << "ds " << inst.graph.node_count() << ' ' << inst.k << '\n';
  for (const auto& e : inst.graph.edges()) out << "edge " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace aggtree
