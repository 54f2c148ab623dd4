#include "aggtree/chart.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "aggtree/errors.hpp"

namespace aggtree {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  return fields;
}

struct Series {
  std::map<double, std::pair<double, int>> points;  // q -> (sum, count)
  void add(double q, double y) {
    auto& p = points[q];
    p.first += y;
    ++p.second;
  }
};

std::string fmt(double x) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << x;
  return out.str();
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string emit_chart(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line.empty()) throw InvalidInput("empty csv");
  auto header = split_csv_line(line);
  auto column = [&](const std::string& name) -> int {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
  };
  int q_col = column("q"), alg_col = column("algorithm");
  int cost_col = column("mean_cost"), lb_col = column("mean_lower_bound");
  if (cost_col < 0) {
    cost_col = column("cost");
    lb_col = column("lower_bound");
  }
  if (q_col < 0 || alg_col < 0 || cost_col < 0 || lb_col < 0) throw InvalidInput("csv is not sweep output");

  std::map<std::string, Series> series;
  // The bound does not depend on the algorithm; average it per trial row once.
  std::map<std::string, Series> lb_by_alg;
  std::size_t data_rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto f = split_csv_line(line);
    int need = std::max({q_col, alg_col, cost_col, lb_col});
    if (static_cast<int>(f.size()) <= need) throw InvalidInput("short csv row: " + line);
    if (f[cost_col].empty()) continue;
    double q = std::stod(f[q_col]);
    series[f[alg_col]].add(q, std::stod(f[cost_col]));
    lb_by_alg[f[alg_col]].add(q, std::stod(f[lb_col]));
    ++data_rows;
  }
  if (data_rows == 0) throw InvalidInput("empty csv");

  Series lb;
  for (const auto& [q, p] : lb_by_alg.begin()->second.points) lb.add(q, p.first / p.second);

  double x_lo = 1e300, x_hi = -1e300, y_hi = 0;
  for (const auto& [name, s] : series) {
    for (const auto& [q, p] : s.points) {
      x_lo = std::min(x_lo, q);
      x_hi = std::max(x_hi, q);
      y_hi = std::max(y_hi, p.first / p.second);
    }
  }
  for (const auto& [q, p] : lb.points) y_hi = std::max(y_hi, p.first / p.second);
  if (x_hi == x_lo) {
    x_lo -= 1;
    x_hi += 1;
  }
  if (y_hi <= 0) y_hi = 1;
  y_hi *= 1.05;

  const double width = 720, height = 480, left = 80, right = 180, top = 30, bottom = 60;
  const double pw = width - left - right, ph = height - top - bottom;
  auto sx = [&](double q) { return left + (q - x_lo) / (x_hi - x_lo) * pw; };
  auto sy = [&](double y) { return top + ph - y / y_hi * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\"" << left + pw << "\" y2=\"" << top + ph
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + ph
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    double q = x_lo + (x_hi - x_lo) * i / 5;
    double y = y_hi * i / 5;
    svg << "<text x=\"" << fmt(sx(q)) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
        << fmt(q) << "</text>\n";
    svg << "<text x=\"" << left - 6 << "\" y=\"" << fmt(sy(y) + 4) << "\" text-anchor=\"end\">" << fmt(y)
        << "</text>\n";
  }
  svg << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 15
      << "\" text-anchor=\"middle\">aggregation ratio q</text>\n";
  svg << "<text transform=\"translate(20," << top + ph / 2
      << ") rotate(-90)\" text-anchor=\"middle\">energy cost</text>\n";

  auto polyline = [&](const Series& s, const std::string& color, bool dashed) {
    std::ostringstream pts;
    for (const auto& [q, p] : s.points) pts << fmt(sx(q)) << ',' << fmt(sy(p.first / p.second)) << ' ';
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\""
        << (dashed ? " stroke-dasharray=\"6,4\"" : "") << " points=\"" << pts.str() << "\"/>\n";
    if (s.points.size() == 1) {
      const auto& [q, p] = *s.points.begin();
      svg << "<circle cx=\"" << fmt(sx(q)) << "\" cy=\"" << fmt(sy(p.first / p.second)) << "\" r=\"3\" fill=\""
          << color << "\"/>\n";
    }
  };
  int index = 0;
  for (const auto& [name, s] : series) {
    std::string color = kPalette[index % 8];
    polyline(s, color, false);
    double ly = top + 10 + 18 * index;
    svg << "<line x1=\"" << left + pw + 15 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 40 << "\" y2=\"" << ly
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << left + pw + 45 << "\" y=\"" << ly + 4 << "\">" << name << "</text>\n";
    ++index;
  }
  polyline(lb, "black", true);
  double ly = top + 10 + 18 * index;
  svg << "<line x1=\"" << left + pw + 15 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 40 << "\" y2=\"" << ly
      << "\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
  svg << "<text x=\"" << left + pw + 45 << "\" y=\"" << ly + 4 << "\">lower bound</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace aggtree
