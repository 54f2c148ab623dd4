#pragma once

#include <string>
#include <string_view>

namespace aggtree {

/// Cost-versus-q line chart as a standalone SVG document. Accepts either
/// CSV written by the sweep: the means table is plotted as is, the per-row
/// table is averaged first (failed rows skipped). One polyline per
/// algorithm, plus the mean lower bound as a dashed line.
/// Throws InvalidInput on an empty or unrecognised table.
std::string emit_chart(std::string_view csv);

}  // namespace aggtree
