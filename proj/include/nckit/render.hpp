#pragma once

#include <string>
#include <string_view>

namespace nckit {

/// Chord diagram as SVG for a tree ("nct:...") or a graph ("ncg:...", marks
/// allowed). Points are spaced evenly counterclockwise from the top. Graph
/// edges outside the canonical spanning tree are dashed; marked edges are
/// drawn bold. Output bytes depend only on the input.
std::string renderSvg(std::string_view serialization);

}  // namespace nckit
