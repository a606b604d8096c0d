#include "nckit/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "nckit/graphs.hpp"
#include "nckit/model.hpp"

namespace nckit {

namespace {

constexpr double kSize = 400.0;
constexpr double kCenter = kSize / 2;
constexpr double kRadius = 160.0;

struct Point {
  double x;
  double y;
};

Point position(Vertex x, int vertexCount) {
  const double angle =
      std::numbers::pi / 2 + 2 * std::numbers::pi * (x - 1) / static_cast<double>(vertexCount);
  return {kCenter + kRadius * std::cos(angle), kCenter - kRadius * std::sin(angle)};
}

std::string fixed(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f", value);
  std::string text = buffer;
  return text == "-0.000" ? "0.000" : text;
}

enum class Style { Tree, Free, Marked };

}  // namespace

std::string renderSvg(std::string_view serialization) {
  int vertexCount = 0;
  std::vector<std::pair<Chord, Style>> chords;
  if (serialization.starts_with("nct:")) {
    const auto tree = parseTree(serialization);
    vertexCount = tree.vertexCount();
    for (auto e : tree.edges()) chords.emplace_back(e, Style::Tree);
  } else {
    const auto marked = parseMarkedGraph(serialization);
    const auto& graph = marked.graph();
    vertexCount = graph.vertexCount();
    const auto tree = canonicalSpanningTree(graph);
    for (auto e : graph.edges()) {
      Style style = tree.contains(e) ? Style::Tree : Style::Free;
      if (marked.isMarked(e)) style = Style::Marked;
      chords.emplace_back(e, style);
    }
  }

  const std::string size = fixed(kSize);
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size +
                    "\" height=\"" + size + "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  svg += "<circle cx=\"" + fixed(kCenter) + "\" cy=\"" + fixed(kCenter) + "\" r=\"" +
         fixed(kRadius) + "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (const auto& [chord, style] : chords) {
    const Point p = position(chord.a, vertexCount);
    const Point q = position(chord.b, vertexCount);
    svg += "<line x1=\"" + fixed(p.x) + "\" y1=\"" + fixed(p.y) + "\" x2=\"" + fixed(q.x) +
           "\" y2=\"" + fixed(q.y) + "\" stroke=\"#000000\"";
    switch (style) {
      case Style::Tree: svg += " stroke-width=\"2\""; break;
      case Style::Free: svg += " stroke-width=\"2\" stroke-dasharray=\"6,4\""; break;
      case Style::Marked: svg += " stroke-width=\"5\" stroke-dasharray=\"6,4\""; break;
    }
    svg += "/>\n";
  }
  for (Vertex x = 1; x <= vertexCount; ++x) {
    const Point p = position(x, vertexCount);
    const Point label = {kCenter + (p.x - kCenter) * 1.12, kCenter + (p.y - kCenter) * 1.12};
    svg += "<circle cx=\"" + fixed(p.x) + "\" cy=\"" + fixed(p.y) + "\" r=\"4\" fill=\"#000000\"/>\n";
    svg += "<text x=\"" + fixed(label.x) + "\" y=\"" + fixed(label.y) +
           "\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
           std::to_string(x) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace nckit
