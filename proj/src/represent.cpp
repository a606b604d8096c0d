#include "nckit/represent.hpp"

#include <algorithm>
#include <functional>

namespace nckit {

namespace {

LRNode buildNode(const NoncrossingTree& tree, Vertex x, Label label) {
  LRNode node{label, {}};
  std::vector<Vertex> lower;
  std::vector<Vertex> upper;
  for (Vertex y : tree.neighbors(x)) {
    if (y == tree.parent(x)) continue;
    (y < x ? lower : upper).push_back(y);
  }
  // neighbors() is ascending
  for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
    node.children.push_back(buildNode(tree, *it, Label::L));
  }
  for (Vertex y : upper) node.children.push_back(buildNode(tree, y, Label::R));
  return node;
}

int subtreeSize(const LRNode& node) {
  int size = 1;
  for (const auto& c : node.children) size += subtreeSize(c);
  return size;
}

// Places `node` on the arc [lo, lo + size - 1] and returns its label.
Vertex place(const LRNode& node, Vertex lo, std::vector<Chord>& edges) {
  int lowerSize = 0;
  for (const auto& c : node.children) {
    if (c.label == Label::L) lowerSize += subtreeSize(c);
  }
  const Vertex self = lo + lowerSize;
  Vertex below = self;  // next L arc ends at below - 1
  Vertex above = self;  // next R arc starts at above + 1
  for (const auto& c : node.children) {
    const int size = subtreeSize(c);
    Vertex childLabel = 0;
    if (c.label == Label::L) {
      childLabel = place(c, below - size, edges);
      below -= size;
    } else {
      childLabel = place(c, above + 1, edges);
      above += size;
    }
    edges.push_back(makeChord(self, childLabel));
  }
  return self;
}

}  // namespace

LRTree toLRTree(const NoncrossingTree& tree) {
  return LRTree(buildNode(tree, 1, Label::R).children);
}

NoncrossingTree fromLRTree(const LRTree& tree) {
  LRNode root{Label::R, tree.rootChildren()};
  std::vector<Chord> edges;
  edges.reserve(static_cast<std::size_t>(tree.nodeCount()));
  [[maybe_unused]] Vertex rootLabel = place(root, 1, edges);
  const int vertexCount = tree.nodeCount() + 1;
  return validateTree(vertexCount, std::move(edges), std::max(vertexCount, kDefaultVertexGuard));
}

int descentCount(const LRTree& tree) {
  std::function<int(const std::vector<LRNode>&)> count = [&](const std::vector<LRNode>& nodes) {
    int total = 0;
    for (const auto& n : nodes) total += (n.label == Label::L ? 1 : 0) + count(n.children);
    return total;
  };
  return count(tree.rootChildren());
}

}  // namespace nckit
