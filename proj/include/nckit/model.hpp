#pragma once

// Value types for noncrossing trees and graphs, their plane-tree relatives,
// and the canonical text forms used as equality keys everywhere else.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nckit/error.hpp"

namespace nckit {

/// Points on the circle, numbered 1..v counterclockwise.
using Vertex = int;

inline constexpr int kDefaultVertexGuard = 64;

/// An undirected chord stored as (min, max).
struct Chord {
  Vertex a = 0;
  Vertex b = 0;

  auto operator<=>(const Chord&) const = default;
};

/// Normalizes endpoint order; a loop (x == y) is rejected.
Chord makeChord(Vertex x, Vertex y);

/// Strict interleaving. Chords sharing an endpoint never cross.
constexpr bool crosses(Chord e1, Chord e2) noexcept {
  return (e1.a < e2.a && e2.a < e1.b && e1.b < e2.b) ||
         (e2.a < e1.a && e1.a < e2.b && e2.b < e1.b);
}

/// Tree edge (parent, child) whose parent label exceeds the child label.
struct Descent {
  Vertex parent = 0;
  Vertex child = 0;

  auto operator<=>(const Descent&) const = default;
};

/// Spanning tree of the circle points {1..v} with pairwise noncrossing
/// chords, rooted at vertex 1. Construct through validateTree.
class NoncrossingTree {
 public:
  int vertexCount() const noexcept { return vertexCount_; }
  int edgeCount() const noexcept { return vertexCount_ - 1; }
  std::span<const Chord> edges() const noexcept { return edges_; }

  /// 0 for the root.
  Vertex parent(Vertex x) const { return parent_.at(x); }
  /// Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex x) const { return adjacency_.at(x); }
  bool contains(Chord c) const;

  bool operator==(const NoncrossingTree& other) const {
    return vertexCount_ == other.vertexCount_ && edges_ == other.edges_;
  }
  auto operator<=>(const NoncrossingTree& other) const {
    if (auto c = vertexCount_ <=> other.vertexCount_; c != 0) return c;
    return edges_ <=> other.edges_;
  }

 private:
  friend NoncrossingTree validateTree(int, std::vector<Chord>, int);

  int vertexCount_ = 1;
  std::vector<Chord> edges_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Throws NotATree (wrong edge count, cycle, disconnected, bad endpoint,
/// duplicate) or CrossingPair.
NoncrossingTree validateTree(int vertexCount, std::vector<Chord> edges,
                             int vertexGuard = kDefaultVertexGuard);

/// Ordered by child label ascending.
std::vector<Descent> descents(const NoncrossingTree& tree);

/// Unlabeled ordered tree.
struct PlaneTree {
  std::vector<PlaneTree> children;

  bool operator==(const PlaneTree&) const = default;
};

int edgeCount(const PlaneTree& tree);
/// Every node has an even number of children.
bool isEvenTree(const PlaneTree& tree);

/// Ordered tree in which every node has 0 or 3 children.
class TernaryTree {
 public:
  /// The leaf.
  TernaryTree() = default;
  TernaryTree(TernaryTree left, TernaryTree middle, TernaryTree right);

  bool isLeaf() const noexcept { return children_.empty(); }
  const TernaryTree& left() const { return children_.at(0); }
  const TernaryTree& middle() const { return children_.at(1); }
  const TernaryTree& right() const { return children_.at(2); }

  int internalCount() const;
  PlaneTree toPlane() const;
  /// Throws NotTernaryTree.
  static TernaryTree fromPlane(const PlaneTree& tree);

  bool operator==(const TernaryTree&) const = default;

 private:
  std::vector<TernaryTree> children_;
};

enum class Label : char { L = 'L', R = 'R' };

struct LRNode {
  Label label = Label::R;
  std::vector<LRNode> children;

  bool operator==(const LRNode&) const = default;
};

/// Plane tree with an unlabeled root and L/R labels elsewhere. Root children
/// are all R, and in each sibling list the L block precedes the R block.
class LRTree {
 public:
  LRTree() = default;
  /// Throws InvalidLRTree.
  explicit LRTree(std::vector<LRNode> rootChildren);

  const std::vector<LRNode>& rootChildren() const noexcept { return rootChildren_; }
  /// Number of non-root nodes.
  int nodeCount() const;

  bool operator==(const LRTree&) const = default;

 private:
  std::vector<LRNode> rootChildren_;
};

/// Child indices leading from the root to a node; {} is the root.
using NodePath = std::vector<std::size_t>;

/// Connected noncrossing graph on circle points {1..v}.
class NoncrossingGraph {
 public:
  /// Throws InvalidGraph or CrossingPair.
  NoncrossingGraph(int vertexCount, std::vector<Chord> edges,
                   int vertexGuard = kDefaultVertexGuard);
  static NoncrossingGraph fromTree(const NoncrossingTree& tree);

  int vertexCount() const noexcept { return vertexCount_; }
  int edgeCount() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Chord> edges() const noexcept { return edges_; }
  bool contains(Chord c) const;

  bool operator==(const NoncrossingGraph&) const = default;
  auto operator<=>(const NoncrossingGraph&) const = default;

 private:
  int vertexCount_ = 1;
  std::vector<Chord> edges_;
};

/// A connected noncrossing graph with some of its free edges marked.
class MarkedNCGraph {
 public:
  /// Throws InvalidMark unless every mark is a free edge of the graph.
  MarkedNCGraph(NoncrossingGraph graph, std::vector<Chord> marked);

  const NoncrossingGraph& graph() const noexcept { return graph_; }
  std::span<const Chord> marked() const noexcept { return marked_; }
  bool isMarked(Chord c) const;

  bool operator==(const MarkedNCGraph&) const = default;

 private:
  NoncrossingGraph graph_;
  std::vector<Chord> marked_;
};

std::string serialize(const NoncrossingTree& tree);
std::string serialize(const NoncrossingGraph& graph);
std::string serialize(const MarkedNCGraph& graph);
std::string serialize(const PlaneTree& tree);
std::string serialize(const TernaryTree& tree);
std::string serialize(const LRTree& tree);
std::string serialize(Chord c);

NoncrossingTree parseTree(std::string_view text, int vertexGuard = kDefaultVertexGuard);
/// Rejects marks; use parseMarkedGraph for the starred form.
NoncrossingGraph parseGraph(std::string_view text, int vertexGuard = kDefaultVertexGuard);
MarkedNCGraph parseMarkedGraph(std::string_view text,
                               int vertexGuard = kDefaultVertexGuard);
PlaneTree parsePlaneTree(std::string_view text);
TernaryTree parseTernaryTree(std::string_view text);
LRTree parseLRTree(std::string_view text);

}  // namespace nckit
