#pragma once

// Connected noncrossing graphs over a fixed tree skeleton: the canonical
// spanning tree, companion edges of descents, the (tree, descent subset)
// assembly, and the free-edge parity involution on marked graphs.

#include <random>
#include <span>
#include <vector>

#include "nckit/model.hpp"

namespace nckit {

/// Vertices i1 < i2 < ... < ik of a cycle whose edges are the consecutive
/// pairs plus (i1, ik).
struct CycleRep {
  std::vector<Vertex> vertices;

  /// The edge removed by the canonical spanning-tree construction.
  Chord leadingEdge() const { return {vertices.at(0), vertices.at(1)}; }
};

/// Converts a cycle given in walk order. Throws InvariantViolated if the
/// sorted order is not itself a traversal of the cycle.
CycleRep toCycleRep(std::span<const Vertex> walk);

/// Repeatedly removes the leading edge of a cycle until a tree remains.
/// Cycles are found by DFS from vertex 1, neighbors ascending.
NoncrossingTree canonicalSpanningTree(const NoncrossingGraph& graph);
/// Same construction with cycles found from a random start and random
/// neighbor order; the result must not depend on the choices.
NoncrossingTree canonicalSpanningTree(const NoncrossingGraph& graph, std::mt19937_64& rng);

/// (w, j) for descent (i, j): walk up from i while the edges stay descents
/// to reach v; w is the largest neighbor below j of the path v..i, excluding
/// the path itself. Throws NotADescent or NoCandidate.
Chord companionEdge(const NoncrossingTree& tree, Descent descent);

/// Tree edges plus the companion of every descent in `chosen`.
NoncrossingGraph assemble(const NoncrossingTree& tree, std::span<const Descent> chosen);

/// Edges outside the canonical spanning tree.
std::vector<Chord> freeEdges(const NoncrossingGraph& graph);

/// The descent's companion edge (taken in the canonical tree) is present.
bool saturated(const NoncrossingGraph& graph, Descent descent);
std::vector<Descent> saturatedDescents(const NoncrossingGraph& graph);

/// Every descent of the canonical tree has a marked companion; these are
/// the fixed points the involution below leaves undefined.
bool allDescentsMarked(const MarkedNCGraph& graph);

/// Toggles the companion edge of the smallest descent whose companion is
/// unmarked: deleted if present, added (unmarked) otherwise. Marks are kept,
/// so the free-edge count moves by exactly one. Throws AllDescentsMarked.
MarkedNCGraph toggleFirstUnmarkedCompanion(const MarkedNCGraph& graph);

}  // namespace nckit
