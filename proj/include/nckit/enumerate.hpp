#pragma once

// Exhaustive, deterministic generators for every structure family, plus a
// brute-force chord-subset oracle for noncrossing trees.

#include <optional>
#include <vector>

#include "nckit/generator.hpp"
#include "nckit/model.hpp"

namespace nckit {

/// All plane trees with `edges` edges, in serialization order
/// ('(' sorts before ')').
Generator<PlaneTree> planeTrees(int edges);

/// Plane tree x label pattern. A non-root node with c children has c + 1
/// patterns (L-block length 0..c); root children are always R.
Generator<LRTree> lrTrees(int edges);

/// fromLRTree over lrTrees(edges).
Generator<NoncrossingTree> noncrossingTrees(int edges);

inline constexpr int kOracleEdgeGuard = 7;

/// Filters every `edges`-subset of chords on edges + 1 points. Sorted by
/// canonical order. Throws GuardExceeded above kOracleEdgeGuard.
std::vector<NoncrossingTree> noncrossingTreesOracle(int edges);

/// Plane trees with `edges` edges in which every node has an even number of
/// children (none when `edges` is odd).
Generator<PlaneTree> evenPlaneTrees(int edges);
Generator<TernaryTree> ternaryTrees(int internal);
/// Built directly as node(A, B, reflect(A)) with B symmetric.
Generator<TernaryTree> symmetricTernaryTrees(int internal);

/// Connected noncrossing graphs on `vertices` points, optionally restricted
/// to `edges` edges, in lexicographic order of their sorted chord lists.
Generator<NoncrossingGraph> connectedNCGraphs(int vertices, std::optional<int> edges = {});

/// Every connected graph on `vertices` points paired with every `marks`-subset
/// of its free edges.
Generator<MarkedNCGraph> markedGraphs(int vertices, int marks);

/// All k-subsets of {0..n-1} in lexicographic order.
Generator<std::vector<int>> combinations(int n, int k);

}  // namespace nckit
