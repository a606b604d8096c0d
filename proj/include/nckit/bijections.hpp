#pragma once

// Even plane trees <-> ternary trees (psi), mirror symmetry of ternary
// trees, and proper noncrossing trees <-> symmetric ternary trees (sigma).

#include "nckit/model.hpp"

namespace nckit {

/// psi(leaf) = leaf; psi(root with S1, S2, ..., S2k) =
/// node(psi(S1), psi(S2), psi(root with S3, ..., S2k)).
/// Throws NotEvenTree naming the first odd node's path.
TernaryTree psi(const PlaneTree& tree);
PlaneTree psiInverse(const TernaryTree& tree);

/// node(A, B, C) -> node(reflect(C), reflect(B), reflect(A)).
TernaryTree reflect(const TernaryTree& tree);
bool isSymmetric(const TernaryTree& tree);

/// A ternary tree equal to its own reflection.
class SymmetricTernaryTree {
 public:
  /// Throws NotSymmetric.
  explicit SymmetricTernaryTree(TernaryTree tree);

  const TernaryTree& tree() const noexcept { return tree_; }
  bool operator==(const SymmetricTernaryTree&) const = default;

 private:
  TernaryTree tree_;
};

/// Plane shape of a noncrossing tree in L/R sibling order, labels dropped.
PlaneTree stripLabels(const LRTree& tree);

/// Proper tree with n edges -> symmetric ternary tree with n internal nodes.
/// With T1 the first root subtree and T2 the rest:
/// sigma = node(psi(T1), sigma(T2), reflect(psi(T1))). Throws NotProperTree.
SymmetricTernaryTree sigma(const NoncrossingTree& tree);
NoncrossingTree sigmaInverse(const SymmetricTernaryTree& tree);

}  // namespace nckit
