#pragma once

// Two-way L/R plane-tree representation of noncrossing trees. A non-root
// node is labeled L exactly when its edge to the parent is a descent.

#include "nckit/model.hpp"

namespace nckit {

/// Sibling order: L children by decreasing circle label, then R children by
/// increasing circle label (nearest to the parent first in both blocks).
LRTree toLRTree(const NoncrossingTree& tree);

/// Inverse of toLRTree. Every subtree is placed on a contiguous arc: a node
/// takes the first free label after its L-children's arcs, L subtrees stack
/// downward from it and R subtrees stack upward.
NoncrossingTree fromLRTree(const LRTree& tree);

/// Number of L labels, i.e. the descent count of fromLRTree(tree).
int descentCount(const LRTree& tree);

}  // namespace nckit
