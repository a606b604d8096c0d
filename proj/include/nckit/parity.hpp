#pragma once

// Proper/improper classification and the parity-reversing involution on
// improper noncrossing trees. Everything is phrased on the L/R
// representation; the NoncrossingTree overloads round-trip through it.

#include <optional>

#include "nckit/model.hpp"

namespace nckit {

enum class Parity { Even, Odd };
enum class VertexClass { Proper, Improper };

Parity treeParity(const NoncrossingTree& tree);
Parity treeParity(const LRTree& tree);

/// Even tree: proper iff an even number of L children and no R child.
/// Odd tree: proper iff an even number of R children and no L child.
/// Throws RootNotClassifiable for the empty path.
VertexClass classifyVertex(const LRTree& tree, const NodePath& path);

bool isProper(const LRTree& tree);
bool isProper(const NoncrossingTree& tree);

/// Preorder-first improper non-root node, if any.
std::optional<NodePath> firstImproperOrNone(const LRTree& tree);
/// Throws TreeIsProper.
NodePath firstImproper(const LRTree& tree);

/// Nodes before the first improper node v have their (uniform) child labels
/// flipped. At v: odd tree with an L child turns its rightmost L child into
/// R; odd tree without one turns all children into L; the even cases are the
/// mirror images (leftmost R child to L, or all children to R).
/// Throws ProperTreeInput.
LRTree phi(const LRTree& tree);
NoncrossingTree phi(const NoncrossingTree& tree);

}  // namespace nckit
