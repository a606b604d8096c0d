#include "nckit/bijections.hpp"

#include "nckit/parity.hpp"
#include "nckit/represent.hpp"

namespace nckit {

namespace {

std::string pathText(const NodePath& path) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(path[i]);
  }
  return out + "]";
}

void requireEven(const PlaneTree& tree, NodePath& path) {
  if (tree.children.size() % 2 != 0) {
    throw Error(ErrorCode::NotEvenTree, "node " + pathText(path) + " has " +
                                            std::to_string(tree.children.size()) +
                                            " children");
  }
  for (std::size_t i = 0; i < tree.children.size(); ++i) {
    path.push_back(i);
    requireEven(tree.children[i], path);
    path.pop_back();
  }
}

// Children [first, end) of a node, already known to be even.
TernaryTree psiChildren(const std::vector<PlaneTree>& children, std::size_t first) {
  if (first == children.size()) return {};
  return TernaryTree(psiChildren(children[first].children, 0),
                     psiChildren(children[first + 1].children, 0),
                     psiChildren(children, first + 2));
}

// Plane tree (root plus subtrees) whose root subtrees are all even trees.
TernaryTree sigmaOfShape(const std::vector<PlaneTree>& rootSubtrees, std::size_t first) {
  if (first == rootSubtrees.size()) return {};
  TernaryTree head = psiChildren(rootSubtrees[first].children, 0);
  TernaryTree mirrored = reflect(head);
  return TernaryTree(std::move(head), sigmaOfShape(rootSubtrees, first + 1),
                     std::move(mirrored));
}

// Proper trees carry forced labels: interior children L, root children R.
LRNode relabel(const PlaneTree& tree, Label label) {
  LRNode node{label, {}};
  for (const auto& c : tree.children) node.children.push_back(relabel(c, Label::L));
  return node;
}

void appendRootSubtrees(const TernaryTree& tree, std::vector<PlaneTree>& out) {
  if (tree.isLeaf()) return;
  out.push_back(psiInverse(tree.left()));
  appendRootSubtrees(tree.middle(), out);
}

}  // namespace

TernaryTree psi(const PlaneTree& tree) {
  NodePath path;
  requireEven(tree, path);
  return psiChildren(tree.children, 0);
}

PlaneTree psiInverse(const TernaryTree& tree) {
  if (tree.isLeaf()) return {};
  PlaneTree out;
  out.children.push_back(psiInverse(tree.left()));
  out.children.push_back(psiInverse(tree.middle()));
  PlaneTree rest = psiInverse(tree.right());
  for (auto& c : rest.children) out.children.push_back(std::move(c));
  return out;
}

TernaryTree reflect(const TernaryTree& tree) {
  if (tree.isLeaf()) return {};
  return TernaryTree(reflect(tree.right()), reflect(tree.middle()), reflect(tree.left()));
}

bool isSymmetric(const TernaryTree& tree) {
  if (tree.isLeaf()) return true;
  return isSymmetric(tree.middle()) && tree.right() == reflect(tree.left());
}

SymmetricTernaryTree::SymmetricTernaryTree(TernaryTree tree) : tree_(std::move(tree)) {
  if (!isSymmetric(tree_)) {
    throw Error(ErrorCode::NotSymmetric, serialize(tree_) + " differs from its reflection");
  }
}

PlaneTree stripLabels(const LRTree& tree) {
  auto strip = [](const auto& self, const LRNode& node) -> PlaneTree {
    PlaneTree out;
    for (const auto& c : node.children) out.children.push_back(self(self, c));
    return out;
  };
  return strip(strip, LRNode{Label::R, tree.rootChildren()});
}

SymmetricTernaryTree sigma(const NoncrossingTree& tree) {
  const LRTree lr = toLRTree(tree);
  if (auto bad = firstImproperOrNone(lr)) {
    throw Error(ErrorCode::NotProperTree,
                serialize(tree) + " has an improper node at " + pathText(*bad));
  }
  return SymmetricTernaryTree(sigmaOfShape(stripLabels(lr).children, 0));
}

NoncrossingTree sigmaInverse(const SymmetricTernaryTree& tree) {
  std::vector<PlaneTree> subtrees;
  appendRootSubtrees(tree.tree(), subtrees);
  std::vector<LRNode> rootChildren;
  for (const auto& s : subtrees) rootChildren.push_back(relabel(s, Label::R));
  return fromLRTree(LRTree(std::move(rootChildren)));
}

}  // namespace nckit
