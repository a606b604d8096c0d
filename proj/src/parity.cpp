#include "nckit/parity.hpp"

#include <algorithm>

#include "nckit/represent.hpp"

namespace nckit {

namespace {

Label flipped(Label label) { return label == Label::L ? Label::R : Label::L; }

VertexClass classify(const LRNode& node, Parity parity) {
  const auto left = std::count_if(node.children.begin(), node.children.end(),
                                  [](const LRNode& c) { return c.label == Label::L; });
  const auto right = static_cast<std::ptrdiff_t>(node.children.size()) - left;
  const bool proper = parity == Parity::Even ? (left % 2 == 0 && right == 0)
                                             : (right % 2 == 0 && left == 0);
  return proper ? VertexClass::Proper : VertexClass::Improper;
}

template <class Node, class Visit>
bool preorder(Node& node, NodePath& path, Visit&& visit) {
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(i);
    if (!visit(node.children[i], path)) return false;
    if (!preorder(node.children[i], path, visit)) return false;
    path.pop_back();
  }
  return true;
}

const LRNode& nodeAt(const LRNode& root, const NodePath& path) {
  const LRNode* node = &root;
  for (std::size_t i : path) {
    if (i >= node->children.size()) {
      throw Error(ErrorCode::InvalidLRTree, "path leaves the tree");
    }
    node = &node->children[i];
  }
  return *node;
}

}  // namespace

Parity treeParity(const LRTree& tree) {
  return descentCount(tree) % 2 == 0 ? Parity::Even : Parity::Odd;
}

Parity treeParity(const NoncrossingTree& tree) {
  return descents(tree).size() % 2 == 0 ? Parity::Even : Parity::Odd;
}

VertexClass classifyVertex(const LRTree& tree, const NodePath& path) {
  if (path.empty()) throw Error(ErrorCode::RootNotClassifiable, "the root has no class");
  const LRNode root{Label::R, tree.rootChildren()};
  return classify(nodeAt(root, path), treeParity(tree));
}

std::optional<NodePath> firstImproperOrNone(const LRTree& tree) {
  const Parity parity = treeParity(tree);
  const LRNode root{Label::R, tree.rootChildren()};
  NodePath path;
  std::optional<NodePath> found;
  preorder(root, path, [&](const LRNode& node, const NodePath& at) {
    if (classify(node, parity) == VertexClass::Improper) {
      found = at;
      return false;
    }
    return true;
  });
  return found;
}

NodePath firstImproper(const LRTree& tree) {
  auto found = firstImproperOrNone(tree);
  if (!found) throw Error(ErrorCode::TreeIsProper, serialize(tree) + " is proper");
  return *found;
}

bool isProper(const LRTree& tree) { return !firstImproperOrNone(tree).has_value(); }

bool isProper(const NoncrossingTree& tree) { return isProper(toLRTree(tree)); }

LRTree phi(const LRTree& tree) {
  const Parity parity = treeParity(tree);
  const auto target = firstImproperOrNone(tree);
  if (!target) throw Error(ErrorCode::ProperTreeInput, serialize(tree) + " is proper");

  LRNode root{Label::R, tree.rootChildren()};
  NodePath path;
  LRNode* pivot = nullptr;
  preorder(root, path, [&](LRNode& node, const NodePath& at) {
    if (at == *target) {
      pivot = &node;
      return false;
    }
    if (node.children.empty()) return true;
    const Label uniform = node.children.front().label;
    for (auto& c : node.children) {
      if (c.label != uniform) {
        throw Error(ErrorCode::InvariantViolated, "node before the first improper node "
                                                  "has mixed child labels");
      }
      c.label = flipped(uniform);
    }
    return true;
  });

  auto& kids = pivot->children;
  auto isL = [](const LRNode& c) { return c.label == Label::L; };
  const auto firstR = std::find_if_not(kids.begin(), kids.end(), isL);
  if (parity == Parity::Odd) {
    if (firstR != kids.begin()) {
      std::prev(firstR)->label = Label::R;  // rightmost L child
    } else {
      for (auto& c : kids) c.label = Label::L;
    }
  } else {
    if (firstR != kids.end()) {
      firstR->label = Label::L;  // leftmost R child
    } else {
      for (auto& c : kids) c.label = Label::R;
    }
  }
  return LRTree(std::move(root.children));
}

NoncrossingTree phi(const NoncrossingTree& tree) { return fromLRTree(phi(toLRTree(tree))); }

}  // namespace nckit
