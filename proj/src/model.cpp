#include "nckit/model.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace nckit {

std::string_view errorName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::CrossingPair: return "CrossingPair";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidMark: return "InvalidMark";
    case ErrorCode::NotTernaryTree: return "NotTernaryTree";
    case ErrorCode::InvalidLRTree: return "InvalidLRTree";
    case ErrorCode::NotEvenTree: return "NotEvenTree";
    case ErrorCode::NotProperTree: return "NotProperTree";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::RootNotClassifiable: return "RootNotClassifiable";
    case ErrorCode::TreeIsProper: return "TreeIsProper";
    case ErrorCode::ProperTreeInput: return "ProperTreeInput";
    case ErrorCode::NotADescent: return "NotADescent";
    case ErrorCode::NoCandidate: return "NoCandidate";
    case ErrorCode::AllDescentsMarked: return "AllDescentsMarked";
    case ErrorCode::NegativeUpperIndex: return "NegativeUpperIndex";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

Chord makeChord(Vertex x, Vertex y) {
  if (x == y) {
    throw Error(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(x));
  }
  return x < y ? Chord{x, y} : Chord{y, x};
}

namespace {

// Sorts, range-checks and de-duplicates, then rejects the first crossing pair.
void normalizeChords(int vertexCount, std::vector<Chord>& edges, ErrorCode shapeError) {
  for (auto& e : edges) {
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 1 || e.b > vertexCount || e.a == e.b) {
      throw Error(shapeError, "chord " + serialize(e) + " is not a chord on " +
                                  std::to_string(vertexCount) + " points");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(shapeError, "duplicate chord " + serialize(*dup));
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (crosses(edges[i], edges[j])) {
        throw Error(ErrorCode::CrossingPair,
                    "(" + serialize(edges[i]) + ") crosses (" + serialize(edges[j]) + ")");
      }
    }
  }
}

std::vector<std::vector<Vertex>> adjacencyOf(int vertexCount, std::span<const Chord> edges) {
  std::vector<std::vector<Vertex>> adj(vertexCount + 1);
  for (auto e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

// Parent array from a DFS rooted at 1; parent[1] = 0, unreached = -1.
std::vector<Vertex> parentsFromRoot(int vertexCount,
                                    const std::vector<std::vector<Vertex>>& adj) {
  std::vector<Vertex> parent(vertexCount + 1, -1);
  parent[1] = 0;
  std::vector<Vertex> stack{1};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj[x]) {
      if (parent[y] == -1) {
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  return parent;
}

}  // namespace

bool NoncrossingTree::contains(Chord c) const {
  return std::binary_search(edges_.begin(), edges_.end(), c);
}

NoncrossingTree validateTree(int vertexCount, std::vector<Chord> edges, int vertexGuard) {
  if (vertexCount < 1) throw Error(ErrorCode::NotATree, "vertex count must be positive");
  if (vertexCount > vertexGuard) {
    throw Error(ErrorCode::GuardExceeded,
                std::to_string(vertexCount) + " vertices exceeds guard " +
                    std::to_string(vertexGuard));
  }
  normalizeChords(vertexCount, edges, ErrorCode::NotATree);
  if (static_cast<int>(edges.size()) != vertexCount - 1) {
    throw Error(ErrorCode::NotATree, "expected " + std::to_string(vertexCount - 1) +
                                         " edges, got " + std::to_string(edges.size()));
  }
  auto adj = adjacencyOf(vertexCount, edges);
  auto parent = parentsFromRoot(vertexCount, adj);
  for (Vertex x = 1; x <= vertexCount; ++x) {
    if (parent[x] == -1) {
      throw Error(ErrorCode::NotATree, "vertex " + std::to_string(x) + " is unreachable");
    }
  }
  NoncrossingTree tree;
  tree.vertexCount_ = vertexCount;
  tree.edges_ = std::move(edges);
  tree.parent_ = std::move(parent);
  tree.adjacency_ = std::move(adj);
  return tree;
}

std::vector<Descent> descents(const NoncrossingTree& tree) {
  std::vector<Descent> out;
  for (Vertex j = 2; j <= tree.vertexCount(); ++j) {
    if (tree.parent(j) > j) out.push_back({tree.parent(j), j});
  }
  return out;
}

int edgeCount(const PlaneTree& tree) {
  int count = 0;
  for (const auto& child : tree.children) count += 1 + edgeCount(child);
  return count;
}

bool isEvenTree(const PlaneTree& tree) {
  if (tree.children.size() % 2 != 0) return false;
  return std::all_of(tree.children.begin(), tree.children.end(),
                     [](const PlaneTree& c) { return isEvenTree(c); });
}

TernaryTree::TernaryTree(TernaryTree left, TernaryTree middle, TernaryTree right) {
  children_.reserve(3);
  children_.push_back(std::move(left));
  children_.push_back(std::move(middle));
  children_.push_back(std::move(right));
}

int TernaryTree::internalCount() const {
  if (isLeaf()) return 0;
  return 1 + left().internalCount() + middle().internalCount() + right().internalCount();
}

PlaneTree TernaryTree::toPlane() const {
  PlaneTree out;
  for (const auto& c : children_) out.children.push_back(c.toPlane());
  return out;
}

TernaryTree TernaryTree::fromPlane(const PlaneTree& tree) {
  if (tree.children.empty()) return {};
  if (tree.children.size() != 3) {
    throw Error(ErrorCode::NotTernaryTree,
                "node with " + std::to_string(tree.children.size()) + " children");
  }
  return TernaryTree(fromPlane(tree.children[0]), fromPlane(tree.children[1]),
                     fromPlane(tree.children[2]));
}

namespace {

void checkSiblings(const std::vector<LRNode>& siblings) {
  bool seenR = false;
  for (const auto& node : siblings) {
    if (node.label == Label::R) {
      seenR = true;
    } else if (seenR) {
      throw Error(ErrorCode::InvalidLRTree, "an R sibling precedes an L sibling");
    }
    checkSiblings(node.children);
  }
}

int countNodes(const std::vector<LRNode>& nodes) {
  int count = 0;
  for (const auto& n : nodes) count += 1 + countNodes(n.children);
  return count;
}

}  // namespace

LRTree::LRTree(std::vector<LRNode> rootChildren) : rootChildren_(std::move(rootChildren)) {
  for (const auto& child : rootChildren_) {
    if (child.label != Label::R) {
      throw Error(ErrorCode::InvalidLRTree, "a child of the root is labeled L");
    }
  }
  checkSiblings(rootChildren_);
}

int LRTree::nodeCount() const { return countNodes(rootChildren_); }

NoncrossingGraph::NoncrossingGraph(int vertexCount, std::vector<Chord> edges, int vertexGuard)
    : vertexCount_(vertexCount) {
  if (vertexCount < 1) throw Error(ErrorCode::InvalidGraph, "vertex count must be positive");
  if (vertexCount > vertexGuard) {
    throw Error(ErrorCode::GuardExceeded,
                std::to_string(vertexCount) + " vertices exceeds guard " +
                    std::to_string(vertexGuard));
  }
  normalizeChords(vertexCount, edges, ErrorCode::InvalidGraph);
  auto parent = parentsFromRoot(vertexCount, adjacencyOf(vertexCount, edges));
  if (std::find(parent.begin() + 1, parent.end(), -1) != parent.end()) {
    throw Error(ErrorCode::InvalidGraph, "graph is not connected");
  }
  // Outerplanar bound; cannot fail once the chords are pairwise noncrossing.
  if (vertexCount >= 2 && static_cast<int>(edges.size()) > 2 * vertexCount - 3) {
    throw Error(ErrorCode::InvariantViolated, "more than 2v-3 noncrossing chords");
  }
  edges_ = std::move(edges);
}

NoncrossingGraph NoncrossingGraph::fromTree(const NoncrossingTree& tree) {
  return NoncrossingGraph(tree.vertexCount(),
                          std::vector<Chord>(tree.edges().begin(), tree.edges().end()),
                          tree.vertexCount());
}

bool NoncrossingGraph::contains(Chord c) const {
  return std::binary_search(edges_.begin(), edges_.end(), c);
}

bool MarkedNCGraph::isMarked(Chord c) const {
  return std::binary_search(marked_.begin(), marked_.end(), c);
}

// ---------------------------------------------------------------------------
// Text forms

std::string serialize(Chord c) { return std::to_string(c.a) + "-" + std::to_string(c.b); }

namespace {

std::string chordList(std::span<const Chord> edges, const MarkedNCGraph* marks) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) out += ',';
    out += serialize(edges[i]);
    if (marks != nullptr && marks->isMarked(edges[i])) out += '*';
  }
  return out;
}

void appendPlane(const PlaneTree& tree, std::string& out) {
  out += '(';
  for (const auto& c : tree.children) appendPlane(c, out);
  out += ')';
}

void appendLR(const std::vector<LRNode>& nodes, std::string& out) {
  for (const auto& n : nodes) {
    out += static_cast<char>(n.label);
    out += '(';
    appendLR(n.children, out);
    out += ')';
  }
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) {
      fail("expected \"" + std::string(word) + "\"");
    }
    pos_ += word.size();
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  int number() {
    int value = 0;
    auto begin = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == begin) fail("expected a decimal number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }
  void finish() {
    if (!done()) fail("trailing characters");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

PlaneTree readPlane(Cursor& in) {
  in.expect('(');
  PlaneTree node;
  while (in.peek() == '(') node.children.push_back(readPlane(in));
  in.expect(')');
  return node;
}

std::vector<LRNode> readLRChildren(Cursor& in) {
  std::vector<LRNode> nodes;
  while (in.peek() == 'L' || in.peek() == 'R') {
    LRNode node;
    node.label = in.peek() == 'L' ? Label::L : Label::R;
    in.expect(in.peek());
    in.expect('(');
    node.children = readLRChildren(in);
    in.expect(')');
    nodes.push_back(std::move(node));
  }
  return nodes;
}

struct ChordListText {
  int vertexCount = 0;
  std::vector<Chord> edges;
  std::vector<Chord> marked;
};

ChordListText readChordList(std::string_view text, std::string_view prefix, bool allowMarks) {
  Cursor in(text);
  ChordListText out;
  in.expect(prefix);
  in.expect(':');
  out.vertexCount = in.number();
  in.expect(':');
  if (in.done()) return out;
  do {
    std::size_t at = in.pos();
    Vertex x = in.number();
    in.expect('-');
    Vertex y = in.number();
    if (x == y) throw ParseError(at, "loop chord");
    Chord c = makeChord(x, y);
    out.edges.push_back(c);
    if (in.peek() == '*') {
      if (!allowMarks) in.fail("marks are not allowed here");
      in.expect('*');
      out.marked.push_back(c);
    }
  } while (in.accept(','));
  in.finish();
  return out;
}

}  // namespace

std::string serialize(const NoncrossingTree& tree) {
  return "nct:" + std::to_string(tree.vertexCount()) + ":" + chordList(tree.edges(), nullptr);
}

std::string serialize(const NoncrossingGraph& graph) {
  return "ncg:" + std::to_string(graph.vertexCount()) + ":" + chordList(graph.edges(), nullptr);
}

std::string serialize(const MarkedNCGraph& graph) {
  return "ncg:" + std::to_string(graph.graph().vertexCount()) + ":" +
         chordList(graph.graph().edges(), &graph);
}

std::string serialize(const PlaneTree& tree) {
  std::string out;
  appendPlane(tree, out);
  return out;
}

std::string serialize(const TernaryTree& tree) { return serialize(tree.toPlane()); }

std::string serialize(const LRTree& tree) {
  std::string out = "(";
  appendLR(tree.rootChildren(), out);
  out += ')';
  return out;
}

NoncrossingTree parseTree(std::string_view text, int vertexGuard) {
  auto parsed = readChordList(text, "nct", false);
  return validateTree(parsed.vertexCount, std::move(parsed.edges), vertexGuard);
}

NoncrossingGraph parseGraph(std::string_view text, int vertexGuard) {
  auto parsed = readChordList(text, "ncg", false);
  return NoncrossingGraph(parsed.vertexCount, std::move(parsed.edges), vertexGuard);
}

MarkedNCGraph parseMarkedGraph(std::string_view text, int vertexGuard) {
  auto parsed = readChordList(text, "ncg", true);
  return MarkedNCGraph(NoncrossingGraph(parsed.vertexCount, std::move(parsed.edges), vertexGuard),
                       std::move(parsed.marked));
}

PlaneTree parsePlaneTree(std::string_view text) {
  Cursor in(text);
  auto tree = readPlane(in);
  in.finish();
  return tree;
}

TernaryTree parseTernaryTree(std::string_view text) {
  return TernaryTree::fromPlane(parsePlaneTree(text));
}

LRTree parseLRTree(std::string_view text) {
  Cursor in(text);
  in.expect('(');
  auto children = readLRChildren(in);
  in.expect(')');
  in.finish();
  return LRTree(std::move(children));
}

}  // namespace nckit
