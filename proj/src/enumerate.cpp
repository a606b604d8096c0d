#include "nckit/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nckit/bijections.hpp"
#include "nckit/graphs.hpp"
#include "nckit/represent.hpp"

namespace nckit {

namespace {

// Lexicographic successor among Dyck words with '(' < ')'.
bool nextDyckWord(std::string& word) {
  const int half = static_cast<int>(word.size()) / 2;
  int opens = 0;
  int balance = 0;
  std::vector<int> opensBefore(word.size());
  std::vector<int> balanceBefore(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    opensBefore[i] = opens;
    balanceBefore[i] = balance;
    if (word[i] == '(') {
      ++opens;
      ++balance;
    } else {
      --balance;
    }
  }
  for (std::size_t i = word.size(); i-- > 0;) {
    if (word[i] != '(' || balanceBefore[i] == 0) continue;
    word[i] = ')';
    std::size_t at = i + 1;
    for (int r = half - opensBefore[i]; r > 0; --r) word[at++] = '(';
    while (at < word.size()) word[at++] = ')';
    return true;
  }
  return false;
}

PlaneTree treeFromDyck(const std::string& word) {
  // Wrapping the word in an extra pair gives the serialized form.
  return parsePlaneTree("(" + word + ")");
}

void collectInternal(LRNode& node, std::vector<LRNode*>& out) {
  for (auto& c : node.children) {
    if (!c.children.empty()) out.push_back(&c);
    collectInternal(c, out);
  }
}

LRNode allRight(const PlaneTree& tree) {
  LRNode node{Label::R, {}};
  for (const auto& c : tree.children) node.children.push_back(allRight(c));
  return node;
}

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
  std::vector<int> parent;
};

std::vector<Chord> allChords(int vertices) {
  std::vector<Chord> chords;
  for (Vertex a = 1; a <= vertices; ++a) {
    for (Vertex b = a + 1; b <= vertices; ++b) chords.push_back({a, b});
  }
  return chords;
}

}  // namespace

Generator<PlaneTree> planeTrees(int edges) {
  if (edges < 0) co_return;
  std::string word = std::string(static_cast<std::size_t>(edges), '(') +
                     std::string(static_cast<std::size_t>(edges), ')');
  do {
    co_yield treeFromDyck(word);
  } while (nextDyckWord(word));
}

Generator<LRTree> lrTrees(int edges) {
  for (const auto& shape : planeTrees(edges)) {
    LRNode root = allRight(shape);
    std::vector<LRNode*> internal;
    collectInternal(root, internal);
    std::vector<std::size_t> leftBlock(internal.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < internal.size(); ++i) {
        auto& kids = internal[i]->children;
        for (std::size_t c = 0; c < kids.size(); ++c) {
          kids[c].label = c < leftBlock[i] ? Label::L : Label::R;
        }
      }
      co_yield LRTree(root.children);
      std::size_t digit = internal.size();
      while (digit-- > 0) {
        if (++leftBlock[digit] <= internal[digit]->children.size()) break;
        leftBlock[digit] = 0;
      }
      if (digit == static_cast<std::size_t>(-1)) break;
    }
  }
}

Generator<NoncrossingTree> noncrossingTrees(int edges) {
  for (const auto& lr : lrTrees(edges)) co_yield fromLRTree(lr);
}

std::vector<NoncrossingTree> noncrossingTreesOracle(int edges) {
  if (edges > kOracleEdgeGuard) {
    throw Error(ErrorCode::GuardExceeded, "oracle limited to " +
                                              std::to_string(kOracleEdgeGuard) + " edges");
  }
  if (edges < 0) return {};
  const int vertices = edges + 1;
  const auto chords = allChords(vertices);
  std::vector<NoncrossingTree> out;
  for (const auto& pick : combinations(static_cast<int>(chords.size()), edges)) {
    bool ok = true;
    for (std::size_t x = 0; ok && x < pick.size(); ++x) {
      for (std::size_t y = x + 1; ok && y < pick.size(); ++y) {
        ok = !crosses(chords[pick[x]], chords[pick[y]]);
      }
    }
    DisjointSets sets(vertices);
    for (std::size_t x = 0; ok && x < pick.size(); ++x) {
      ok = sets.unite(chords[pick[x]].a, chords[pick[x]].b);
    }
    if (!ok) continue;
    std::vector<Chord> chosen;
    for (int i : pick) chosen.push_back(chords[i]);
    out.push_back(validateTree(vertices, std::move(chosen), vertices));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Generator<PlaneTree> evenPlaneTrees(int edges) {
  if (edges % 2 != 0) co_return;
  for (auto& tree : planeTrees(edges)) {
    if (isEvenTree(tree)) co_yield tree;
  }
}

Generator<TernaryTree> ternaryTrees(int internal) {
  if (internal < 0) co_return;
  if (internal == 0) {
    co_yield TernaryTree{};
    co_return;
  }
  for (int a = internal - 1; a >= 0; --a) {
    for (int b = internal - 1 - a; b >= 0; --b) {
      const int c = internal - 1 - a - b;
      for (const auto& left : ternaryTrees(a)) {
        for (const auto& middle : ternaryTrees(b)) {
          for (const auto& right : ternaryTrees(c)) co_yield TernaryTree(left, middle, right);
        }
      }
    }
  }
}

Generator<TernaryTree> symmetricTernaryTrees(int internal) {
  if (internal < 0) co_return;
  if (internal == 0) {
    co_yield TernaryTree{};
    co_return;
  }
  for (int side = (internal - 1) / 2; side >= 0; --side) {
    for (const auto& outer : ternaryTrees(side)) {
      for (const auto& middle : symmetricTernaryTrees(internal - 1 - 2 * side)) {
        co_yield TernaryTree(outer, middle, reflect(outer));
      }
    }
  }
}

Generator<NoncrossingGraph> connectedNCGraphs(int vertices, std::optional<int> edges) {
  if (vertices < 1) co_return;
  const auto chords = allChords(vertices);
  const std::size_t total = chords.size();
  const std::size_t limit = edges ? static_cast<std::size_t>(std::max(*edges, 0)) : total;
  std::vector<std::size_t> chosen;

  auto compatible = [&](std::size_t i) {
    return std::none_of(chosen.begin(), chosen.end(),
                        [&](std::size_t j) { return crosses(chords[i], chords[j]); });
  };
  auto connected = [&] {
    if (static_cast<int>(chosen.size()) < vertices - 1) return false;
    DisjointSets sets(vertices);
    int components = vertices;
    for (std::size_t j : chosen) components -= sets.unite(chords[j].a, chords[j].b) ? 1 : 0;
    return components == 1;
  };
  auto current = [&] {
    std::vector<Chord> list;
    for (std::size_t j : chosen) list.push_back(chords[j]);
    return NoncrossingGraph(vertices, std::move(list), vertices);
  };

  if ((!edges || *edges == 0) && connected()) co_yield current();
  std::size_t from = 0;
  while (true) {
    std::size_t next = total;
    if (chosen.size() < limit) {
      for (std::size_t i = from; i < total; ++i) {
        if (compatible(i)) {
          next = i;
          break;
        }
      }
    }
    if (next < total) {
      chosen.push_back(next);
      if ((!edges || static_cast<int>(chosen.size()) == *edges) && connected()) {
        co_yield current();
      }
      from = next + 1;
      continue;
    }
    if (chosen.empty()) break;
    from = chosen.back() + 1;
    chosen.pop_back();
  }
}

Generator<MarkedNCGraph> markedGraphs(int vertices, int marks) {
  if (marks < 0) co_return;
  for (const auto& graph : connectedNCGraphs(vertices)) {
    const auto free = freeEdges(graph);
    for (const auto& pick : combinations(static_cast<int>(free.size()), marks)) {
      std::vector<Chord> marked;
      for (int i : pick) marked.push_back(free[i]);
      co_yield MarkedNCGraph(graph, std::move(marked));
    }
  }
}

Generator<std::vector<int>> combinations(int n, int k) {
  if (k < 0 || k > n) co_return;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    co_yield pick;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace nckit
