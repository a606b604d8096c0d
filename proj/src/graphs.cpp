#include "nckit/graphs.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace nckit {

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

Adjacency adjacencyOf(int vertexCount, const std::set<Chord>& edges) {
  Adjacency adj(vertexCount + 1);
  for (auto e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

// DFS that stops at the first back edge and returns the cycle it closes,
// in walk order.
class CycleFinder {
 public:
  CycleFinder(const Adjacency& adj, std::mt19937_64* rng)
      : adj_(adj), rng_(rng), state_(adj.size(), 0) {}

  std::optional<std::vector<Vertex>> from(Vertex start) {
    if (visit(start, 0)) return cycle_;
    return std::nullopt;
  }

 private:
  bool visit(Vertex x, Vertex parent) {
    state_[x] = 1;
    path_.push_back(x);
    std::vector<Vertex> order = adj_[x];
    if (rng_ != nullptr) std::shuffle(order.begin(), order.end(), *rng_);
    for (Vertex y : order) {
      if (y == parent) continue;
      if (state_[y] == 1) {
        auto at = std::find(path_.begin(), path_.end(), y);
        cycle_.assign(at, path_.end());
        return true;
      }
      if (state_[y] == 0 && visit(y, x)) return true;
    }
    state_[x] = 2;
    path_.pop_back();
    return false;
  }

  const Adjacency& adj_;
  std::mt19937_64* rng_;
  std::vector<int> state_;
  std::vector<Vertex> path_;
  std::vector<Vertex> cycle_;
};

NoncrossingTree spanningTree(const NoncrossingGraph& graph, std::mt19937_64* rng) {
  const int v = graph.vertexCount();
  std::set<Chord> edges(graph.edges().begin(), graph.edges().end());
  while (static_cast<int>(edges.size()) > v - 1) {
    Vertex start = 1;
    if (rng != nullptr) start = std::uniform_int_distribution<Vertex>(1, v)(*rng);
    auto adj = adjacencyOf(v, edges);
    auto walk = CycleFinder(adj, rng).from(start);
    if (!walk) throw Error(ErrorCode::InvariantViolated, "connected graph with no cycle");
    edges.erase(toCycleRep(*walk).leadingEdge());
  }
  return validateTree(v, std::vector<Chord>(edges.begin(), edges.end()), v);
}

}  // namespace

CycleRep toCycleRep(std::span<const Vertex> walk) {
  if (walk.size() < 3) throw Error(ErrorCode::InvariantViolated, "cycle shorter than 3");
  std::vector<Chord> walked;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    walked.push_back(makeChord(walk[i], walk[(i + 1) % walk.size()]));
  }
  CycleRep rep{std::vector<Vertex>(walk.begin(), walk.end())};
  std::sort(rep.vertices.begin(), rep.vertices.end());
  std::vector<Chord> sorted;
  for (std::size_t i = 0; i < rep.vertices.size(); ++i) {
    sorted.push_back(makeChord(rep.vertices[i], rep.vertices[(i + 1) % rep.vertices.size()]));
  }
  std::sort(walked.begin(), walked.end());
  std::sort(sorted.begin(), sorted.end());
  if (walked != sorted) {
    throw Error(ErrorCode::InvariantViolated, "cycle is not traversed in circle order");
  }
  return rep;
}

NoncrossingTree canonicalSpanningTree(const NoncrossingGraph& graph) {
  return spanningTree(graph, nullptr);
}

NoncrossingTree canonicalSpanningTree(const NoncrossingGraph& graph, std::mt19937_64& rng) {
  return spanningTree(graph, &rng);
}

Chord companionEdge(const NoncrossingTree& tree, Descent descent) {
  const auto [i, j] = descent;
  if (j < 2 || j > tree.vertexCount() || tree.parent(j) != i || i <= j) {
    throw Error(ErrorCode::NotADescent, "(" + std::to_string(i) + "," + std::to_string(j) +
                                            ") is not a descent of " + serialize(tree));
  }
  std::vector<Vertex> path{i};
  while (tree.parent(path.back()) > path.back()) path.push_back(tree.parent(path.back()));

  Vertex best = 0;
  for (Vertex p : path) {
    for (Vertex x : tree.neighbors(p)) {
      if (x < j && x > best && std::find(path.begin(), path.end(), x) == path.end()) best = x;
    }
  }
  if (best == 0) {
    throw Error(ErrorCode::NoCandidate, "no companion for descent (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
  }
  return {best, j};
}

NoncrossingGraph assemble(const NoncrossingTree& tree, std::span<const Descent> chosen) {
  std::vector<Chord> edges(tree.edges().begin(), tree.edges().end());
  for (const auto& d : chosen) edges.push_back(companionEdge(tree, d));
  return NoncrossingGraph(tree.vertexCount(), std::move(edges), tree.vertexCount());
}

std::vector<Chord> freeEdges(const NoncrossingGraph& graph) {
  const auto tree = canonicalSpanningTree(graph);
  std::vector<Chord> out;
  for (auto e : graph.edges()) {
    if (!tree.contains(e)) out.push_back(e);
  }
  return out;
}

bool saturated(const NoncrossingGraph& graph, Descent descent) {
  return graph.contains(companionEdge(canonicalSpanningTree(graph), descent));
}

std::vector<Descent> saturatedDescents(const NoncrossingGraph& graph) {
  const auto tree = canonicalSpanningTree(graph);
  std::vector<Descent> out;
  for (const auto& d : descents(tree)) {
    if (graph.contains(companionEdge(tree, d))) out.push_back(d);
  }
  return out;
}

MarkedNCGraph::MarkedNCGraph(NoncrossingGraph graph, std::vector<Chord> marked)
    : graph_(std::move(graph)), marked_(std::move(marked)) {
  std::sort(marked_.begin(), marked_.end());
  if (std::adjacent_find(marked_.begin(), marked_.end()) != marked_.end()) {
    throw Error(ErrorCode::InvalidMark, "edge marked twice");
  }
  if (marked_.empty()) return;
  const auto free = freeEdges(graph_);
  for (auto c : marked_) {
    if (!std::binary_search(free.begin(), free.end(), c)) {
      throw Error(ErrorCode::InvalidMark, serialize(c) + " is not a free edge");
    }
  }
}

bool allDescentsMarked(const MarkedNCGraph& graph) {
  const auto tree = canonicalSpanningTree(graph.graph());
  const auto all = descents(tree);
  return std::all_of(all.begin(), all.end(), [&](const Descent& d) {
    return graph.isMarked(companionEdge(tree, d));
  });
}

MarkedNCGraph toggleFirstUnmarkedCompanion(const MarkedNCGraph& graph) {
  const auto& g = graph.graph();
  const auto tree = canonicalSpanningTree(g);
  for (const auto& d : descents(tree)) {
    const Chord companion = companionEdge(tree, d);
    if (graph.isMarked(companion)) continue;
    std::vector<Chord> edges(g.edges().begin(), g.edges().end());
    if (g.contains(companion)) {
      std::erase(edges, companion);
    } else {
      edges.push_back(companion);
    }
    return MarkedNCGraph(NoncrossingGraph(g.vertexCount(), std::move(edges), g.vertexCount()),
                         std::vector<Chord>(graph.marked().begin(), graph.marked().end()));
  }
  throw Error(ErrorCode::AllDescentsMarked,
              serialize(graph) + " has every descent marked");
}

}  // namespace nckit
