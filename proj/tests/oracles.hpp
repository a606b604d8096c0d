#pragma once

// Brute-force references kept apart from the library's construction paths:
// Pascal-triangle binomials, and chord-subset search with a hand-rolled
// union-find and BFS for trees, descents and connected graphs.

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pascal(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  static std::vector<std::vector<BigInt>> rows{{1}};
  while (static_cast<int>(rows.size()) <= a) {
    const auto& prev = rows.back();
    std::vector<BigInt> next(prev.size() + 1, 1);
    for (std::size_t i = 1; i < prev.size(); ++i) next[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(next));
  }
  return rows[a][b];
}

using Edge = std::pair<int, int>;

inline bool interleaved(Edge e, Edge f) {
  return (e.first < f.first && f.first < e.second && e.second < f.second) ||
         (f.first < e.first && e.first < f.second && f.second < e.second);
}

inline std::vector<Edge> chordsOn(int v) {
  std::vector<Edge> out;
  for (int a = 1; a <= v; ++a)
    for (int b = a + 1; b <= v; ++b) out.emplace_back(a, b);
  return out;
}

inline bool connected(int v, const std::vector<Edge>& edges) {
  std::vector<int> root(v + 1);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x];
    return x;
  };
  int parts = v;
  for (auto [a, b] : edges) {
    int x = find(a), y = find(b);
    if (x != y) {
      root[x] = y;
      --parts;
    }
  }
  return parts == 1;
}

/// Visits every pairwise-noncrossing chord subset on v points.
template <class Visit>
void noncrossingSubsets(int v, Visit&& visit) {
  const auto chords = chordsOn(v);
  std::vector<Edge> current;
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == chords.size()) {
      visit(current);
      return;
    }
    self(self, i + 1);
    for (auto e : current)
      if (interleaved(e, chords[i])) return;
    current.push_back(chords[i]);
    self(self, i + 1);
    current.pop_back();
  };
  rec(rec, 0);
}

/// Edges with parent label greater than child label, rooted at 1.
inline int descentCount(int v, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(v + 1);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(v + 1, -1);
  parent[1] = 0;
  std::vector<int> queue{1};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int y : adj[queue[q]]) {
      if (parent[y] == -1) {
        parent[y] = queue[q];
        queue.push_back(y);
      }
    }
  }
  int count = 0;
  for (int j = 2; j <= v; ++j) count += parent[j] > j ? 1 : 0;
  return count;
}

/// Trees with n edges by descent count.
inline std::vector<std::uint64_t> descentDistribution(int n) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n) + 1, 0);
  noncrossingSubsets(n + 1, [&](const std::vector<Edge>& edges) {
    if (static_cast<int>(edges.size()) == n && connected(n + 1, edges)) {
      ++out[descentCount(n + 1, edges)];
    }
  });
  return out;
}

/// Connected noncrossing graphs on v points by edge count.
inline std::map<int, std::uint64_t> graphsByEdges(int v) {
  std::map<int, std::uint64_t> out;
  noncrossingSubsets(v, [&](const std::vector<Edge>& edges) {
    if (connected(v, edges)) ++out[static_cast<int>(edges.size())];
  });
  return out;
}

}  // namespace oracle
