#include "nckit/checks.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <set>

#include "nckit/bijections.hpp"
#include "nckit/enumerate.hpp"
#include "nckit/graphs.hpp"
#include "nckit/parity.hpp"
#include "nckit/represent.hpp"

namespace nckit {

namespace {

std::string nk(long n, long k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }
std::string justN(long n) { return "n=" + std::to_string(n); }

ReportRow compare(std::string identity, std::string params, ExactInt lhs, ExactInt rhs) {
  const bool pass = lhs == rhs;
  return {std::move(identity), std::move(params), std::move(lhs), std::move(rhs), pass};
}

// Runs fn(n) for n in [lo, hi] concurrently; rows keep parameter order.
template <class Fn>
Report perParameter(int lo, int hi, Fn fn) {
  std::vector<std::future<Report>> parts;
  for (int n = lo; n <= hi; ++n) parts.push_back(std::async(std::launch::async, fn, n));
  Report out;
  for (auto& part : parts) {
    auto rows = part.get();
    out.insert(out.end(), std::make_move_iterator(rows.begin()),
               std::make_move_iterator(rows.end()));
  }
  return out;
}

std::uint64_t countOf(auto&& range) {
  std::uint64_t count = 0;
  for ([[maybe_unused]] const auto& x : range) ++count;
  return count;
}

}  // namespace

Report checkTreeCounts(int maxN) {
  return perParameter(0, maxN, [](int n) {
    return Report{compare("tree-count", justN(n), countOf(noncrossingTrees(n)),
                          noncrossingTreeCount(n))};
  });
}

Report checkTreeOracle(int maxN) {
  return perParameter(0, std::min(maxN, kOracleEdgeGuard), [](int n) {
    std::vector<NoncrossingTree> streamed;
    for (const auto& t : noncrossingTrees(n)) streamed.push_back(t);
    std::sort(streamed.begin(), streamed.end());
    const bool distinct = std::adjacent_find(streamed.begin(), streamed.end()) == streamed.end();
    const auto oracle = noncrossingTreesOracle(n);
    auto row = compare("tree-oracle", justN(n), streamed.size(), oracle.size());
    row.pass = distinct && streamed == oracle;
    return Report{row};
  });
}

Report checkDescentDistribution(int maxN) {
  return perParameter(1, maxN, [](int n) {
    std::vector<std::uint64_t> byDescents(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& t : noncrossingTrees(n)) ++byDescents[descents(t).size()];
    Report rows;
    for (int k = 0; k <= n; ++k) {
      rows.push_back(compare("descents", nk(n, k), byDescents[k], treesWithDescents(n, k)));
    }
    return rows;
  });
}

Report checkRepresentation(int maxN) {
  return perParameter(0, maxN, [](int n) {
    std::uint64_t labeled = 0;
    std::uint64_t consistent = 0;
    for (const auto& lr : lrTrees(n)) {
      ++labeled;
      const auto tree = fromLRTree(lr);
      if (toLRTree(tree) == lr && fromLRTree(toLRTree(tree)) == tree &&
          descentCount(lr) == static_cast<int>(descents(tree).size())) {
        ++consistent;
      }
    }
    return Report{compare("lr-count", justN(n), labeled, noncrossingTreeCount(n)),
                  compare("lr-roundtrip", justN(n), consistent, labeled)};
  });
}

Report checkEvenMinusOdd(int maxN) {
  return perParameter(1, maxN, [](int n) {
    ExactInt difference = 0;
    std::uint64_t proper = 0;
    for (const auto& t : noncrossingTrees(n)) {
      difference += descents(t).size() % 2 == 0 ? 1 : -1;
      if (isProper(t)) ++proper;
    }
    // e_n - o_n against the proper count, which must itself equal s_n
    auto row = compare("e-minus-o", justN(n), difference, proper);
    row.pass = row.pass && symmetricTernaryCount(n) == proper;
    return Report{row};
  });
}

Report checkPhiInvolution(int maxN) {
  return perParameter(1, maxN, [](int n) {
    std::uint64_t improper = 0;
    std::uint64_t good = 0;
    for (const auto& lr : lrTrees(n)) {
      if (isProper(lr)) continue;
      ++improper;
      const LRTree image = phi(lr);
      const bool flipped = (descentCount(image) - descentCount(lr)) % 2 != 0;
      if (image != lr && flipped && !isProper(image) && phi(image) == lr) ++good;
    }
    return Report{compare("involution-phi", justN(n), good, improper)};
  });
}

Report checkPsiBijection(int maxN) {
  return perParameter(0, maxN, [](int n) {
    std::set<std::string> images;
    std::uint64_t even = 0;
    std::uint64_t roundTrips = 0;
    for (const auto& e : evenPlaneTrees(2 * n)) {
      ++even;
      const auto t = psi(e);
      if (t.internalCount() == n && psiInverse(t) == e) ++roundTrips;
      images.insert(serialize(t));
    }
    std::set<std::string> ternary;
    for (const auto& t : ternaryTrees(n)) ternary.insert(serialize(t));
    auto bijective = compare("psi-image", justN(n), images.size(), ternary.size());
    bijective.pass = bijective.pass && images == ternary && images.size() == even;
    return Report{compare("psi-roundtrip", justN(n), roundTrips, even), bijective,
                  compare("even-tree-count", justN(n), even, noncrossingTreeCount(n))};
  });
}

Report checkSigmaBijection(int maxN) {
  return perParameter(0, maxN, [](int n) {
    std::set<std::string> images;
    std::uint64_t proper = 0;
    std::uint64_t roundTrips = 0;
    for (const auto& t : noncrossingTrees(n)) {
      if (!isProper(t)) continue;
      ++proper;
      const auto s = sigma(t);
      if (s.tree().internalCount() == n && sigmaInverse(s) == t) ++roundTrips;
      images.insert(serialize(s.tree()));
    }
    std::set<std::string> symmetric;
    for (const auto& s : symmetricTernaryTrees(n)) symmetric.insert(serialize(s));
    auto image = compare("sigma-image", justN(n), images.size(), symmetric.size());
    image.pass = image.pass && images == symmetric && images.size() == proper;
    return Report{compare("sigma-roundtrip", justN(n), roundTrips, proper), image,
                  compare("symmetric-count", justN(n), symmetric.size(),
                          symmetricTernaryCount(n))};
  });
}

Report checkCanonicalConfluence(int maxVertices, int orders, std::uint64_t seed) {
  return perParameter(1, maxVertices, [orders, seed](int v) {
    std::uint64_t graphs = 0;
    std::uint64_t confluent = 0;
    for (const auto& g : connectedNCGraphs(v)) {
      std::mt19937_64 rng(seed * 1000003u + graphs * 7919u + static_cast<std::uint64_t>(v));
      ++graphs;
      bool same = true;
      try {
        const auto reference = canonicalSpanningTree(g);
        for (int i = 0; same && i < orders; ++i) same = canonicalSpanningTree(g, rng) == reference;
      } catch (const Error&) {
        same = false;  // a cycle out of circle order
      }
      if (same) ++confluent;
    }
    return Report{compare("canonical-confluence", "v=" + std::to_string(v), confluent, graphs)};
  });
}

Report checkHoughBijection(int maxN) {
  return perParameter(1, maxN, [](int n) {
    std::map<NoncrossingGraph, int> images;
    std::uint64_t pairs = 0;
    std::uint64_t recovered = 0;
    for (const auto& t : noncrossingTrees(n)) {
      const auto all = descents(t);
      const std::size_t subsets = std::size_t{1} << all.size();
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<Descent> chosen;
        for (std::size_t b = 0; b < all.size(); ++b) {
          if (mask >> b & 1) chosen.push_back(all[b]);
        }
        ++pairs;
        const auto g = assemble(t, chosen);
        if (canonicalSpanningTree(g) == t && saturatedDescents(g) == chosen) ++recovered;
        ++images[g];
      }
    }
    std::map<int, std::uint64_t> byEdges;
    std::uint64_t enumerated = 0;
    std::uint64_t hit = 0;
    for (const auto& g : connectedNCGraphs(n + 1)) {
      ++enumerated;
      ++byEdges[g.edgeCount()];
      auto it = images.find(g);
      if (it != images.end() && it->second == 1) ++hit;
    }
    Report rows{compare("hough-recover", justN(n), recovered, pairs)};
    auto onto = compare("hough-bijection", justN(n), hit, enumerated);
    onto.pass = onto.pass && images.size() == pairs && pairs == enumerated;
    rows.push_back(onto);
    for (int m = n; m <= 2 * n - 1; ++m) {
      rows.push_back(compare("graph-count", "n=" + std::to_string(n) + " m=" + std::to_string(m),
                             byEdges[m], connectedGraphCount(n, m)));
    }
    return rows;
  });
}

Report checkMarkedInvolution(int maxN) {
  return perParameter(1, maxN, [](int n) {
    Report rows;
    for (int k = 0; k <= n - 1; ++k) {
      std::uint64_t fixed = 0;
      std::uint64_t moved = 0;
      std::uint64_t good = 0;
      for (const auto& m : markedGraphs(n + 1, k)) {
        if (allDescentsMarked(m)) {
          if (m.graph().edgeCount() == n + k) ++fixed;
          continue;
        }
        ++moved;
        const auto image = toggleFirstUnmarkedCompanion(m);
        const int before = m.graph().edgeCount() - n;
        const int after = image.graph().edgeCount() - n;
        if (std::abs(after - before) == 1 && !allDescentsMarked(image) &&
            toggleFirstUnmarkedCompanion(image) == m) {
          ++good;
        }
      }
      rows.push_back(compare("involution-marked", nk(n, k), good, moved));
      rows.push_back(compare("fixed-class", nk(n, k), fixed, treesWithDescents(n, k)));
    }
    return rows;
  });
}

Report checkMarkedCounts(int maxN) {
  return perParameter(1, maxN, [](int n) {
    Report rows;
    // counts[{m, k}]: marked graphs on n + 1 points with m edges, k marks
    std::map<std::pair<int, int>, std::uint64_t> counts;
    for (int k = 0; k <= n - 1; ++k) {
      for (const auto& g : markedGraphs(n + 1, k)) ++counts[{g.graph().edgeCount(), k}];
    }
    for (int k = 0; k <= n - 1; ++k) {
      ExactInt signedSum = 0;
      for (int m = n; m <= 2 * n - 1; ++m) {
        const ExactInt count = counts[{m, k}];
        rows.push_back(compare("marked-count",
                               "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                   " k=" + std::to_string(k),
                               count, binom(m - n, k) * connectedGraphCount(n, m)));
        signedSum += (m - n) % 2 == 0 ? count : ExactInt(-count);
      }
      rows.push_back(compare("alternating-sum-enumerated", nk(n, k), signedSum,
                             (k % 2 == 0 ? 1 : -1) * treesWithDescents(n, k)));
    }
    return rows;
  });
}

}  // namespace nckit
