#include <doctest.h>

#include <random>
#include <set>

#include "nckit/enumerate.hpp"
#include "nckit/graphs.hpp"
#include "support.hpp"

using namespace nckit;

namespace {
const char* kSevenPointGraph = "ncg:7:1-3,1-4,2-3,3-4,4-7,5-6,5-7,6-7";
const char* kEightPointTree = "nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8";

std::string canonicalText(const char* graph) {
  return serialize(canonicalSpanningTree(parseGraph(graph)));
}
}  // namespace

TEST_CASE("canonicalSpanningTree") {
  CHECK(canonicalText(kSevenPointGraph) == "nct:7:1-4,2-3,3-4,4-7,5-7,6-7");
  CHECK(canonicalText("ncg:3:1-2,1-3,2-3") == "nct:3:1-3,2-3");
  CHECK(canonicalText("ncg:4:1-2,2-3,3-4") == "nct:4:1-2,2-3,3-4");
  // square with a diagonal: (1,2) leaves with the triangle 1-2-3, then (1,3)
  CHECK(canonicalText("ncg:4:1-2,1-3,1-4,2-3,3-4") == "nct:4:1-4,2-3,3-4");
  for (const auto& t : noncrossingTrees(4)) {
    CHECK(canonicalSpanningTree(NoncrossingGraph::fromTree(t)) == t);
  }
}

TEST_CASE("cycles are traversed in circle order") {
  CHECK(toCycleRep(std::vector<Vertex>{4, 1, 3}).vertices == std::vector<Vertex>{1, 3, 4});
  CHECK(toCycleRep(std::vector<Vertex>{5, 2, 1, 7}).leadingEdge() == Chord{1, 2});
  CHECK(errorOf([] { toCycleRep(std::vector<Vertex>{1, 3, 2, 4}); }) ==
        ErrorCode::InvariantViolated);
}

TEST_CASE("canonical tree does not depend on cycle choice") {
  std::mt19937_64 rng(42);
  for (int v = 1; v <= 6; ++v) {
    for (const auto& g : connectedNCGraphs(v)) {
      const auto reference = canonicalSpanningTree(g);
      for (int i = 0; i < 40; ++i) REQUIRE(canonicalSpanningTree(g, rng) == reference);
    }
  }
}

TEST_CASE("companionEdge") {
  CHECK(companionEdge(parseTree("nct:3:1-3,2-3"), {3, 2}) == Chord{1, 2});
  CHECK(companionEdge(parseTree(kEightPointTree), {4, 2}) == Chord{1, 2});
  CHECK(companionEdge(parseTree("nct:4:1-4,3-4,2-3"), {3, 2}) == Chord{1, 2});
  CHECK(companionEdge(parseTree("nct:4:1-4,3-4,2-3"), {4, 3}) == Chord{1, 3});
  CHECK(companionEdge(parseTree(kEightPointTree), {7, 6}) == Chord{5, 6});
  CHECK(companionEdge(parseTree(kEightPointTree), {7, 5}) == Chord{1, 5});
  const auto sevenPointTree = parseTree("nct:7:1-4,2-3,3-4,4-7,5-7,6-7");
  CHECK(companionEdge(sevenPointTree, {7, 5}) == Chord{4, 5});
  CHECK(companionEdge(sevenPointTree, {4, 3}) == Chord{1, 3});
  CHECK(errorOf([] { companionEdge(parseTree(kEightPointTree), {1, 4}); }) == ErrorCode::NotADescent);
  CHECK(errorOf([] { companionEdge(parseTree(kEightPointTree), {7, 2}); }) == ErrorCode::NotADescent);
}

TEST_CASE("assemble") {
  const auto path = parseTree("nct:3:1-2,2-3");
  CHECK(serialize(assemble(path, {})) == "ncg:3:1-2,2-3");
  const auto chain = parseTree("nct:3:1-3,2-3");
  const std::vector<Descent> one{{3, 2}};
  CHECK(serialize(assemble(chain, one)) == "ncg:3:1-2,1-3,2-3");
  const auto longer = parseTree("nct:4:1-4,3-4,2-3");
  const auto both = descents(longer);
  const auto g = assemble(longer, both);
  CHECK(serialize(g) == "ncg:4:1-2,1-3,1-4,2-3,3-4");
  CHECK(canonicalSpanningTree(g) == longer);
  CHECK(saturatedDescents(g) == both);
}

TEST_CASE("free edges and saturation") {
  const auto sevenPoint = parseGraph(kSevenPointGraph);
  CHECK(freeEdges(sevenPoint) == std::vector<Chord>{{1, 3}, {5, 6}});
  CHECK(freeEdges(parseGraph("ncg:4:1-2,1-3,1-4")).empty());
  CHECK(freeEdges(parseGraph("ncg:3:1-2,1-3,2-3")) == std::vector<Chord>{{1, 2}});

  CHECK(saturated(parseGraph("ncg:3:1-2,1-3,2-3"), {3, 2}));
  CHECK_FALSE(saturated(parseGraph("ncg:3:1-3,2-3"), {3, 2}));
  // canonical tree descents: (4,3) companion (1,3); (3,2) companion (1,2);
  // (7,6) companion (5,6); (7,5) companion (4,5).
  CHECK(saturated(sevenPoint, {4, 3}));
  CHECK_FALSE(saturated(sevenPoint, {3, 2}));
  CHECK(saturated(sevenPoint, {7, 6}));
  CHECK_FALSE(saturated(sevenPoint, {7, 5}));
  CHECK(saturatedDescents(sevenPoint) == std::vector<Descent>{{4, 3}, {7, 6}});
}

TEST_CASE("the marked-graph involution") {
  const auto triangle = parseMarkedGraph("ncg:3:1-2,1-3,2-3");
  const auto path = parseMarkedGraph("ncg:3:1-3,2-3");
  CHECK(toggleFirstUnmarkedCompanion(triangle) == path);
  CHECK(toggleFirstUnmarkedCompanion(path) == triangle);
  const auto marked = parseMarkedGraph("ncg:3:1-2*,1-3,2-3");
  CHECK(allDescentsMarked(marked));
  CHECK(errorOf([&] { toggleFirstUnmarkedCompanion(marked); }) ==
        ErrorCode::AllDescentsMarked);
  // trees without descents are fixed points too
  CHECK(allDescentsMarked(parseMarkedGraph("ncg:3:1-2,1-3")));
}

TEST_CASE("assembly is a bijection onto connected graphs") {
  for (int n = 1; n <= 5; ++n) {
    std::set<NoncrossingGraph> images;
    std::size_t pairs = 0;
    for (const auto& t : noncrossingTrees(n)) {
      const auto all = descents(t);
      for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask) {
        std::vector<Descent> chosen;
        for (std::size_t b = 0; b < all.size(); ++b)
          if (mask >> b & 1) chosen.push_back(all[b]);
        const auto g = assemble(t, chosen);
        ++pairs;
        REQUIRE(g.edgeCount() == n + static_cast<int>(chosen.size()));
        REQUIRE(canonicalSpanningTree(g) == t);
        REQUIRE(saturatedDescents(g) == chosen);
        images.insert(g);
      }
    }
    std::set<NoncrossingGraph> enumerated;
    for (const auto& g : connectedNCGraphs(n + 1)) enumerated.insert(g);
    CHECK(images.size() == pairs);
    CHECK(images == enumerated);
  }
}
