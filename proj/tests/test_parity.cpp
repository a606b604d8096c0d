#include <doctest.h>

#include "nckit/counting.hpp"
#include "nckit/enumerate.hpp"
#include "nckit/parity.hpp"
#include "nckit/represent.hpp"
#include "support.hpp"

using namespace nckit;

namespace {
std::string phiText(const char* lr) { return serialize(phi(parseLRTree(lr))); }
}  // namespace

TEST_CASE("treeParity") {
  CHECK(treeParity(parseTree("nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8")) == Parity::Odd);
  CHECK(treeParity(parseTree("nct:4:1-2,1-3,1-4")) == Parity::Even);
  CHECK(treeParity(parseTree("nct:3:1-3,2-3")) == Parity::Odd);
}

TEST_CASE("classifyVertex") {
  // even tree (two descents); the root child has children [L, L]
  const auto evenLL = parseLRTree("(R(L()L()))");
  CHECK(classifyVertex(evenLL, {0}) == VertexClass::Proper);
  CHECK(classifyVertex(evenLL, {0, 1}) == VertexClass::Proper);
  const auto evenR = parseLRTree("(R(R()))");
  CHECK(classifyVertex(evenR, {0}) == VertexClass::Improper);
  const auto odd = parseLRTree("(R(L()))");
  CHECK(classifyVertex(odd, {0, 0}) == VertexClass::Proper);
  CHECK(classifyVertex(odd, {0}) == VertexClass::Improper);
  CHECK(errorOf([&] { classifyVertex(odd, {}); }) == ErrorCode::RootNotClassifiable);
}

TEST_CASE("isProper") {
  CHECK(isProper(parseTree("nct:3:1-2,1-3")));
  CHECK_FALSE(isProper(parseTree("nct:3:1-2,2-3")));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : noncrossingTrees(n)) {
      if (treeParity(t) == Parity::Odd) REQUIRE_FALSE(isProper(t));
    }
  }
}

TEST_CASE("firstImproper") {
  CHECK(firstImproper(parseLRTree("(R(R()))")) == NodePath{0});
  CHECK(firstImproper(parseLRTree("(R(L()))")) == NodePath{0});
  CHECK(firstImproper(parseLRTree("(R(R()R())R(L()))")) == NodePath{1});
  CHECK(errorOf([] { firstImproper(parseLRTree("(R()R())")); }) == ErrorCode::TreeIsProper);
}

TEST_CASE("phi examples") {
  CHECK(phiText("(R(L()))") == "(R(R()))");
  CHECK(phiText("(R(R()))") == "(R(L()))");
  CHECK(phiText("(R(R())R(L()))") == "(R(L())R(L()))");
  CHECK(phiText("(R(L())R(L()))") == "(R(R())R(L()))");
  CHECK(phiText("(R(R()R())R(L()))") == "(R(L()L())R(R()))");
  CHECK(phiText("(R(L()L())R(R()))") == "(R(R()R())R(L()))");
  CHECK(errorOf([] { phi(parseLRTree("(R()R())")); }) == ErrorCode::ProperTreeInput);
  CHECK(serialize(phi(parseTree("nct:3:1-3,2-3"))) == "nct:3:1-2,2-3");
}

TEST_CASE("phi is a fixed-point-free parity-reversing involution") {
  for (int n = 1; n <= 7; ++n) {
    ExactInt evenMinusOdd = 0;
    std::size_t proper = 0;
    for (const auto& lr : lrTrees(n)) {
      evenMinusOdd += treeParity(lr) == Parity::Even ? 1 : -1;
      if (isProper(lr)) {
        ++proper;
        continue;
      }
      const LRTree image = phi(lr);  // the constructor re-checks the L/R invariants
      REQUIRE(image != lr);
      REQUIRE(treeParity(image) != treeParity(lr));
      REQUIRE((descentCount(image) - descentCount(lr)) % 2 != 0);
      REQUIRE_FALSE(isProper(image));
      REQUIRE(firstImproper(image) == firstImproper(lr));
      REQUIRE(phi(image) == lr);
    }
    CHECK(evenMinusOdd == proper);
    CHECK(evenMinusOdd == symmetricTernaryCount(n));
  }
}
