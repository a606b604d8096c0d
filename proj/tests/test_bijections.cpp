#include <doctest.h>

#include <set>

#include "nckit/bijections.hpp"
#include "nckit/counting.hpp"
#include "nckit/enumerate.hpp"
#include "nckit/parity.hpp"
#include "nckit/represent.hpp"
#include "support.hpp"

using namespace nckit;

namespace {
std::string psiText(const char* plane) { return serialize(psi(parsePlaneTree(plane))); }
std::string psiInverseText(const char* ternary) {
  return serialize(psiInverse(parseTernaryTree(ternary)));
}
}  // namespace

TEST_CASE("psi") {
  CHECK(psiText("()") == "()");
  CHECK(psiText("(()())") == "(()()())");
  CHECK(psiText("(()()()())") == "(()()(()()()))");
  CHECK(psiText("((()())())") == "((()()())()())");
  CHECK(errorOf([] { psi(parsePlaneTree("(())")); }) == ErrorCode::NotEvenTree);
  try {
    psi(parsePlaneTree("(()(()()()))"));
    FAIL("odd node not reported");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("[1]") != std::string::npos);
  }
}

TEST_CASE("psiInverse") {
  CHECK(psiInverseText("(()()())") == "(()())");
  CHECK(psiInverseText("(()()(()()()))") == "(()()()())");
  CHECK(psiInverseText("()") == "()");
}

TEST_CASE("psi accounting and round trip up to 12 edges") {
  for (int n = 0; n <= 6; ++n) {
    std::size_t count = 0;
    for (const auto& e : evenPlaneTrees(2 * n)) {
      ++count;
      const auto t = psi(e);
      REQUIRE(t.internalCount() == n);
      REQUIRE(edgeCount(t.toPlane()) == 3 * n);  // 2n + 1 leaves, n internal nodes
      REQUIRE(psiInverse(t) == e);
    }
    CHECK(count == noncrossingTreeCount(n));
  }
}

TEST_CASE("reflect and symmetry") {
  CHECK(serialize(reflect(parseTernaryTree("(()()())"))) == "(()()())");
  CHECK(serialize(reflect(parseTernaryTree("((()()())()())"))) == "(()()(()()()))");
  CHECK(isSymmetric(parseTernaryTree("()")));
  CHECK(isSymmetric(parseTernaryTree("(()()())")));
  CHECK_FALSE(isSymmetric(parseTernaryTree("((()()())()())")));
  for (int n = 0; n <= 5; ++n) {
    for (const auto& t : ternaryTrees(n)) {
      CHECK(reflect(reflect(t)) == t);
      CHECK(isSymmetric(t) == (reflect(t) == t));
    }
  }
  CHECK(errorOf([] { SymmetricTernaryTree(parseTernaryTree("((()()())()())")); }) ==
        ErrorCode::NotSymmetric);
}

TEST_CASE("sigma") {
  CHECK(serialize(sigma(parseTree("nct:1:")).tree()) == "()");
  CHECK(serialize(sigma(parseTree("nct:2:1-2")).tree()) == "(()()())");
  CHECK(serialize(sigma(parseTree("nct:3:1-2,1-3")).tree()) == "(()(()()())())");
  CHECK(errorOf([] { sigma(parseTree("nct:3:1-2,2-3")); }) == ErrorCode::NotProperTree);
  CHECK(errorOf([] { sigma(parseTree("nct:3:1-3,2-3")); }) == ErrorCode::NotProperTree);

  // The eight-edge proper tree drawn next to its symmetric ternary image:
  // root subtrees are a node with two leaves, and a node whose children are
  // a node with two leaves followed by a leaf.
  const auto proper = fromLRTree(parseLRTree("(R(L()L())R(L(L()L())L()))"));
  CHECK(isProper(proper));
  const auto image = sigma(proper);
  CHECK(image.tree().internalCount() == 8);
  CHECK(serialize(image.tree()) == "((()()())(((()()())()())()(()()(()()())))(()()()))");
  CHECK(sigmaInverse(image) == proper);
}

TEST_CASE("sigmaInverse") {
  CHECK(serialize(sigmaInverse(SymmetricTernaryTree(TernaryTree{}))) == "nct:1:");
  CHECK(serialize(sigmaInverse(SymmetricTernaryTree(parseTernaryTree("(()()())")))) ==
        "nct:2:1-2");
  CHECK(serialize(sigmaInverse(SymmetricTernaryTree(parseTernaryTree("(()(()()())())")))) ==
        "nct:3:1-2,1-3");
}

TEST_CASE("sigma is a bijection onto symmetric ternary trees") {
  for (int n = 0; n <= 7; ++n) {
    std::set<std::string> images;
    std::size_t proper = 0;
    for (const auto& t : noncrossingTrees(n)) {
      if (!isProper(t)) continue;
      ++proper;
      const auto s = sigma(t);
      REQUIRE(isSymmetric(s.tree()));
      REQUIRE(s.tree().internalCount() == n);
      REQUIRE(sigmaInverse(s) == t);
      images.insert(serialize(s.tree()));
    }
    std::set<std::string> symmetric;
    for (const auto& s : symmetricTernaryTrees(n)) {
      symmetric.insert(serialize(s));
      REQUIRE(sigma(sigmaInverse(SymmetricTernaryTree(s))).tree() == s);
    }
    CHECK(images.size() == proper);
    CHECK(images == symmetric);
    CHECK(proper == symmetricTernaryCount(n));
  }
}
