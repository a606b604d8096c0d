#pragma once

// Enumeration-backed cross-checks. Each check walks an exhaustive family and
// reports one row per parameter value, comparing a counted quantity with the
// quantity it must equal.

#include <cstdint>

#include "nckit/counting.hpp"

namespace nckit {

/// Stream count of noncrossing trees against the closed form, n = 0..maxN.
Report checkTreeCounts(int maxN);
/// Stream equals the chord-subset oracle as a set (n <= 7).
Report checkTreeOracle(int maxN);
/// Trees by descent count against treesWithDescents, every (n, k).
Report checkDescentDistribution(int maxN);
/// Counts of valid L/R trees against the tree count; the L/R round trip in
/// both directions and the L-count/descent agreement on every tree.
Report checkRepresentation(int maxN);
/// e_n - o_n against the number of proper trees; the row also fails if
/// the proper count differs from symmetricTernaryCount(n).
Report checkEvenMinusOdd(int maxN);
/// The parity involution on improper trees: valid, improper, parity flipped,
/// no fixed point, self-inverse.
Report checkPhiInvolution(int maxN);
/// psi on even plane trees with 2n edges, n = 0..maxN: round trip, image is
/// every ternary tree, counts equal the tree count.
Report checkPsiBijection(int maxN);
/// sigma on proper trees: injective, symmetric image equal to the generated
/// symmetric family, inverse round trip.
Report checkSigmaBijection(int maxN);
/// Randomized cycle choice never changes the canonical spanning tree and
/// every cycle met is in circle order, for graphs on 1..maxVertices points.
Report checkCanonicalConfluence(int maxVertices, int orders = 200, std::uint64_t seed = 1);
/// (tree, descent subset) -> graph is a bijection onto connected graphs on
/// n + 1 points; per-edge-count totals against connectedGraphCount.
Report checkHoughBijection(int maxN);
/// Marked-graph involution: self-inverse, flips free-edge parity, stays off
/// the fixed class, and the fixed class has treesWithDescents(n, k) members.
Report checkMarkedInvolution(int maxN);
/// |graphs with m edges and k marks| = C(m-n, k) N(n, m), and the signed
/// sum over m of those counts equals (-1)^k d(n, k).
Report checkMarkedCounts(int maxN);

}  // namespace nckit
