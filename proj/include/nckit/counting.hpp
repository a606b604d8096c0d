#pragma once

// Exact closed forms for the counts of noncrossing trees, symmetric ternary
// trees and connected noncrossing graphs, plus the alternating-sum and
// binomial identities that tie them together.

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nckit {

using ExactInt = boost::multiprecision::cpp_int;

/// C(a, b); 0 when b < 0 or b > a. Throws NegativeUpperIndex for a < 0.
ExactInt binom(long a, long b);

/// Quotient of an exact division. Throws InvariantViolated on a remainder.
ExactInt exactDivide(const ExactInt& numerator, const ExactInt& denominator);

/// C(2n, n) / (n + 1).
ExactInt catalan(int n);
/// C(3n, n) / (2n + 1): noncrossing trees with n edges.
ExactInt noncrossingTreeCount(int n);
/// Symmetric ternary trees with n internal nodes.
ExactInt symmetricTernaryCount(int n);
/// Noncrossing trees with n edges and k descents:
/// C(n-1+k, n-1) C(2n-k, n+1) / n.
ExactInt treesWithDescents(int n, int k);
/// Connected noncrossing graphs on n + 1 points with k edges:
/// C(3n, n+1+k) C(k-1, n-1) / n, zero outside n <= k <= 2n - 1.
ExactInt connectedGraphCount(int n, int k);

/// (even, odd) noncrossing trees with n edges, summed from the descent
/// distribution. Throws InvariantViolated if the sum is not the tree count
/// or the difference is not symmetricTernaryCount(n).
std::pair<ExactInt, ExactInt> evenOddSplit(int n);

struct ReportRow {
  std::string identity;
  std::string parameters;
  ExactInt lhs;
  ExactInt rhs;
  bool pass = false;
};

using Report = std::vector<ReportRow>;

bool allPass(const Report& report);
/// Header line plus one line per row: identity,parameters,lhs,rhs,PASS|FAIL.
std::string toCsv(const Report& report);
/// One JSON object per row.
std::string toJsonLines(const Report& report);

/// For k = 0..n-1: sum over m of (-1)^(m-n) C(m-n, k) N(n, m) against
/// (-1)^k d(n, k).
Report verifyAlternatingSum(int n);

/// For m = 1..mMax, the even-n and odd-n forms of e_n - o_n = s_n written
/// as alternating binomial sums.
Report verifyParityBinomialIdentities(int mMax);

/// For k = 0..n-1, the alternating triple-binomial sum against
/// C(n-1+k, n-1) C(2n-k, n+1).
Report verifyConvolutionIdentity(int n);

/// C(n-m, k) = sum over i + j = k of (-1)^i C(m+i-1, i) C(n, j), for
/// 1 <= m <= n and 0 <= k <= n.
Report verifyVandermonde(int n);

/// Every closed-form division is exact for 0 <= n <= nMax (all k).
Report verifyIntegrality(int nMax);

}  // namespace nckit
