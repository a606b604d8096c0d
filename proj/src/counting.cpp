#include "nckit/counting.hpp"

#include <json.hpp>

#include "nckit/error.hpp"

namespace nckit {

namespace {

ExactInt sign(long exponent) { return exponent % 2 == 0 ? ExactInt(1) : ExactInt(-1); }

std::string params(std::initializer_list<std::pair<const char*, long>> values) {
  std::string out;
  for (const auto& [name, value] : values) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

ReportRow row(std::string identity, std::string parameters, ExactInt lhs, ExactInt rhs) {
  const bool pass = lhs == rhs;
  return {std::move(identity), std::move(parameters), std::move(lhs), std::move(rhs), pass};
}

}  // namespace

ExactInt binom(long a, long b) {
  if (a < 0) {
    throw Error(ErrorCode::NegativeUpperIndex,
                "C(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  ExactInt result = 1;
  // result = C(a - b + i, i) after step i, so every division is exact
  for (long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result = exactDivide(result, i);
  }
  return result;
}

ExactInt exactDivide(const ExactInt& numerator, const ExactInt& denominator) {
  ExactInt quotient;
  ExactInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw Error(ErrorCode::InvariantViolated,
                numerator.str() + " is not divisible by " + denominator.str());
  }
  return quotient;
}

ExactInt catalan(int n) {
  if (n < 0) return 0;
  return exactDivide(binom(2L * n, n), n + 1);
}

ExactInt noncrossingTreeCount(int n) {
  if (n < 0) return 0;
  return exactDivide(binom(3L * n, n), 2L * n + 1);
}

ExactInt symmetricTernaryCount(int n) {
  if (n < 0) return 0;
  const long m = n / 2;
  if (n % 2 == 0) return exactDivide(binom(3 * m, m), 2 * m + 1);
  return exactDivide(binom(3 * m + 1, m + 1), 2 * m + 1);
}

ExactInt treesWithDescents(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  return exactDivide(binom(n - 1L + k, n - 1L) * binom(2L * n - k, n + 1L), n);
}

ExactInt connectedGraphCount(int n, int k) {
  if (n < 0) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  if (k < n || k > 2 * n - 1) return 0;
  return exactDivide(binom(3L * n, n + 1L + k) * binom(k - 1L, n - 1L), n);
}

std::pair<ExactInt, ExactInt> evenOddSplit(int n) {
  ExactInt even = 0;
  ExactInt odd = 0;
  for (int k = 0; k <= std::max(n - 1, 0); ++k) {
    (k % 2 == 0 ? even : odd) += treesWithDescents(n, k);
  }
  if (even + odd != noncrossingTreeCount(n)) {
    throw Error(ErrorCode::InvariantViolated, "descent distribution does not sum to c_n");
  }
  if (even - odd != symmetricTernaryCount(n)) {
    throw Error(ErrorCode::InvariantViolated, "e_n - o_n differs from s_n");
  }
  return {even, odd};
}

bool allPass(const Report& report) {
  return std::all_of(report.begin(), report.end(), [](const ReportRow& r) { return r.pass; });
}

std::string toCsv(const Report& report) {
  std::string out = "identity,parameters,lhs,rhs,result\n";
  for (const auto& r : report) {
    out += r.identity + "," + r.parameters + "," + r.lhs.str() + "," + r.rhs.str() + "," +
           (r.pass ? "PASS" : "FAIL") + "\n";
  }
  return out;
}

std::string toJsonLines(const Report& report) {
  std::string out;
  for (const auto& r : report) {
    nlohmann::ordered_json line = {{"identity", r.identity},
                                   {"parameters", r.parameters},
                                   {"lhs", r.lhs.str()},
                                   {"rhs", r.rhs.str()},
                                   {"result", r.pass ? "PASS" : "FAIL"}};
    out += line.dump() + "\n";
  }
  return out;
}

Report verifyAlternatingSum(int n) {
  Report report;
  for (int k = 0; k <= n - 1; ++k) {
    ExactInt lhs = 0;
    for (int m = n; m <= 2 * n - 1; ++m) {
      lhs += sign(m - n) * binom(m - n, k) * connectedGraphCount(n, m);
    }
    report.push_back(row("alternating-sum", params({{"n", n}, {"k", k}}), lhs,
                         sign(k) * treesWithDescents(n, k)));
  }
  return report;
}

Report verifyParityBinomialIdentities(int mMax) {
  Report report;
  for (long m = 1; m <= mMax; ++m) {
    ExactInt first = 0;
    for (long k = 0; k <= 2 * m - 1; ++k) {
      first += sign(k) * binom(2 * m - 1 + k, k) * binom(4 * m - k, 2 * m + 1);
    }
    // The right side must be an integer; exactDivide throws otherwise.
    ExactInt firstRhs = exactDivide(2 * m * binom(3 * m, m), 2 * m + 1);
    report.push_back(row("even-n-binomial", params({{"m", m}}), first, firstRhs));

    ExactInt second = 0;
    for (long k = 0; k <= 2 * m; ++k) {
      second += sign(k) * binom(2 * m + k, k) * binom(4 * m + 2 - k, 2 * m + 2);
    }
    report.push_back(row("odd-n-binomial", params({{"m", m}}), second, binom(3 * m + 1, m + 1)));
  }
  return report;
}

Report verifyConvolutionIdentity(int n) {
  Report report;
  for (long k = 0; k <= n - 1; ++k) {
    ExactInt lhs = 0;
    for (long m = n; m <= 2L * n - 1; ++m) {
      lhs += sign(m - n - k) * binom(3L * n, n + 1 + m) * binom(m - 1, n - 1) * binom(m - n, k);
    }
    report.push_back(row("convolution", params({{"n", n}, {"k", k}}), lhs,
                         binom(n - 1 + k, n - 1) * binom(2L * n - k, n + 1)));
  }
  return report;
}

Report verifyVandermonde(int n) {
  Report report;
  for (long m = 1; m <= n; ++m) {
    for (long k = 0; k <= n; ++k) {
      ExactInt rhs = 0;
      for (long i = 0; i <= k; ++i) rhs += sign(i) * binom(m + i - 1, i) * binom(n, k - i);
      report.push_back(
          row("vandermonde", params({{"n", n}, {"m", m}, {"k", k}}), binom(n - m, k), rhs));
    }
  }
  return report;
}

Report verifyIntegrality(int nMax) {
  Report report;
  auto check = [&](const char* name, long n, long k, const ExactInt& num, long den) {
    ExactInt remainder = num % den;
    report.push_back(row(name, k < 0 ? params({{"n", n}}) : params({{"n", n}, {"k", k}}),
                         remainder, 0));
  };
  for (long n = 0; n <= nMax; ++n) {
    check("c-division", n, -1, binom(3 * n, n), 2 * n + 1);
    const long m = n / 2;
    check("s-division", n, -1, n % 2 == 0 ? binom(3 * m, m) : binom(3 * m + 1, m + 1), 2 * m + 1);
    if (n == 0) continue;
    for (long k = 0; k <= n - 1; ++k) {
      check("d-division", n, k, binom(n - 1 + k, n - 1) * binom(2 * n - k, n + 1), n);
    }
    for (long k = n; k <= 2 * n - 1; ++k) {
      check("N-division", n, k, binom(3 * n, n + 1 + k) * binom(k - 1, n - 1), n);
    }
  }
  return report;
}

}  // namespace nckit
