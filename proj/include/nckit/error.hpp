#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nckit {

enum class ErrorCode {
  ParseError,
  NotATree,
  CrossingPair,
  InvalidGraph,
  InvalidMark,
  NotTernaryTree,
  InvalidLRTree,
  NotEvenTree,
  NotProperTree,
  NotSymmetric,
  RootNotClassifiable,
  TreeIsProper,
  ProperTreeInput,
  NotADescent,
  NoCandidate,
  AllDescentsMarked,
  NegativeUpperIndex,
  GuardExceeded,
  InvariantViolated,
};

std::string_view errorName(ErrorCode code) noexcept;

/// Every library failure is reported as an Error carrying a stable code;
/// the CLI prints errorName(code()) verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(errorName(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errorName(code_); }

 private:
  ErrorCode code_;
};

/// Position-carrying parse failure.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& detail)
      : Error(ErrorCode::ParseError,
              "at position " + std::to_string(position) + ": " + detail),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nckit
