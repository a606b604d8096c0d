#pragma once

#include <optional>

#include "nckit/error.hpp"

/// The code of the nckit::Error thrown by fn, or nullopt if none is thrown.
template <class Fn>
std::optional<nckit::ErrorCode> errorOf(Fn&& fn) {
  try {
    fn();
  } catch (const nckit::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
