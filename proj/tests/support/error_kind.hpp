#pragma once

#include <optional>

#include "ppc/error.hpp"

// Kind of the ppc::Error thrown by f, or nullopt if it returns normally.
template <typename F>
std::optional<ppc::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const ppc::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}
