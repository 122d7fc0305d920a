#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ppc/digraph.hpp"

namespace ppc {

/// base^exp, throwing BudgetExceeded (naming `what` and the required size)
/// when the result would exceed `budget`.
std::size_t checked_power(std::size_t base, std::size_t exp,
                          std::size_t budget, std::string_view what);

/// Mixed-radix encoding of a tuple over {0..base-1}, first coordinate most
/// significant.
inline std::size_t tuple_index(std::span<const Vertex> tuple,
                               std::size_t base) noexcept {
  std::size_t index = 0;
  for (Vertex x : tuple) index = index * base + x;
  return index;
}

inline void tuple_decode(std::size_t index, std::size_t base,
                         std::span<Vertex> out) noexcept {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Vertex>(index % base);
    index /= base;
  }
}

/// Advances `tuple` to its lexicographic successor; false after the last one.
inline bool tuple_next(std::span<Vertex> tuple, std::size_t base) noexcept {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < base) return true;
    tuple[i] = 0;
  }
  return false;
}

}  // namespace ppc
