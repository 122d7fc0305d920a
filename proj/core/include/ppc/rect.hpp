#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ppc/digraph.hpp"

namespace ppc {

/// Square boolean matrix with bit-packed rows.
class BoolMatrix {
 public:
  explicit BoolMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  static BoolMatrix adjacency(const Digraph& g);

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * words_ + (c >> 6)] >> (c & 63)) & 1U;
  }
  void set(std::size_t r, std::size_t c) noexcept {
    bits_[r * words_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
  }
  std::span<const std::uint64_t> row(std::size_t r) const noexcept {
    return {bits_.data() + r * words_, words_};
  }

  /// Boolean product this * rhs.
  BoolMatrix operator*(const BoolMatrix& rhs) const;

  std::size_t hash() const noexcept;
  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Pairs joined by a walk of length exactly k (vertices may repeat).
struct ReachRelation {
  std::size_t k = 1;
  BoolMatrix matrix{0};

  bool holds(Vertex a, Vertex b) const noexcept { return matrix.get(a, b); }
};

/// Walks of length k a->b, c->b, c->d exist but none a->d.
struct RectWitness {
  std::size_t k = 0;
  Vertex a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const RectWitness&, const RectWitness&) = default;
};

struct RectResult {
  std::optional<RectWitness> violation;
  bool passes() const noexcept { return !violation.has_value(); }
};

/// Throws SizeTooSmall for k == 0.
ReachRelation reach_relation(const Digraph& g, std::size_t k);

/// Checks R_k o R_k^-1 o R_k within R_k; the reported witness is the
/// lexicographically least (a, b, c, d).
RectResult is_k_rectangular(const Digraph& g, std::size_t k);

/// k-rectangularity for every k >= 1. Powers of the adjacency matrix are
/// eventually periodic, so checking stops at the first repeated power.
RectResult is_totally_rectangular(const Digraph& g);

/// A digraph has a Maltsev polymorphism iff it is totally rectangular.
inline RectResult has_maltsev(const Digraph& g) { return is_totally_rectangular(g); }

/// Re-checks a witness by walking frontier sets, without matrix powers.
bool verify_rect_witness(const Digraph& g, const RectWitness& w);

}  // namespace ppc
