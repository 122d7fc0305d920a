#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppc/digraph.hpp"
#include "ppc/homsearch.hpp"
#include "ppc/ppcons.hpp"
#include "ppc/rect.hpp"

namespace ppc {

enum class Verdict { EquivalentP1, EquivalentP2, StrictlyBelow };

std::string_view to_string(Verdict verdict) noexcept;

/// A submaximal digraph that the classified digraph pp constructs.
struct UpperBound {
  enum class Kind { T3, Cycle };
  Kind kind = Kind::T3;

  // T3: the core is not totally rectangular; the construction certifies it.
  std::optional<T3Construction> t3;

  // Cycle: Pol(core) fails the cyclic condition of this prime arity.
  std::size_t prime = 0;
  bool divides_shortest_cycle = false;

  /// "T3" or "C_<p>".
  std::string name() const;
};

/// Condition name ("maltsev", "cyclic:<n>") and whether Pol(core) satisfies it.
using SignatureEntry = std::pair<std::string, bool>;

struct Classification {
  Verdict verdict = Verdict::EquivalentP1;
  CoreResult core;
  std::vector<UpperBound> upper_bounds;  // T3 first, then primes ascending
  std::vector<SignatureEntry> signature;
};

/// Primes p with 2 <= p <= bound, ascending.
std::vector<std::size_t> primes_up_to(std::size_t bound);

/// Places g relative to P1, P2 and the submaximal digraphs T3 and C_p. Cyclic
/// conditions are checked for every prime up to `prime_bound` (default: the
/// number of vertices of the core). Throws InternalInconsistency if a
/// totally rectangular core is neither a path nor a union of cycles, or if a
/// cycle bound cannot be confirmed.
Classification classify(const Digraph& g, std::optional<std::size_t> prime_bound = std::nullopt,
                        Limits limits = {});

/// Maltsev and the cyclic conditions of the given arities, evaluated on the
/// core of g by indicator search.
std::vector<SignatureEntry> signature(const Digraph& g, const std::vector<std::size_t>& arities,
                                      Limits limits = {});

}  // namespace ppc
