#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ppc/digraph.hpp"

namespace ppc {

struct SearchBudget {
  std::uint64_t node_limit = 10'000'000;
};

/// Resource caps threaded through constructions and condition checks.
struct Limits {
  std::size_t vertex_budget = kDefaultVertexBudget;
  SearchBudget search;
};

/// A vertex map certified to preserve edges between two digraphs.
class Hom {
 public:
  /// Throws InternalInconsistency if `map` is not a homomorphism.
  Hom(const Digraph& source, const Digraph& target, std::vector<Vertex> map);

  std::span<const Vertex> map() const noexcept { return map_; }
  Vertex operator()(Vertex v) const noexcept { return map_[v]; }
  std::size_t source_size() const noexcept { return map_.size(); }
  std::size_t target_size() const noexcept { return target_size_; }

  /// Independent re-check against concrete digraphs.
  bool verify(const Digraph& source, const Digraph& target) const noexcept;

  /// `second` after `first`.
  friend Hom compose(const Hom& first, const Hom& second);

  static bool preserves_edges(const Digraph& source, const Digraph& target,
                              std::span<const Vertex> map) noexcept;

 private:
  Hom(std::vector<Vertex> map, std::size_t target_size)
      : map_(std::move(map)), target_size_(target_size) {}

  std::vector<Vertex> map_;
  std::size_t target_size_;
};

Hom compose(const Hom& first, const Hom& second);

/// Source vertex -> required target vertex.
using Pin = std::pair<Vertex, Vertex>;

/// Reusable backtracking solver for homomorphisms source -> target.
///
/// Domains are bitsets over the target; arc consistency is maintained along
/// both orientations of every source edge. Variables are chosen smallest
/// domain first (lowest index on ties) and values tried in increasing order,
/// one weakly connected component of the source at a time. The solver keeps
/// references to both digraphs.
class HomSolver {
 public:
  HomSolver(const Digraph& source, const Digraph& target, SearchBudget budget = {});
  ~HomSolver();
  HomSolver(HomSolver&&) noexcept;
  HomSolver& operator=(HomSolver&&) noexcept;

  /// Throws BudgetExhausted when the node limit is hit and PinOutOfRange for
  /// bad pins.
  std::optional<std::vector<Vertex>> solve(std::span<const Pin> pins = {});

  /// Arc-consistent domains under `pins`, one sorted list per source vertex;
  /// nullopt if propagation wipes out a domain.
  std::optional<std::vector<std::vector<Vertex>>> propagate(std::span<const Pin> pins = {});

  /// Nodes (value assignments) spent by the last solve.
  std::uint64_t nodes() const noexcept;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

std::optional<Hom> find_hom(const Digraph& source, const Digraph& target,
                            std::span<const Pin> pins = {}, SearchBudget budget = {});

struct HomEquivalence {
  bool equivalent = false;
  std::optional<Hom> forward;   // g -> h
  std::optional<Hom> backward;  // h -> g
};

HomEquivalence hom_equivalent(const Digraph& g, const Digraph& h, SearchBudget budget = {});

struct CoreResult {
  Digraph core;
  std::vector<Vertex> kept;  // kept[i] is the original vertex of core vertex i
  Hom retraction;            // original -> core
};

CoreResult core_of(const Digraph& g, SearchBudget budget = {});

bool is_core(const Digraph& g, SearchBudget budget = {});

}  // namespace ppc
