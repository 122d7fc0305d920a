#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ppc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Default cap on the vertex count of any product or power construction.
inline constexpr std::size_t kDefaultVertexBudget = 2'000'000;

/// Finite digraph on vertices 0..n-1. Loops are allowed, parallel edges are
/// not. Immutable after construction; edges are kept sorted.
class Digraph {
 public:
  /// Throws EmptyVertexSet when n == 0 and EndpointOutOfRange for bad edges.
  /// Duplicate edges are collapsed.
  Digraph(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> out(Vertex v) const noexcept {
    return {out_adj_.data() + out_off_[v], out_adj_.data() + out_off_[v + 1]};
  }
  std::span<const Vertex> in(Vertex v) const noexcept {
    return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
  }
  std::size_t out_degree(Vertex v) const noexcept {
    return out_off_[v + 1] - out_off_[v];
  }
  std::size_t in_degree(Vertex v) const noexcept {
    return in_off_[v + 1] - in_off_[v];
  }

  bool has_edge(Vertex u, Vertex v) const noexcept;
  bool has_loop() const noexcept;

  /// Subgraph induced by `keep`, re-indexed so keep[i] becomes vertex i.
  Digraph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Digraph& a, const Digraph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_off_, in_off_;
  std::vector<Vertex> out_adj_, in_adj_;
};

Digraph build(std::size_t n, std::span<const Edge> edges);

enum class Family { Cycle, Path, TransitiveTournament, Clique };

std::optional<Family> family_from_name(std::string_view name);

Digraph gen_family(Family kind, std::size_t k);

inline Digraph cycle(std::size_t k) { return gen_family(Family::Cycle, k); }
inline Digraph path(std::size_t k) { return gen_family(Family::Path, k); }
inline Digraph transitive_tournament(std::size_t k) {
  return gen_family(Family::TransitiveTournament, k);
}
inline Digraph clique(std::size_t k) { return gen_family(Family::Clique, k); }

/// k-th direct power. Tuples are indexed mixed-radix, first coordinate most
/// significant.
Digraph direct_power(const Digraph& g, std::size_t k,
                     std::size_t vertex_budget = kDefaultVertexBudget);

Digraph disjoint_union(std::span<const Digraph> parts);

enum class ShapeKind { Path, DisjointUnionOfCycles, Other };

struct ShapeReport {
  ShapeKind kind = ShapeKind::Other;
  std::size_t path_length = 0;             // vertex count when kind == Path
  std::vector<std::size_t> cycle_lengths;  // by lowest vertex of each cycle
  std::optional<std::size_t> shortest_cycle;
};

ShapeReport shape_of(const Digraph& g);

/// Length of a shortest directed cycle (a loop counts as 1), if any.
std::optional<std::size_t> shortest_cycle(const Digraph& g);

enum class Format { Json, EdgeList, Dot };

std::optional<Format> format_from_name(std::string_view name);

std::string encode(const Digraph& g, Format format);

/// Throws ParseError with a source position, EndpointOutOfRange or
/// EmptyVertexSet for ill-formed graphs, and FormatUnsupported for DOT.
Digraph decode(std::string_view text, Format format);

/// Picks JSON when the first non-blank character is '{', edge list otherwise.
Digraph decode_auto(std::string_view text);

}  // namespace ppc
