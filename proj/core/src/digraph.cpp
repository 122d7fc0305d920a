#include "ppc/digraph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "ppc/error.hpp"
#include "ppc/tuples.hpp"

namespace ppc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorKind::EmptyVertexSet: return "EmptyVertexSet";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::SizeTooSmall: return "SizeTooSmall";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FormatUnsupported: return "FormatUnsupported";
    case ErrorKind::PinOutOfRange: return "PinOutOfRange";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::ConstantOutOfRange: return "ConstantOutOfRange";
    case ErrorKind::TermOutOfRange: return "TermOutOfRange";
    case ErrorKind::NotACore: return "NotACore";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::IsTotallyRectangular: return "IsTotallyRectangular";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

std::size_t checked_power(std::size_t base, std::size_t exp,
                          std::size_t budget, std::string_view what) {
  std::size_t result = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::size_t>::max() / base) {
      overflow = true;
      break;
    }
    result *= base;
  }
  if (overflow || result > budget) {
    std::string required =
        overflow ? std::to_string(base) + "^" + std::to_string(exp)
                 : std::to_string(result);
    throw Error(ErrorKind::BudgetExceeded,
                std::string(what) + " needs " + required +
                    " elements, budget is " + std::to_string(budget));
  }
  return result;
}

Digraph::Digraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw Error(ErrorKind::EmptyVertexSet, "digraph needs at least one vertex");
  if (n_ > std::numeric_limits<Vertex>::max())
    throw Error(ErrorKind::BudgetExceeded, "vertex count does not fit the vertex type");
  for (auto [u, v] : edges_) {
    if (u >= n_ || v >= n_) {
      throw Error(ErrorKind::EndpointOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") has an endpoint outside [0," + std::to_string(n_) + ")");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  out_off_.assign(n_ + 1, 0);
  in_off_.assign(n_ + 1, 0);
  for (auto [u, v] : edges_) {
    ++out_off_[u + 1];
    ++in_off_[v + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) {
    out_off_[i + 1] += out_off_[i];
    in_off_[i + 1] += in_off_[i];
  }
  out_adj_.resize(edges_.size());
  in_adj_.resize(edges_.size());
  std::vector<std::size_t> in_fill(in_off_.begin(), in_off_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    out_adj_[i] = v;  // edges are sorted, so each out-list is contiguous
    in_adj_[in_fill[v]++] = u;
  }
}

bool Digraph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= n_ || v >= n_) return false;
  auto row = out(u);
  return std::binary_search(row.begin(), row.end(), v);
}

bool Digraph::has_loop() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.first == e.second; });
}

Digraph Digraph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> position(n_, std::numeric_limits<Vertex>::max());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n_)
      throw Error(ErrorKind::EndpointOutOfRange, "induced: vertex out of range");
    position[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> sub;
  for (auto [u, v] : edges_) {
    if (position[u] != std::numeric_limits<Vertex>::max() &&
        position[v] != std::numeric_limits<Vertex>::max()) {
      sub.emplace_back(position[u], position[v]);
    }
  }
  return Digraph(keep.size(), std::move(sub));
}

Digraph build(std::size_t n, std::span<const Edge> edges) {
  return Digraph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "cycle") return Family::Cycle;
  if (name == "path") return Family::Path;
  if (name == "tournament" || name == "transitive_tournament")
    return Family::TransitiveTournament;
  if (name == "clique") return Family::Clique;
  return std::nullopt;
}

Digraph gen_family(Family kind, std::size_t k) {
  std::size_t min_size = kind == Family::Clique ? 2 : 1;
  if (k < min_size) {
    throw Error(ErrorKind::SizeTooSmall,
                "family size must be at least " + std::to_string(min_size));
  }
  std::vector<Edge> edges;
  auto n = static_cast<Vertex>(k);
  switch (kind) {
    case Family::Cycle:
      for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
      break;
    case Family::Path:
      for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
      break;
    case Family::TransitiveTournament:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case Family::Clique:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          if (u != v) edges.emplace_back(u, v);
      break;
  }
  return Digraph(k, std::move(edges));
}

Digraph direct_power(const Digraph& g, std::size_t k, std::size_t vertex_budget) {
  if (k == 0) throw Error(ErrorKind::SizeTooSmall, "power arity must be at least 1");
  std::size_t n = checked_power(g.size(), k, vertex_budget, "direct power");
  std::size_t m = g.edge_count();
  std::vector<Edge> edges;
  if (m == 0) return Digraph(n, {});
  checked_power(m, k, vertex_budget * 16, "direct power edge set");

  auto base = g.edges();
  std::vector<Vertex> choice(k, 0);  // one base edge per coordinate
  do {
    std::size_t from = 0, to = 0;
    for (Vertex c : choice) {
      from = from * g.size() + base[c].first;
      to = to * g.size() + base[c].second;
    }
    edges.emplace_back(static_cast<Vertex>(from), static_cast<Vertex>(to));
  } while (tuple_next(choice, m));
  return Digraph(n, std::move(edges));
}

Digraph disjoint_union(std::span<const Digraph> parts) {
  if (parts.empty()) throw Error(ErrorKind::EmptyList, "disjoint union of no digraphs");
  std::size_t offset = 0;
  std::vector<Edge> edges;
  for (const Digraph& part : parts) {
    for (auto [u, v] : part.edges()) {
      edges.emplace_back(static_cast<Vertex>(u + offset), static_cast<Vertex>(v + offset));
    }
    offset += part.size();
  }
  return Digraph(offset, std::move(edges));
}

std::optional<std::size_t> shortest_cycle(const Digraph& g) {
  std::optional<std::size_t> best;
  std::vector<std::size_t> dist(g.size());
  std::queue<Vertex> frontier;
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  for (Vertex s = 0; s < g.size(); ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    frontier = {};
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      if (best && dist[u] + 1 >= *best) break;
      for (Vertex v : g.out(u)) {
        if (v == s) {
          best = dist[u] + 1;
          break;
        }
        if (dist[v] == kUnseen) {
          dist[v] = dist[u] + 1;
          frontier.push(v);
        }
      }
    }
  }
  return best;
}

ShapeReport shape_of(const Digraph& g) {
  ShapeReport report;
  report.shortest_cycle = shortest_cycle(g);
  const std::size_t n = g.size();

  bool all_one = true;
  for (Vertex v = 0; v < n; ++v) {
    if (g.in_degree(v) != 1 || g.out_degree(v) != 1) {
      all_one = false;
      break;
    }
  }
  if (all_one) {
    report.kind = ShapeKind::DisjointUnionOfCycles;
    std::vector<bool> seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::size_t length = 0;
      for (Vertex v = s; !seen[v]; v = g.out(v)[0]) {
        seen[v] = true;
        ++length;
      }
      report.cycle_lengths.push_back(length);
    }
    return report;
  }

  if (g.edge_count() + 1 != n || g.has_loop()) return report;
  std::optional<Vertex> start;
  for (Vertex v = 0; v < n; ++v) {
    if (g.in_degree(v) > 1 || g.out_degree(v) > 1) return report;
    if (g.in_degree(v) == 0) {
      if (start) return report;
      start = v;
    }
  }
  if (!start) return report;
  std::size_t visited = 1;
  for (Vertex v = *start; g.out_degree(v) == 1; v = g.out(v)[0]) ++visited;
  if (visited == n) {
    report.kind = ShapeKind::Path;
    report.path_length = n;
  }
  return report;
}

}  // namespace ppc
