#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

namespace {

// Plain odometer over all maps, checking each edge constraint as soon as both
// endpoints are assigned.
bool extend(const Digraph& g, const Digraph& h, std::vector<Vertex>& map, std::size_t next,
            const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (next == g.size()) return visit(map);
  for (Vertex c = 0; c < h.size(); ++c) {
    map[next] = c;
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      if (u <= next && v <= next && (u == next || v == next) && !h.has_edge(map[u], map[v])) {
        ok = false;
        break;
      }
    }
    if (ok && !extend(g, h, map, next + 1, visit)) return false;
  }
  return true;
}

}  // namespace

void for_each_hom(const Digraph& g, const Digraph& h,
                  const std::function<bool(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> map(g.size(), 0);
  extend(g, h, map, 0, visit);
}

bool hom_exists(const Digraph& g, const Digraph& h) {
  bool found = false;
  for_each_hom(g, h, [&](const auto&) {
    found = true;
    return false;
  });
  return found;
}

std::size_t hom_count(const Digraph& g, const Digraph& h) {
  std::size_t count = 0;
  for_each_hom(g, h, [&](const auto&) {
    ++count;
    return true;
  });
  return count;
}

bool is_hom(const Digraph& g, const Digraph& h, std::span<const Vertex> map) {
  if (map.size() != g.size()) return false;
  for (Vertex m : map)
    if (m >= h.size()) return false;
  for (auto [u, v] : g.edges())
    if (!h.has_edge(map[u], map[v])) return false;
  return true;
}

std::size_t core_size(const Digraph& g) {
  std::size_t best = g.size();
  for_each_hom(g, g, [&](const std::vector<Vertex>& map) {
    std::set<Vertex> image(map.begin(), map.end());
    best = std::min(best, image.size());
    return true;
  });
  return best;
}

bool is_core(const Digraph& g) { return core_size(g) == g.size(); }

std::vector<std::vector<bool>> walks(const Digraph& g, std::size_t k) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (Vertex s = 0; s < n; ++s) {
    std::vector<bool> frontier(n, false);
    frontier[s] = true;
    for (std::size_t step = 0; step < k; ++step) {
      std::vector<bool> next(n, false);
      for (auto [u, v] : g.edges())
        if (frontier[u]) next[v] = true;
      frontier = std::move(next);
    }
    reach[s] = frontier;
  }
  return reach;
}

bool k_rectangular(const Digraph& g, std::size_t k) {
  auto r = walks(g, k);
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (r[a][b] && r[c][b] && r[c][d] && !r[a][d]) return false;
  return true;
}

bool totally_rectangular(const Digraph& g) {
  const std::size_t n = g.size();
  for (std::size_t k = 1; k <= 2 * (n * n + n); ++k)
    if (!k_rectangular(g, k)) return false;
  return true;
}

Digraph pp_power(const Digraph& h, const ppc::PpFormula& phi) {
  const std::size_t n = h.size();
  const std::size_t d = phi.dimension();
  const std::size_t m = phi.existentials();
  std::size_t vertices = 1;
  for (std::size_t i = 0; i < d; ++i) vertices *= n;

  auto digits = [n](std::size_t index, std::size_t len) {
    std::vector<Vertex> out(len);
    for (std::size_t i = len; i-- > 0;) {
      out[i] = static_cast<Vertex>(index % n);
      index /= n;
    }
    return out;
  };
  std::size_t assignments = 1;
  for (std::size_t i = 0; i < m; ++i) assignments *= n;

  std::vector<ppc::Edge> edges;
  for (std::size_t ui = 0; ui < vertices; ++ui) {
    auto u = digits(ui, d);
    for (std::size_t vi = 0; vi < vertices; ++vi) {
      auto v = digits(vi, d);
      for (std::size_t ei = 0; ei < assignments; ++ei) {
        auto e = digits(ei, m);
        auto value = [&](const ppc::Term& t) {
          switch (t.block) {
            case ppc::Term::Block::X: return u[t.index];
            case ppc::Term::Block::Y: return v[t.index];
            default: return e[t.index];
          }
        };
        bool holds = true;
        for (const ppc::Atom& a : phi.atoms()) {
          switch (a.kind) {
            case ppc::Atom::Kind::Edge: holds = h.has_edge(value(a.lhs), value(a.rhs)); break;
            case ppc::Atom::Kind::Eq: holds = value(a.lhs) == value(a.rhs); break;
            case ppc::Atom::Kind::Const: holds = value(a.lhs) == a.constant; break;
            case ppc::Atom::Kind::False: holds = false; break;
          }
          if (!holds) break;
        }
        if (holds) {
          edges.emplace_back(static_cast<Vertex>(ui), static_cast<Vertex>(vi));
          break;
        }
      }
    }
  }
  return Digraph(vertices, std::move(edges));
}

std::vector<Digraph> all_loopless(std::size_t n) {
  std::vector<ppc::Edge> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) arcs.emplace_back(u, v);
  std::vector<Digraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arcs.size()); ++mask) {
    std::vector<ppc::Edge> edges;
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (mask >> i & 1) edges.push_back(arcs[i]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

Digraph random_digraph(std::mt19937_64& rng, std::size_t max_n, double density, bool allow_loops) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::bernoulli_distribution coin(density);
  const std::size_t n = size(rng);
  std::vector<ppc::Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if ((u != v || allow_loops) && coin(rng)) edges.emplace_back(u, v);
  return Digraph(n, std::move(edges));
}

std::size_t ones(std::size_t index, std::size_t dimension) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < dimension; ++i, index /= 2) count += index % 2;
  return count;
}

}  // namespace oracle
