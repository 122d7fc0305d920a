#include "ppc/rect.hpp"

#include <bit>
#include <unordered_map>

#include "ppc/error.hpp"

namespace ppc {

BoolMatrix BoolMatrix::adjacency(const Digraph& g) {
  BoolMatrix m(g.size());
  for (auto [u, v] : g.edges()) m.set(u, v);
  return m;
}

BoolMatrix BoolMatrix::operator*(const BoolMatrix& rhs) const {
  BoolMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    std::uint64_t* target = &out.bits_[r * words_];
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = bits_[r * words_ + w]; bits != 0; bits &= bits - 1) {
        std::size_t mid = w * 64 + std::countr_zero(bits);
        const std::uint64_t* src = &rhs.bits_[mid * words_];
        for (std::size_t i = 0; i < words_; ++i) target[i] |= src[i];
      }
    }
  }
  return out;
}

std::size_t BoolMatrix::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::uint64_t w : bits_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

ReachRelation reach_relation(const Digraph& g, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::SizeTooSmall, "walk length must be at least 1");
  BoolMatrix adjacency = BoolMatrix::adjacency(g);
  BoolMatrix power = adjacency;
  for (std::size_t i = 1; i < k; ++i) power = power * adjacency;
  return ReachRelation{k, std::move(power)};
}

namespace {

std::optional<RectWitness> first_violation(const BoolMatrix& r, std::size_t k) {
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    auto row_a = r.row(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (!r.get(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!r.get(c, b)) continue;
        auto row_c = r.row(c);
        for (std::size_t w = 0; w < row_c.size(); ++w) {
          std::uint64_t missing = row_c[w] & ~row_a[w];
          if (missing != 0) {
            auto d = static_cast<Vertex>(w * 64 + std::countr_zero(missing));
            return RectWitness{k, static_cast<Vertex>(a), static_cast<Vertex>(b),
                               static_cast<Vertex>(c), d};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

RectResult is_k_rectangular(const Digraph& g, std::size_t k) {
  ReachRelation rel = reach_relation(g, k);
  return RectResult{first_violation(rel.matrix, k)};
}

RectResult is_totally_rectangular(const Digraph& g) {
  BoolMatrix adjacency = BoolMatrix::adjacency(g);
  BoolMatrix power = adjacency;
  std::unordered_multimap<std::size_t, BoolMatrix> seen;
  for (std::size_t k = 1;; ++k) {
    if (auto w = first_violation(power, k)) return RectResult{w};
    std::size_t h = power.hash();
    seen.emplace(h, power);
    power = power * adjacency;
    auto [lo, hi] = seen.equal_range(power.hash());
    for (auto it = lo; it != hi; ++it)
      if (it->second == power) return {};
  }
}

bool verify_rect_witness(const Digraph& g, const RectWitness& w) {
  const std::size_t n = g.size();
  if (w.k == 0 || w.a >= n || w.b >= n || w.c >= n || w.d >= n) return false;
  auto reachable = [&](Vertex from) {
    std::vector<char> frontier(n, 0), next(n, 0);
    frontier[from] = 1;
    for (std::size_t step = 0; step < w.k; ++step) {
      std::fill(next.begin(), next.end(), 0);
      for (Vertex u = 0; u < n; ++u)
        if (frontier[u])
          for (Vertex v : g.out(u)) next[v] = 1;
      frontier.swap(next);
    }
    return frontier;
  };
  auto from_a = reachable(w.a);
  auto from_c = reachable(w.c);
  return from_a[w.b] && from_c[w.b] && from_c[w.d] && !from_a[w.d];
}

}  // namespace ppc
