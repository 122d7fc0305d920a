#include "ppc/homsearch.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "ppc/error.hpp"

namespace ppc {

// ---------------------------------------------------------------------------
// Hom

Hom::Hom(const Digraph& source, const Digraph& target, std::vector<Vertex> map)
    : map_(std::move(map)), target_size_(target.size()) {
  if (!preserves_edges(source, target, map_)) {
    throw Error(ErrorKind::InternalInconsistency,
                "vertex map is not a homomorphism");
  }
}

bool Hom::preserves_edges(const Digraph& source, const Digraph& target,
                          std::span<const Vertex> map) noexcept {
  if (map.size() != source.size()) return false;
  for (Vertex x : map)
    if (x >= target.size()) return false;
  for (auto [u, v] : source.edges())
    if (!target.has_edge(map[u], map[v])) return false;
  return true;
}

bool Hom::verify(const Digraph& source, const Digraph& target) const noexcept {
  return target.size() == target_size_ && preserves_edges(source, target, map_);
}

Hom compose(const Hom& first, const Hom& second) {
  std::vector<Vertex> map(first.map_.size());
  for (std::size_t v = 0; v < map.size(); ++v) map[v] = second.map_[first.map_[v]];
  return Hom(std::move(map), second.target_size_);
}

// ---------------------------------------------------------------------------
// HomSolver

namespace {

constexpr std::size_t kDenseRowWords = std::size_t{1} << 20;

inline bool test_bit(const std::uint64_t* words, std::size_t i) {
  return (words[i >> 6] >> (i & 63)) & 1U;
}
inline void set_bit(std::uint64_t* words, std::size_t i) {
  words[i >> 6] |= std::uint64_t{1} << (i & 63);
}

}  // namespace

class HomSolver::Impl {
 public:
  Impl(const Digraph& source, const Digraph& target, SearchBudget budget)
      : g_(source),
        h_(target),
        words_((target.size() + 63) / 64),
        limit_(budget.node_limit),
        domains_(source.size() * words_),
        support_(words_),
        in_queue_(source.size(), 0) {
    if (limit_ == 0) throw Error(ErrorKind::SizeTooSmall, "node limit must be at least 1");
    const std::size_t nh = h_.size();
    full_.assign(words_, 0);
    loops_.assign(words_, 0);
    has_out_.assign(words_, 0);
    has_in_.assign(words_, 0);
    for (Vertex a = 0; a < nh; ++a) {
      set_bit(full_.data(), a);
      if (h_.out_degree(a) > 0) set_bit(has_out_.data(), a);
      if (h_.in_degree(a) > 0) set_bit(has_in_.data(), a);
    }
    for (auto [a, b] : h_.edges())
      if (a == b) set_bit(loops_.data(), a);

    dense_ = nh * words_ <= kDenseRowWords;
    if (dense_) {
      out_rows_.assign(nh * words_, 0);
      in_rows_.assign(nh * words_, 0);
      for (auto [a, b] : h_.edges()) {
        set_bit(&out_rows_[a * words_], b);
        set_bit(&in_rows_[b * words_], a);
      }
    }
    compute_components();
  }

  std::optional<std::vector<Vertex>> solve(std::span<const Pin> pins) {
    nodes_ = 0;
    if (!reset(pins)) return std::nullopt;
    for (const auto& component : components_) {
      if (!search(component)) return std::nullopt;
    }
    std::vector<Vertex> map(g_.size());
    for (Vertex v = 0; v < g_.size(); ++v) map[v] = first_value(v);
    return map;
  }

  std::optional<std::vector<std::vector<Vertex>>> propagate_only(std::span<const Pin> pins) {
    nodes_ = 0;
    if (!reset(pins)) return std::nullopt;
    std::vector<std::vector<Vertex>> result(g_.size());
    for (Vertex v = 0; v < g_.size(); ++v) {
      const std::uint64_t* d = domain(v);
      for (std::size_t w = 0; w < words_; ++w) {
        for (std::uint64_t bits = d[w]; bits != 0; bits &= bits - 1) {
          result[v].push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        }
      }
    }
    return result;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t* domain(Vertex v) { return &domains_[static_cast<std::size_t>(v) * words_]; }

  std::size_t domain_size(Vertex v) {
    const std::uint64_t* d = domain(v);
    std::size_t count = 0;
    for (std::size_t w = 0; w < words_; ++w) count += std::popcount(d[w]);
    return count;
  }

  Vertex first_value(Vertex v) {
    const std::uint64_t* d = domain(v);
    for (std::size_t w = 0; w < words_; ++w)
      if (d[w] != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(d[w]));
    return 0;
  }

  void compute_components() {
    const std::size_t n = g_.size();
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [u, v] : g_.edges()) {
      Vertex a = find(u), b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> slot(n, SIZE_MAX);
    for (Vertex v = 0; v < n; ++v) {
      Vertex root = find(v);
      if (slot[root] == SIZE_MAX) {
        slot[root] = components_.size();
        components_.emplace_back();
      }
      components_[slot[root]].push_back(v);
    }
  }

  // Narrows domain(v) to `mask`; returns false on wipe-out.
  bool narrow(Vertex v, const std::uint64_t* mask) {
    std::uint64_t* d = domain(v);
    bool changed = false, empty = true;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t next = d[w] & mask[w];
      if (next != d[w]) {
        trail_.emplace_back(static_cast<std::size_t>(v) * words_ + w, d[w]);
        d[w] = next;
        changed = true;
      }
      if (next != 0) empty = false;
    }
    if (empty) return false;
    if (changed && !in_queue_[v]) {
      in_queue_[v] = 1;
      queue_.push_back(v);
    }
    return true;
  }

  // Union of out- (or in-) neighbourhoods of the values in domain(u).
  void compute_support(Vertex u, bool outgoing) {
    const std::uint64_t* d = domain(u);
    if (std::equal(d, d + words_, full_.data())) {
      const auto& all = outgoing ? has_in_ : has_out_;
      std::copy(all.begin(), all.end(), support_.begin());
      return;
    }
    std::fill(support_.begin(), support_.end(), 0);
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = d[w]; bits != 0; bits &= bits - 1) {
        Vertex a = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        if (dense_) {
          const std::uint64_t* row = &(outgoing ? out_rows_ : in_rows_)[a * words_];
          for (std::size_t i = 0; i < words_; ++i) support_[i] |= row[i];
        } else {
          for (Vertex b : outgoing ? h_.out(a) : h_.in(a)) set_bit(support_.data(), b);
        }
      }
    }
  }

  bool revise_from(Vertex u) {
    auto successors = g_.out(u);
    if (!successors.empty()) {
      compute_support(u, true);
      for (Vertex v : successors)
        if (v != u && !narrow(v, support_.data())) return false;
    }
    auto predecessors = g_.in(u);
    if (!predecessors.empty()) {
      compute_support(u, false);
      for (Vertex w : predecessors)
        if (w != u && !narrow(w, support_.data())) return false;
    }
    return true;
  }

  bool run_queue() {
    bool ok = true;
    std::size_t head = 0;
    while (head < queue_.size()) {
      Vertex u = queue_[head++];
      in_queue_[u] = 0;
      if (!revise_from(u)) {
        ok = false;
        break;
      }
    }
    for (std::size_t i = head; i < queue_.size(); ++i) in_queue_[queue_[i]] = 0;
    queue_.clear();
    return ok;
  }

  void restore(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [index, word] = trail_.back();
      domains_[index] = word;
      trail_.pop_back();
    }
  }

  bool reset(std::span<const Pin> pins) {
    trail_.clear();
    queue_.clear();
    for (auto [v, a] : pins) {
      if (v >= g_.size() || a >= h_.size()) {
        throw Error(ErrorKind::PinOutOfRange,
                    "pin (" + std::to_string(v) + " -> " + std::to_string(a) + ") out of range");
      }
    }
    for (Vertex v = 0; v < g_.size(); ++v) std::copy(full_.begin(), full_.end(), domain(v));
    for (auto [u, v] : g_.edges()) {
      if (u != v) continue;
      std::uint64_t* d = domain(u);
      for (std::size_t w = 0; w < words_; ++w) d[w] &= loops_[w];
    }
    std::vector<std::uint64_t> single(words_);
    for (auto [v, a] : pins) {
      std::fill(single.begin(), single.end(), 0);
      set_bit(single.data(), a);
      std::uint64_t* d = domain(v);
      for (std::size_t w = 0; w < words_; ++w) d[w] &= single[w];
    }
    for (Vertex v = 0; v < g_.size(); ++v) {
      const std::uint64_t* d = domain(v);
      if (std::all_of(d, d + words_, [](std::uint64_t x) { return x == 0; })) return false;
      in_queue_[v] = 1;
      queue_.push_back(v);
    }
    trail_.clear();
    return run_queue();
  }

  struct Frame {
    Vertex var;
    std::size_t mark;
    std::vector<std::uint64_t> values;
    std::size_t next = 0;
  };

  Vertex pick(const std::vector<Vertex>& component, bool& all_fixed) {
    std::size_t best_size = SIZE_MAX;
    Vertex best = 0;
    for (Vertex v : component) {
      std::size_t s = domain_size(v);
      if (s > 1 && s < best_size) {
        best_size = s;
        best = v;
        if (s == 2) break;
      }
    }
    all_fixed = best_size == SIZE_MAX;
    return best;
  }

  bool search(const std::vector<Vertex>& component) {
    std::vector<Frame> stack;
    bool descend = true;
    while (true) {
      if (descend) {
        bool all_fixed = false;
        Vertex var = pick(component, all_fixed);
        if (all_fixed) return true;
        const std::uint64_t* d = domain(var);
        stack.push_back(Frame{var, trail_.size(), std::vector<std::uint64_t>(d, d + words_)});
      }
      descend = false;
      while (!stack.empty()) {
        Frame& top = stack.back();
        restore(top.mark);
        std::size_t value = next_bit(top.values, top.next);
        if (value == SIZE_MAX) {
          stack.pop_back();
          continue;
        }
        top.next = value + 1;
        if (++nodes_ > limit_) {
          throw Error(ErrorKind::BudgetExhausted,
                      "homomorphism search exceeded " + std::to_string(limit_) + " nodes");
        }
        std::fill(support_.begin(), support_.end(), 0);
        set_bit(support_.data(), value);
        narrow(top.var, support_.data());
        if (!in_queue_[top.var]) {
          in_queue_[top.var] = 1;
          queue_.push_back(top.var);
        }
        if (run_queue()) {
          descend = true;
          break;
        }
      }
      if (!descend) return false;
    }
  }

  std::size_t next_bit(const std::vector<std::uint64_t>& bits, std::size_t from) const {
    for (std::size_t w = from >> 6; w < bits.size(); ++w) {
      std::uint64_t word = bits[w];
      if (w == (from >> 6)) word &= ~std::uint64_t{0} << (from & 63);
      if (word != 0) return w * 64 + std::countr_zero(word);
    }
    return SIZE_MAX;
  }

  const Digraph g_;
  const Digraph h_;
  std::size_t words_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  bool dense_ = false;

  std::vector<std::uint64_t> domains_;
  std::vector<std::uint64_t> full_, loops_, has_out_, has_in_;
  std::vector<std::uint64_t> out_rows_, in_rows_;
  std::vector<std::uint64_t> support_;
  std::vector<std::pair<std::size_t, std::uint64_t>> trail_;
  std::vector<Vertex> queue_;
  std::vector<char> in_queue_;
  std::vector<std::vector<Vertex>> components_;
};

HomSolver::HomSolver(const Digraph& source, const Digraph& target, SearchBudget budget)
    : impl_(std::make_unique<Impl>(source, target, budget)) {}
HomSolver::~HomSolver() = default;
HomSolver::HomSolver(HomSolver&&) noexcept = default;
HomSolver& HomSolver::operator=(HomSolver&&) noexcept = default;

std::optional<std::vector<Vertex>> HomSolver::solve(std::span<const Pin> pins) {
  return impl_->solve(pins);
}

std::optional<std::vector<std::vector<Vertex>>> HomSolver::propagate(std::span<const Pin> pins) {
  return impl_->propagate_only(pins);
}

std::uint64_t HomSolver::nodes() const noexcept { return impl_->nodes(); }

// ---------------------------------------------------------------------------
// Free functions

std::optional<Hom> find_hom(const Digraph& source, const Digraph& target,
                            std::span<const Pin> pins, SearchBudget budget) {
  HomSolver solver(source, target, budget);
  auto map = solver.solve(pins);
  if (!map) return std::nullopt;
  return Hom(source, target, std::move(*map));
}

HomEquivalence hom_equivalent(const Digraph& g, const Digraph& h, SearchBudget budget) {
  HomEquivalence result;
  result.forward = find_hom(g, h, {}, budget);
  result.backward = find_hom(h, g, {}, budget);
  result.equivalent = result.forward.has_value() && result.backward.has_value();
  return result;
}

namespace {

// Hom from `current` into current minus vertex `drop`, as a map into
// current's own indices.
std::optional<std::vector<Vertex>> retract_avoiding(const Digraph& current, Vertex drop,
                                                    SearchBudget budget) {
  std::vector<Vertex> rest;
  rest.reserve(current.size() - 1);
  for (Vertex v = 0; v < current.size(); ++v)
    if (v != drop) rest.push_back(v);
  Digraph smaller = current.induced(rest);
  auto hom = find_hom(current, smaller, {}, budget);
  if (!hom) return std::nullopt;
  std::vector<Vertex> map(current.size());
  for (Vertex v = 0; v < current.size(); ++v) map[v] = rest[(*hom)(v)];
  return map;
}

}  // namespace

CoreResult core_of(const Digraph& g, SearchBudget budget) {
  Digraph current = g;
  std::vector<Vertex> kept(g.size());
  std::iota(kept.begin(), kept.end(), Vertex{0});
  // to_current[x] is the current-graph vertex that original vertex x maps to.
  std::vector<Vertex> to_current = kept;

  Vertex v = 0;
  while (v < current.size() && current.size() > 1) {
    auto map = retract_avoiding(current, v, budget);
    if (!map) {
      ++v;
      continue;
    }
    // Shrink to the image; vertices below v stay non-removable.
    std::vector<char> in_image(current.size(), 0);
    for (Vertex x : *map) in_image[x] = 1;
    std::vector<Vertex> image;
    std::vector<Vertex> position(current.size(), 0);
    for (Vertex x = 0; x < current.size(); ++x) {
      if (in_image[x]) {
        position[x] = static_cast<Vertex>(image.size());
        image.push_back(x);
      }
    }
    Vertex next_v = 0;
    for (Vertex x = 0; x < v; ++x) next_v += in_image[x];
    for (Vertex& target : to_current) target = position[(*map)[target]];
    std::vector<Vertex> next_kept;
    next_kept.reserve(image.size());
    for (Vertex x : image) next_kept.push_back(kept[x]);
    current = current.induced(image);
    kept = std::move(next_kept);
    v = next_v;
  }
  Hom retraction(g, current, std::move(to_current));
  return CoreResult{std::move(current), std::move(kept), std::move(retraction)};
}

bool is_core(const Digraph& g, SearchBudget budget) {
  if (g.size() == 1) return true;
  for (Vertex v = 0; v < g.size(); ++v)
    if (retract_avoiding(g, v, budget)) return false;
  return true;
}

}  // namespace ppc
