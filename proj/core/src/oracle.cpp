// Reference decision procedure for minor-condition satisfaction. Shares no
// code with the indicator/homomorphism route: equations are kept as explicit
// cell-equality constraints and polymorphism edges as binary constraints,
// solved by backtracking over the raw table cells with forward checking from
// every cell whose value is forced.

#include <algorithm>
#include <bit>
#include <deque>

#include "ppc/error.hpp"
#include "ppc/minorcond.hpp"

namespace ppc {

namespace {

using Mask = std::uint64_t;

struct CellProblem {
  std::size_t cells = 0;
  std::vector<Mask> initial;
  std::vector<std::vector<std::size_t>> equal;     // symmetric
  std::vector<std::vector<std::size_t>> succ;      // cell -> cells that must be out-neighbours
  std::vector<std::vector<std::size_t>> pred;      // reverse of succ
};

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

void decode(std::size_t index, std::size_t base, std::vector<Vertex>& out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Vertex>(index % base);
    index /= base;
  }
}

std::size_t encode(const std::vector<Vertex>& tuple, std::size_t base) {
  std::size_t r = 0;
  for (Vertex x : tuple) r = r * base + x;
  return r;
}

CellProblem build_problem(const Digraph& h, const MinorCondition& condition,
                          std::size_t cell_budget) {
  const std::size_t n = h.size();
  CellProblem p;
  std::vector<std::size_t> offset;
  for (const auto& s : condition.symbols()) {
    offset.push_back(p.cells);
    double size = 1;
    for (std::size_t i = 0; i < s.arity; ++i) size *= static_cast<double>(n);
    if (size + static_cast<double>(p.cells) > static_cast<double>(cell_budget))
      throw Error(ErrorKind::BudgetExceeded, "oracle: too many table cells");
    p.cells += ipow(n, s.arity);
  }
  p.equal.resize(p.cells);
  p.succ.resize(p.cells);
  p.pred.resize(p.cells);

  Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  Mask loops = 0;
  for (auto [a, b] : h.edges())
    if (a == b) loops |= Mask{1} << a;
  p.initial.assign(p.cells, all);

  // Polymorphism constraints: every pair of coordinatewise-adjacent tuples.
  for (std::size_t s = 0; s < condition.symbols().size(); ++s) {
    std::size_t arity = condition.symbols()[s].arity;
    std::size_t count = ipow(n, arity);
    std::vector<Vertex> u(arity), v(arity);
    for (std::size_t i = 0; i < count; ++i) {
      decode(i, n, u);
      // Enumerate successors of u by brute force over all tuples.
      for (std::size_t j = 0; j < count; ++j) {
        decode(j, n, v);
        bool adjacent = true;
        for (std::size_t c = 0; c < arity && adjacent; ++c) adjacent = h.has_edge(u[c], v[c]);
        if (!adjacent) continue;
        if (i == j) {
          p.initial[offset[s] + i] &= loops;
        } else {
          p.succ[offset[s] + i].push_back(offset[s] + j);
          p.pred[offset[s] + j].push_back(offset[s] + i);
        }
      }
    }
  }

  // Equations, instantiated over every assignment of their variables.
  for (const auto& eq : condition.equations()) {
    std::size_t vars = eq.lhs.map.to_arity;
    std::size_t count = ipow(n, vars);
    std::vector<Vertex> x(vars), left(eq.lhs.map.table.size()), right(eq.rhs.map.table.size());
    for (std::size_t i = 0; i < count; ++i) {
      decode(i, n, x);
      for (std::size_t k = 0; k < left.size(); ++k) left[k] = x[eq.lhs.map.table[k]];
      for (std::size_t k = 0; k < right.size(); ++k) right[k] = x[eq.rhs.map.table[k]];
      std::size_t a = offset[eq.lhs.symbol] + encode(left, n);
      std::size_t b = offset[eq.rhs.symbol] + encode(right, n);
      if (a == b) continue;
      p.equal[a].push_back(b);
      p.equal[b].push_back(a);
    }
  }
  return p;
}

class CellSearch {
 public:
  CellSearch(const Digraph& h, CellProblem problem, std::uint64_t node_limit)
      : p_(std::move(problem)), domain_(p_.initial), limit_(node_limit) {
    const std::size_t n = h.size();
    out_.assign(n, 0);
    in_.assign(n, 0);
    for (auto [a, b] : h.edges()) {
      out_[a] |= Mask{1} << b;
      in_[b] |= Mask{1} << a;
    }
  }

  bool run() {
    if (std::any_of(domain_.begin(), domain_.end(), [](Mask m) { return m == 0; }))
      return false;
    std::vector<char> placed(p_.cells, 0);
    for (std::size_t root = 0; root < p_.cells; ++root) {
      if (placed[root]) continue;
      std::vector<std::size_t> cells = component_order(root, placed);
      if (!settle_singletons(cells) || !solve(cells)) return false;
    }
    return true;
  }

 private:
  // Cells connected to `root` through any constraint.
  std::vector<std::size_t> component_order(std::size_t root, std::vector<char>& placed) {
    std::vector<std::size_t> order;
    std::deque<std::size_t> queue{root};
    placed[root] = 1;
    while (!queue.empty()) {
      std::size_t c = queue.front();
      queue.pop_front();
      order.push_back(c);
      for (const auto* list : {&p_.equal[c], &p_.succ[c], &p_.pred[c]}) {
        for (std::size_t d : *list) {
          if (!placed[d]) {
            placed[d] = 1;
            queue.push_back(d);
          }
        }
      }
    }
    return order;
  }

  bool restrict(std::size_t cell, Mask mask) {
    Mask next = domain_[cell] & mask;
    if (next != domain_[cell]) {
      trail_.emplace_back(cell, domain_[cell]);
      domain_[cell] = next;
      if (next != 0 && std::has_single_bit(next)) pending_.push_back(cell);
    }
    return next != 0;
  }

  // Forward-checks every cell whose domain is a single value, repeatedly.
  bool propagate() {
    while (!pending_.empty()) {
      std::size_t cell = pending_.back();
      pending_.pop_back();
      Mask value = domain_[cell];
      Vertex v = static_cast<Vertex>(std::countr_zero(value));
      bool ok = true;
      for (std::size_t d : p_.equal[cell]) ok = ok && restrict(d, value);
      for (std::size_t d : p_.succ[cell]) ok = ok && restrict(d, out_[v]);
      for (std::size_t d : p_.pred[cell]) ok = ok && restrict(d, in_[v]);
      if (!ok) {
        pending_.clear();
        return false;
      }
    }
    return true;
  }

  bool settle_singletons(const std::vector<std::size_t>& cells) {
    for (std::size_t c : cells)
      if (std::has_single_bit(domain_[c])) pending_.push_back(c);
    return propagate();
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      domain_[trail_.back().first] = trail_.back().second;
      trail_.pop_back();
    }
  }

  // Branches on the open cell with the fewest remaining values.
  bool solve(const std::vector<std::size_t>& cells) {
    std::size_t best = SIZE_MAX;
    int best_count = 65;
    for (std::size_t c : cells) {
      int count = std::popcount(domain_[c]);
      if (count > 1 && count < best_count) {
        best = c;
        best_count = count;
        if (count == 2) break;
      }
    }
    if (best == SIZE_MAX) return true;
    for (Mask values = domain_[best]; values != 0; values &= values - 1) {
      if (++nodes_ > limit_)
        throw Error(ErrorKind::BudgetExhausted, "oracle search exceeded its node limit");
      std::size_t mark = trail_.size();
      if (restrict(best, values & -values) && propagate() && solve(cells)) return true;
      undo(mark);
    }
    return false;
  }

  CellProblem p_;
  std::vector<Mask> domain_;
  std::vector<Mask> out_, in_;
  std::vector<std::pair<std::size_t, Mask>> trail_;
  std::vector<std::size_t> pending_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool brute_force_satisfies(const Digraph& h, const MinorCondition& condition,
                           std::size_t cell_budget, std::uint64_t node_limit) {
  if (h.size() > 64) throw Error(ErrorKind::BudgetExceeded, "oracle handles at most 64 vertices");
  CellSearch search(h, build_problem(h, condition, cell_budget), node_limit);
  return search.run();
}

}  // namespace ppc
