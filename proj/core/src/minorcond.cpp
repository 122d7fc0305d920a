#include "ppc/minorcond.hpp"

#include <algorithm>
#include <numeric>

#include "ppc/error.hpp"
#include "ppc/tuples.hpp"

namespace ppc {

MinorCondition::MinorCondition(std::vector<Symbol> symbols, std::vector<MinorEquation> equations)
    : symbols_(std::move(symbols)), equations_(std::move(equations)) {
  auto check_term = [&](const MinorTerm& term, std::size_t to_arity) {
    if (term.symbol >= symbols_.size())
      throw Error(ErrorKind::ArityMismatch, "equation refers to an undeclared symbol");
    if (term.map.from_arity() != symbols_[term.symbol].arity)
      throw Error(ErrorKind::ArityMismatch,
                  "minor of '" + symbols_[term.symbol].name + "' has the wrong arity");
    if (term.map.to_arity != to_arity)
      throw Error(ErrorKind::ArityMismatch, "equation sides have different variable counts");
    for (std::size_t v : term.map.table)
      if (v >= to_arity) throw Error(ErrorKind::ArityMismatch, "minor map entry out of range");
  };
  for (const auto& eq : equations_) {
    check_term(eq.lhs, eq.lhs.map.to_arity);
    check_term(eq.rhs, eq.lhs.map.to_arity);
  }
}

std::size_t MinorCondition::max_arity() const noexcept {
  std::size_t arity = 0;
  for (const auto& s : symbols_) arity = std::max(arity, s.arity);
  return arity;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Mixed-radix index of x o sigma.
std::size_t minor_index(std::span<const Vertex> x, const MinorMap& map, std::size_t base) {
  std::size_t index = 0;
  for (std::size_t v : map.table) index = index * base + x[v];
  return index;
}

std::vector<std::size_t> symbol_offsets(const Digraph& h, const MinorCondition& condition,
                                        std::size_t budget) {
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& s : condition.symbols()) {
    offsets.push_back(total);
    total += checked_power(h.size(), s.arity, budget, "indicator cells of '" + s.name + "'");
    if (total > budget) {
      throw Error(ErrorKind::BudgetExceeded, "indicator needs " + std::to_string(total) +
                                                 " cells, budget is " + std::to_string(budget));
    }
  }
  offsets.push_back(total);
  return offsets;
}

// Calls visit(from_index, to_index) for every edge of h^arity.
template <typename Visit>
void for_each_power_edge(const Digraph& h, std::size_t arity, Visit&& visit) {
  auto edges = h.edges();
  if (edges.empty() || arity == 0) return;
  std::vector<Vertex> choice(arity, 0);
  do {
    std::size_t from = 0, to = 0;
    for (Vertex c : choice) {
      from = from * h.size() + edges[c].first;
      to = to * h.size() + edges[c].second;
    }
    visit(from, to);
  } while (tuple_next(choice, edges.size()));
}

}  // namespace

Indicator indicator(const Digraph& h, const MinorCondition& condition, Limits limits) {
  const std::size_t n = h.size();
  const std::size_t budget = limits.vertex_budget;
  auto offsets = symbol_offsets(h, condition, budget);
  const std::size_t cells = offsets.back();
  if (cells == 0) throw Error(ErrorKind::EmptyVertexSet, "condition has no symbols");

  UnionFind classes(cells);
  for (const auto& eq : condition.equations()) {
    std::size_t vars = eq.lhs.map.to_arity;
    checked_power(n, vars, budget, "equation instantiations");
    std::vector<Vertex> x(vars, 0);
    do {
      classes.unite(offsets[eq.lhs.symbol] + minor_index(x, eq.lhs.map, n),
                    offsets[eq.rhs.symbol] + minor_index(x, eq.rhs.map, n));
    } while (tuple_next(x, n));
  }

  Indicator result{Digraph(1, {}), {}, std::vector<Vertex>(cells)};
  std::vector<std::size_t> class_id(cells, SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t c = 0; c < cells; ++c) {
    std::size_t root = classes.find(c);
    if (class_id[root] == SIZE_MAX) class_id[root] = next++;
    result.class_of[c] = static_cast<Vertex>(class_id[root]);
  }

  std::vector<Edge> edges;
  for (std::size_t s = 0; s < condition.symbols().size(); ++s) {
    std::size_t arity = condition.symbols()[s].arity;
    checked_power(h.edge_count(), arity, budget * 16, "indicator edges");
    for_each_power_edge(h, arity, [&](std::size_t from, std::size_t to) {
      edges.emplace_back(result.class_of[offsets[s] + from], result.class_of[offsets[s] + to]);
    });
  }
  offsets.pop_back();
  result.graph = Digraph(next, std::move(edges));
  result.symbol_offset = std::move(offsets);
  return result;
}

bool verify_witness(const Digraph& h, const MinorCondition& condition,
                    const PolymorphismWitness& witness) {
  const std::size_t n = h.size();
  const auto& symbols = condition.symbols();
  if (witness.tables.size() != symbols.size()) return false;
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    const auto& table = witness.tables[s];
    std::size_t expected = 1;
    for (std::size_t i = 0; i < symbols[s].arity; ++i) expected *= n;
    if (table.arity != symbols[s].arity || table.values.size() != expected) return false;
    if (std::any_of(table.values.begin(), table.values.end(),
                    [n](Vertex v) { return v >= n; }))
      return false;
    bool preserved = true;
    for_each_power_edge(h, table.arity, [&](std::size_t from, std::size_t to) {
      if (preserved && !h.has_edge(table.values[from], table.values[to])) preserved = false;
    });
    if (!preserved) return false;
  }
  for (const auto& eq : condition.equations()) {
    const auto& left = witness.tables[eq.lhs.symbol].values;
    const auto& right = witness.tables[eq.rhs.symbol].values;
    std::vector<Vertex> x(eq.lhs.map.to_arity, 0);
    do {
      if (left[minor_index(x, eq.lhs.map, n)] != right[minor_index(x, eq.rhs.map, n)])
        return false;
    } while (tuple_next(x, n));
  }
  return true;
}

Satisfaction satisfies(const Digraph& h, const MinorCondition& condition,
                       Limits limits) {
  Indicator ind = indicator(h, condition, limits);
  HomSolver solver(ind.graph, h, limits.search);
  auto map = solver.solve();
  if (!map) return {};
  Hom hom(ind.graph, h, std::move(*map));

  PolymorphismWitness witness;
  const auto& symbols = condition.symbols();
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    OperationTable table{symbols[s].name, symbols[s].arity, {}};
    std::size_t end = s + 1 < symbols.size() ? ind.symbol_offset[s + 1] : ind.class_of.size();
    for (std::size_t c = ind.symbol_offset[s]; c < end; ++c)
      table.values.push_back(hom(ind.class_of[c]));
    witness.tables.push_back(std::move(table));
  }
  if (!verify_witness(h, condition, witness)) {
    throw Error(ErrorKind::InternalInconsistency,
                "pulled-back operation tables fail verification");
  }
  return Satisfaction{true, std::move(witness)};
}

}  // namespace ppc
