#include "ppc/ppcons.hpp"

#include <algorithm>
#include <numeric>

#include "ppc/error.hpp"
#include "ppc/tuples.hpp"

namespace ppc {

PpFormula::PpFormula(std::size_t dimension, std::size_t existentials, std::vector<Atom> atoms)
    : dimension_(dimension), existentials_(existentials), atoms_(std::move(atoms)) {
  if (dimension_ == 0) throw Error(ErrorKind::TermOutOfRange, "formula dimension must be >= 1");
  auto check = [&](const Term& t) {
    std::size_t bound = t.block == Term::Block::Exists ? existentials_ : dimension_;
    if (t.index >= bound) {
      throw Error(ErrorKind::TermOutOfRange,
                  "formula variable index " + std::to_string(t.index) + " out of range");
    }
  };
  for (const Atom& atom : atoms_) {
    switch (atom.kind) {
      case Atom::Kind::Edge:
      case Atom::Kind::Eq:
        check(atom.lhs);
        check(atom.rhs);
        break;
      case Atom::Kind::Const:
        check(atom.lhs);
        break;
      case Atom::Kind::False:
        break;
    }
  }
}

bool PpFormula::has_false() const noexcept {
  return std::any_of(atoms_.begin(), atoms_.end(),
                     [](const Atom& a) { return a.kind == Atom::Kind::False; });
}

bool PpFormula::uses_constants() const noexcept {
  return std::any_of(atoms_.begin(), atoms_.end(),
                     [](const Atom& a) { return a.kind == Atom::Kind::Const; });
}

std::vector<Atom> walk_atoms(Term from, Term to, std::size_t k, std::size_t first_existential) {
  if (k == 0) throw Error(ErrorKind::SizeTooSmall, "walk length must be at least 1");
  if (k == 1) return {Atom::edge(from, to)};
  std::vector<Atom> atoms;
  atoms.push_back(Atom::edge(from, e_var(first_existential)));
  for (std::size_t i = 0; i + 2 < k; ++i)
    atoms.push_back(Atom::edge(e_var(first_existential + i), e_var(first_existential + i + 1)));
  atoms.push_back(Atom::edge(e_var(first_existential + k - 2), to));
  return atoms;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

constexpr Vertex kUnset = std::numeric_limits<Vertex>::max();

// The formula as a digraph on its variables, after identifying Eq atoms.
struct FormulaGraph {
  Digraph graph{1, {}};
  std::vector<Vertex> x_class, y_class;
  std::vector<Pin> constant_pins;
  bool contradictory = false;  // two different constants on one class
};

FormulaGraph compile(const PpFormula& phi) {
  const std::size_t d = phi.dimension();
  const std::size_t vars = 2 * d + phi.existentials();
  auto slot = [d](const Term& t) {
    switch (t.block) {
      case Term::Block::X: return t.index;
      case Term::Block::Y: return d + t.index;
      case Term::Block::Exists: return 2 * d + t.index;
    }
    return std::size_t{0};
  };

  std::vector<std::size_t> parent(vars);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Atom& atom : phi.atoms()) {
    if (atom.kind != Atom::Kind::Eq) continue;
    std::size_t a = find(slot(atom.lhs)), b = find(slot(atom.rhs));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Vertex> cls(vars, kUnset);
  Vertex classes = 0;
  for (std::size_t v = 0; v < vars; ++v) {
    std::size_t root = find(v);
    if (cls[root] == kUnset) cls[root] = classes++;
    cls[v] = cls[root];
  }

  FormulaGraph f;
  std::vector<Edge> edges;
  std::vector<Vertex> constant(classes, kUnset);
  for (const Atom& atom : phi.atoms()) {
    if (atom.kind == Atom::Kind::Edge) {
      edges.emplace_back(cls[slot(atom.lhs)], cls[slot(atom.rhs)]);
    } else if (atom.kind == Atom::Kind::Const) {
      Vertex c = cls[slot(atom.lhs)];
      if (constant[c] != kUnset && constant[c] != atom.constant) f.contradictory = true;
      constant[c] = atom.constant;
    }
  }
  for (Vertex c = 0; c < classes; ++c)
    if (constant[c] != kUnset) f.constant_pins.emplace_back(c, constant[c]);
  for (std::size_t i = 0; i < d; ++i) {
    f.x_class.push_back(cls[i]);
    f.y_class.push_back(cls[d + i]);
  }
  f.graph = Digraph(classes, std::move(edges));
  return f;
}

}  // namespace

PpPower pp_power(const Digraph& h, const PpFormula& phi, Limits limits) {
  const std::size_t n = h.size();
  const std::size_t d = phi.dimension();
  for (const Atom& atom : phi.atoms()) {
    if (atom.kind == Atom::Kind::Const && atom.constant >= n) {
      throw Error(ErrorKind::ConstantOutOfRange,
                  "constant c" + std::to_string(atom.constant) + " is not a vertex of a " +
                      std::to_string(n) + "-vertex digraph");
    }
  }
  const std::size_t vertices = checked_power(n, d, limits.vertex_budget, "pp power");
  PpPower result{Digraph(vertices, {}), false};
  if (phi.uses_constants()) result.constants_on_non_core = !is_core(h, limits.search);
  if (phi.has_false()) return result;

  FormulaGraph f = compile(phi);
  if (f.contradictory) return result;

  // Classes holding y coordinates that are neither x coordinates nor constants.
  std::vector<char> bound(f.graph.size(), 0);
  for (Vertex c : f.x_class) bound[c] = 1;
  for (auto [c, value] : f.constant_pins) bound[c] = 1;
  std::vector<Vertex> free_y;
  for (Vertex c : f.y_class)
    if (!bound[c] && std::find(free_y.begin(), free_y.end(), c) == free_y.end())
      free_y.push_back(c);

  HomSolver solver(f.graph, h, limits.search);
  std::vector<Edge> edges;
  std::vector<Vertex> u(d), value(f.graph.size());
  std::vector<Pin> pins;
  std::vector<std::size_t> choice(free_y.size());
  for (std::size_t from = 0; from < vertices; ++from) {
    tuple_decode(from, n, u);
    std::fill(value.begin(), value.end(), kUnset);
    pins = f.constant_pins;
    for (auto [c, v] : pins) value[c] = v;
    bool consistent = true;
    for (std::size_t i = 0; i < d && consistent; ++i) {
      Vertex c = f.x_class[i];
      if (value[c] == kUnset) {
        value[c] = u[i];
        pins.emplace_back(c, u[i]);
      } else if (value[c] != u[i]) {
        consistent = false;
      }
    }
    if (!consistent) continue;
    auto domains = solver.propagate(pins);
    if (!domains) continue;

    const std::size_t fixed = pins.size();
    if (std::any_of(free_y.begin(), free_y.end(),
                    [&](Vertex c) { return (*domains)[c].empty(); }))
      continue;
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      pins.resize(fixed);
      for (std::size_t i = 0; i < free_y.size(); ++i) {
        Vertex c = free_y[i];
        value[c] = (*domains)[c][choice[i]];
        pins.emplace_back(c, value[c]);
      }
      if (solver.solve(pins)) {
        std::size_t to = 0;
        for (std::size_t i = 0; i < d; ++i) to = to * n + value[f.y_class[i]];
        edges.emplace_back(static_cast<Vertex>(from), static_cast<Vertex>(to));
      }
      std::size_t i = free_y.size();
      for (; i > 0; --i) {
        if (++choice[i - 1] < (*domains)[free_y[i - 1]].size()) break;
        choice[i - 1] = 0;
      }
      if (i == 0) break;
    }
  }
  result.graph = Digraph(vertices, std::move(edges));
  return result;
}

// ---------------------------------------------------------------------------
// Constructions

Construction verify_construction(const Digraph& h, const PpFormula& phi, const Digraph& target,
                                 Limits limits) {
  PpPower power = pp_power(h, phi, limits);
  HomEquivalence eq = hom_equivalent(power.graph, target, limits.search);
  return Construction{phi, h, std::move(power.graph), target, std::move(eq.forward),
                      std::move(eq.backward)};
}

Construction construct_p2_from(const Digraph& g, Limits limits) {
  if (g.size() < 2)
    throw Error(ErrorKind::TooFewVertices, "P2 construction needs two distinct vertices");
  if (!is_core(g, limits.search))
    throw Error(ErrorKind::NotACore, "constants are only available over a core");
  PpFormula phi(1, 0, {Atom::constant_of(x_var(0), 0), Atom::constant_of(y_var(0), 1)});
  return verify_construction(g, phi, path(2), limits);
}

PathConstruction construct_path_formula(std::size_t k, Limits limits) {
  if (k == 0) throw Error(ErrorKind::SizeTooSmall, "path length must be at least 1");
  if (k > kMaxPathConstruction) {
    throw Error(ErrorKind::BudgetExceeded,
                "path construction for k=" + std::to_string(k) + " needs 2^" +
                    std::to_string(k - 1) + " vertices; cap is k <= " +
                    std::to_string(kMaxPathConstruction));
  }
  if (k == 1) {
    PathConstruction out{verify_construction(path(2), PpFormula(1, 0, {Atom::falsum()}),
                                             path(1), limits),
                         {0}};
    return out;
  }
  if (k == 2) {
    PathConstruction out{verify_construction(path(2),
                                             PpFormula(1, 0, {Atom::edge(x_var(0), y_var(0))}),
                                             path(2), limits),
                         {0, 1}};
    return out;
  }

  const std::size_t d = k - 1;
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i + 1 < d; ++i) atoms.push_back(Atom::eq(x_var(i), y_var(i + 1)));
  atoms.push_back(Atom::edge(x_var(d - 1), y_var(0)));
  PpFormula phi(d, 0, std::move(atoms));

  PathConstruction out{verify_construction(path(2), phi, path(k), limits), {}};
  std::vector<Vertex> tuple(d, 0);
  for (std::size_t ones = 0; ones < k; ++ones) {
    if (ones > 0) tuple[ones - 1] = 1;
    out.witness_path.push_back(static_cast<Vertex>(tuple_index(tuple, 2)));
  }
  return out;
}

T3Construction construct_t3_from(const Digraph& g, Limits limits) {
  CoreResult core = core_of(g, limits.search);
  RectResult rect = is_totally_rectangular(core.core);
  if (rect.passes())
    throw Error(ErrorKind::IsTotallyRectangular, "the core of the input is totally rectangular");
  const RectWitness w = *rect.violation;

  std::vector<Atom> atoms = walk_atoms(x_var(0), y_var(1), w.k, 0);
  atoms.push_back(Atom::constant_of(x_var(1), w.d));
  atoms.push_back(Atom::constant_of(y_var(0), w.a));
  PpFormula phi(2, w.k - 1, std::move(atoms));

  const Digraph& base = core.core;
  PpPower power = pp_power(base, phi, limits);
  const Digraph& h = power.graph;
  const std::size_t n = base.size();
  const std::array<Vertex, 3> v{static_cast<Vertex>(w.c * n + w.d),
                                static_cast<Vertex>(w.a * n + w.d),
                                static_cast<Vertex>(w.a * n + w.b)};

  const Digraph t3 = transitive_tournament(3);
  for (Vertex i = 0; i < 3; ++i) {
    for (Vertex j = 0; j < 3; ++j) {
      if (h.has_edge(v[i], v[j]) != t3.has_edge(i, j)) {
        throw Error(ErrorKind::InternalInconsistency,
                    "T3 construction: (c,d), (a,d), (a,b) do not induce T3");
      }
    }
  }
  Hom embedding(t3, h, {v[0], v[1], v[2]});

  std::vector<Vertex> level(h.size());
  for (Vertex x = 0; x < h.size(); ++x) {
    bool has_out = h.out_degree(x) > 0, has_in = h.in_degree(x) > 0;
    level[x] = has_out && !has_in ? 0 : (has_in && !has_out ? 2 : 1);
  }
  Hom collapse(h, t3, std::move(level));

  T3Construction out{Construction{std::move(phi), base, h, t3, std::move(collapse),
                                  std::move(embedding)},
                     std::move(core), w, v};
  return out;
}

}  // namespace ppc
