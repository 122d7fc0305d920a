#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppc/digraph.hpp"
#include "ppc/homsearch.hpp"
#include "ppc/rect.hpp"

namespace ppc {

/// Variable of a pp formula: the i-th coordinate of the source block x, of
/// the target block y, or the j-th existential.
struct Term {
  enum class Block : std::uint8_t { X, Y, Exists };
  Block block = Block::X;
  std::size_t index = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

inline Term x_var(std::size_t i) { return {Term::Block::X, i}; }
inline Term y_var(std::size_t i) { return {Term::Block::Y, i}; }
inline Term e_var(std::size_t j) { return {Term::Block::Exists, j}; }

struct Atom {
  enum class Kind : std::uint8_t { Edge, Eq, Const, False };
  Kind kind = Kind::False;
  Term lhs{};
  Term rhs{};            // Edge and Eq only
  Vertex constant = 0;   // Const only

  static Atom edge(Term a, Term b) { return {Kind::Edge, a, b, 0}; }
  static Atom eq(Term a, Term b) { return {Kind::Eq, a, b, 0}; }
  static Atom constant_of(Term a, Vertex c) { return {Kind::Const, a, {}, c}; }
  static Atom falsum() { return {}; }

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Primitive positive formula phi(x_1..x_d, y_1..y_d) = exists e_0..e_{m-1}
/// of a conjunction of atoms. An empty conjunction is true.
class PpFormula {
 public:
  /// Throws TermOutOfRange if an atom names a variable outside its block.
  PpFormula(std::size_t dimension, std::size_t existentials, std::vector<Atom> atoms);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t existentials() const noexcept { return existentials_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  bool has_false() const noexcept;
  bool uses_constants() const noexcept;

  /// Surface syntax, e.g. "d=2; exists 1; E(x1,e0) & E(e0,y2) & x2=c3 & y1=c0".
  std::string to_string() const;

  friend bool operator==(const PpFormula&, const PpFormula&) = default;

 private:
  std::size_t dimension_;
  std::size_t existentials_;
  std::vector<Atom> atoms_;
};

/// Parses the surface syntax. x<i>/y<i> are 1-based coordinates, e<j> are
/// 0-based existentials, c<N> names vertex N of the base digraph; atoms are
/// E(s,t), s=t, false and true. Throws ParseError or TermOutOfRange.
PpFormula parse_formula(std::string_view text);

struct PpPower {
  Digraph graph;
  bool constants_on_non_core = false;  // constants are only sound over cores
};

/// Digraph on V(h)^d with an edge (u, v) iff phi(u, v) holds in h. Throws
/// BudgetExceeded or ConstantOutOfRange.
PpPower pp_power(const Digraph& h, const PpFormula& phi, Limits limits = {});

/// A pp power together with certificates of homomorphic equivalence to the
/// digraph it is meant to construct.
struct Construction {
  PpFormula formula;
  Digraph base;
  Digraph power;
  Digraph target;
  std::optional<Hom> to_target;    // power -> target
  std::optional<Hom> from_target;  // target -> power

  bool verified() const noexcept { return to_target && from_target; }
};

/// P2 from a core with at least two vertices: phi = (x = c0) & (y = c1).
/// Throws TooFewVertices or NotACore.
Construction construct_p2_from(const Digraph& g, Limits limits = {});

inline constexpr std::size_t kMaxPathConstruction = 16;

struct PathConstruction {
  Construction construction;
  std::vector<Vertex> witness_path;  // power vertices of the length k-1 path
};

/// P_k from P2. For k >= 3 the power has dimension k-1 and an edge from u to
/// v exactly when v is u shifted right by one with a 1 entering in front.
/// Throws SizeTooSmall for k == 0 and BudgetExceeded beyond
/// kMaxPathConstruction.
PathConstruction construct_path_formula(std::size_t k, Limits limits = {});

/// x ->^k y as a conjunction: a single edge for k == 1, otherwise a chain
/// through k-1 fresh existentials starting at `first_existential`.
std::vector<Atom> walk_atoms(Term from, Term to, std::size_t k, std::size_t first_existential);

struct T3Construction {
  Construction construction;  // base is the core of the input
  CoreResult core;
  RectWitness witness;
  std::array<Vertex, 3> embedding{};  // power vertices (c,d), (a,d), (a,b)
};

/// T3 from a digraph whose core is not totally rectangular, using the
/// least rectangularity witness (k, a, b, c, d) of the core and
/// phi(x1,x2,y1,y2) = x1 ->^k y2 & x2 = d & y1 = a. The certificates are the
/// embedding of T3 and the map sending vertices with only outgoing edges to
/// 0, vertices with only incoming edges to 2 and everything else to 1.
/// Throws IsTotallyRectangular.
T3Construction construct_t3_from(const Digraph& g, Limits limits = {});

/// Evaluates phi on h and searches for homomorphisms in both directions
/// between the power and `target`.
Construction verify_construction(const Digraph& h, const PpFormula& phi, const Digraph& target,
                                 Limits limits = {});

}  // namespace ppc
