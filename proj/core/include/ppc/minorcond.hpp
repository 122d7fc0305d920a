#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppc/digraph.hpp"
#include "ppc/homsearch.hpp"

namespace ppc {

/// A map sigma: {0..from_arity-1} -> {0..to_arity-1} (0-based), read as the
/// minor f_sigma(x_0..x_{n-1}) = f(x_sigma(0), .., x_sigma(k-1)).
struct MinorMap {
  std::size_t to_arity = 0;
  std::vector<std::size_t> table;  // size == from_arity

  std::size_t from_arity() const noexcept { return table.size(); }
  friend bool operator==(const MinorMap&, const MinorMap&) = default;
};

struct Symbol {
  std::string name;
  std::size_t arity = 0;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

struct MinorTerm {
  std::size_t symbol = 0;  // index into MinorCondition::symbols
  MinorMap map;
  friend bool operator==(const MinorTerm&, const MinorTerm&) = default;
};

struct MinorEquation {
  MinorTerm lhs;
  MinorTerm rhs;
  friend bool operator==(const MinorEquation&, const MinorEquation&) = default;
};

/// Height-1 condition: equations f_sigma = g_tau over declared symbols.
class MinorCondition {
 public:
  MinorCondition() = default;
  /// Validates arities; throws ArityMismatch.
  MinorCondition(std::vector<Symbol> symbols, std::vector<MinorEquation> equations);

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const std::vector<MinorEquation>& equations() const noexcept { return equations_; }
  std::size_t max_arity() const noexcept;

  /// Canonical DSL text; parse_condition(to_string()) reproduces the condition.
  std::string to_string() const;

  friend bool operator==(const MinorCondition&, const MinorCondition&) = default;

 private:
  std::vector<Symbol> symbols_;
  std::vector<MinorEquation> equations_;
};

/// Grammar: condition := eq (';' eq)*, eq := term '=' term ('=' term)*,
/// term := ident '(' ident (',' ident)* ')'. '#' starts a line comment.
/// Throws ParseError or ArityMismatch.
MinorCondition parse_condition(std::string_view text);

MinorCondition cyclic_condition(std::size_t arity);  // arity >= 2
MinorCondition maltsev_condition();
MinorCondition constant_condition();
MinorCondition fourfold_condition();  // f(x,x,y)=f(y,y,x)=f(x,y,y)=f(y,x,x)

/// Builtin by name: "cyclic:<p>", "maltsev", "constant", "fourfold".
/// Throws UnknownBuiltin.
MinorCondition builtin(std::string_view name);

/// Builtin name if `text` names one, otherwise DSL text.
MinorCondition condition_from_text(std::string_view text);

struct Indicator {
  Digraph graph;
  std::vector<std::size_t> symbol_offset;  // first cell of each symbol
  std::vector<Vertex> class_of;            // cell -> indicator vertex
};

/// Quotient of all (symbol, tuple) cells under the condition's equations,
/// with an edge between two classes whenever two cells of one symbol are
/// coordinatewise adjacent in h. Throws BudgetExceeded.
Indicator indicator(const Digraph& h, const MinorCondition& condition,
                    Limits limits = {});

struct OperationTable {
  std::string name;
  std::size_t arity = 0;
  std::vector<Vertex> values;  // indexed by mixed-radix tuple index
};

struct PolymorphismWitness {
  std::vector<OperationTable> tables;  // one per symbol, in symbol order
};

/// Checks every table is a polymorphism of h and every equation holds on
/// every instantiation.
bool verify_witness(const Digraph& h, const MinorCondition& condition,
                    const PolymorphismWitness& witness);

struct Satisfaction {
  bool satisfied = false;
  std::optional<PolymorphismWitness> witness;
};

/// Pol(h) |= condition, decided by a homomorphism search from the indicator
/// to h. Throws BudgetExceeded or BudgetExhausted.
Satisfaction satisfies(const Digraph& h, const MinorCondition& condition,
                       Limits limits = {});

/// Reference decision procedure: backtracking directly over operation-table
/// cells. Meant for cross-checking on small digraphs (at most 64 vertices).
/// Throws BudgetExceeded for too many cells, BudgetExhausted at the node limit.
bool brute_force_satisfies(const Digraph& h, const MinorCondition& condition,
                           std::size_t cell_budget = 5000,
                           std::uint64_t node_limit = 50'000'000);

}  // namespace ppc
