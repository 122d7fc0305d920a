#include <cctype>
#include <limits>
#include <optional>

#include "ppc/error.hpp"
#include "ppc/ppcons.hpp"

namespace ppc {

namespace {

std::string term_name(const Term& t) {
  switch (t.block) {
    case Term::Block::X: return "x" + std::to_string(t.index + 1);
    case Term::Block::Y: return "y" + std::to_string(t.index + 1);
    case Term::Block::Exists: return "e" + std::to_string(t.index);
  }
  return "?";
}

// A term or a constant, as it appears on either side of '='.
struct Operand {
  std::optional<Term> term;
  Vertex constant = 0;
};

class FormulaReader {
 public:
  explicit FormulaReader(std::string_view text) : text_(text) {}

  PpFormula read() {
    skip_space();
    expect_word("d");
    skip_space();
    expect('=');
    skip_space();
    std::size_t d = read_number("dimension");
    if (d == 0) fail("dimension must be at least 1");
    skip_space();
    expect(';');

    std::size_t m = 0;
    skip_space();
    if (peek_word("exists")) {
      advance(6);
      skip_space();
      m = read_number("existential count");
      skip_space();
      expect(';');
    }

    std::vector<Atom> atoms;
    skip_space();
    if (at_end()) fail("expected a conjunction of atoms");
    while (true) {
      read_atom(d, m, atoms);
      skip_space();
      if (at_end()) break;
      if (text_[pos_] == ';') {
        advance(1);
        skip_space();
        if (!at_end()) fail("unexpected text after the formula body");
        break;
      }
      expect('&');
      skip_space();
    }
    return PpFormula(d, m, std::move(atoms));
  }

 private:
  void read_atom(std::size_t d, std::size_t m, std::vector<Atom>& atoms) {
    if (peek_word("true")) {
      advance(4);
      return;
    }
    if (peek_word("false")) {
      advance(5);
      atoms.push_back(Atom::falsum());
      return;
    }
    if (peek('E') && peek_at(1, '(')) {
      advance(2);
      skip_space();
      Term a = read_term(d, m);
      skip_space();
      expect(',');
      skip_space();
      Term b = read_term(d, m);
      skip_space();
      expect(')');
      atoms.push_back(Atom::edge(a, b));
      return;
    }
    Operand lhs = read_operand(d, m);
    skip_space();
    expect('=');
    skip_space();
    Operand rhs = read_operand(d, m);
    if (lhs.term && rhs.term) {
      atoms.push_back(Atom::eq(*lhs.term, *rhs.term));
    } else if (lhs.term) {
      atoms.push_back(Atom::constant_of(*lhs.term, rhs.constant));
    } else if (rhs.term) {
      atoms.push_back(Atom::constant_of(*rhs.term, lhs.constant));
    } else if (lhs.constant != rhs.constant) {
      atoms.push_back(Atom::falsum());
    }
  }

  Operand read_operand(std::size_t d, std::size_t m) {
    if (peek('c')) {
      advance(1);
      std::size_t c = read_number("constant");
      if (c > std::numeric_limits<Vertex>::max()) fail("constant out of range");
      return {std::nullopt, static_cast<Vertex>(c)};
    }
    return {read_term(d, m), 0};
  }

  Term read_term(std::size_t d, std::size_t m) {
    std::size_t line = line_, col = col_;
    if (at_end()) fail("expected a variable");
    char block = text_[pos_];
    if (block != 'x' && block != 'y' && block != 'e') {
      fail("expected a variable x<i>, y<i> or e<j>");
    }
    advance(1);
    std::size_t index = read_number("variable index");
    if (block == 'e') {
      if (index >= m) {
        throw ParseError(line, col, "existential e" + std::to_string(index) +
                                        " is not declared (exists " + std::to_string(m) + ")");
      }
      return e_var(index);
    }
    if (index == 0 || index > d) {
      throw ParseError(line, col, std::string(1, block) + std::to_string(index) +
                                      " is outside 1.." + std::to_string(d));
    }
    return block == 'x' ? x_var(index - 1) : y_var(index - 1);
  }

  std::size_t read_number(const char* what) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail(std::string("expected ") + what);
    }
    std::size_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t digit = static_cast<std::size_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10)
        fail(std::string(what) + " is too large");
      value = value * 10 + digit;
      advance(1);
    }
    return value;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return !at_end() && text_[pos_] == c; }
  bool peek_at(std::size_t offset, char c) const {
    return pos_ + offset < text_.size() && text_[pos_ + offset] == c;
  }
  bool peek_word(std::string_view word) const {
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    return end >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[end]));
  }
  void expect_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    advance(word.size());
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    advance(1);
  }
  void advance(std::size_t count) {
    for (std::size_t i = 0; i < count && !at_end(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance(1);
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, col_, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

PpFormula parse_formula(std::string_view text) { return FormulaReader(text).read(); }

std::string PpFormula::to_string() const {
  std::string out = "d=" + std::to_string(dimension_) + ";";
  if (existentials_ > 0) out += " exists " + std::to_string(existentials_) + ";";
  if (atoms_.empty()) return out + " true";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    out += i == 0 ? " " : " & ";
    const Atom& a = atoms_[i];
    switch (a.kind) {
      case Atom::Kind::Edge:
        out += "E(" + term_name(a.lhs) + "," + term_name(a.rhs) + ")";
        break;
      case Atom::Kind::Eq:
        out += term_name(a.lhs) + "=" + term_name(a.rhs);
        break;
      case Atom::Kind::Const:
        out += term_name(a.lhs) + "=c" + std::to_string(a.constant);
        break;
      case Atom::Kind::False:
        out += "false";
        break;
    }
  }
  return out;
}

}  // namespace ppc
