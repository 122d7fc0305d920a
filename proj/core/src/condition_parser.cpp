#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "ppc/error.hpp"
#include "ppc/minorcond.hpp"

namespace ppc {

namespace {

struct Token {
  enum Kind { Ident, LParen, RParen, Comma, Equals, Semicolon, End } kind;
  std::string text;
  std::size_t line, column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token token{Token::End, {}, line_, column_};
    if (pos_ >= text_.size()) return token;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t begin = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        advance();
      }
      token.kind = Token::Ident;
      token.text = std::string(text_.substr(begin, pos_ - begin));
      return token;
    }
    switch (c) {
      case '(': token.kind = Token::LParen; break;
      case ')': token.kind = Token::RParen; break;
      case ',': token.kind = Token::Comma; break;
      case '=': token.kind = Token::Equals; break;
      case ';': token.kind = Token::Semicolon; break;
      default:
        throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
    }
    token.text = std::string(1, c);
    advance();
    return token;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, column_ = 1;
};

struct RawTerm {
  std::string symbol;
  std::vector<std::string> args;
  std::size_t line, column;
};

class ConditionParser {
 public:
  explicit ConditionParser(std::string_view text) : lexer_(text) { shift(); }

  MinorCondition parse() {
    while (true) {
      while (current_.kind == Token::Semicolon) shift();
      if (current_.kind == Token::End) break;
      parse_chain();
      if (current_.kind != Token::Semicolon && current_.kind != Token::End)
        fail("expected ';' between equations");
    }
    if (equations_.empty()) throw ParseError(1, 1, "condition has no equations");
    return MinorCondition(std::move(symbols_), std::move(equations_));
  }

 private:
  void shift() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(current_.line, current_.column, message);
  }

  Token expect(Token::Kind kind, const char* what) {
    if (current_.kind != kind) fail(std::string("expected ") + what);
    Token t = current_;
    shift();
    return t;
  }

  RawTerm parse_term() {
    Token name = expect(Token::Ident, "function symbol");
    RawTerm term{name.text, {}, name.line, name.column};
    expect(Token::LParen, "'('");
    term.args.push_back(expect(Token::Ident, "variable").text);
    while (current_.kind == Token::Comma) {
      shift();
      term.args.push_back(expect(Token::Ident, "variable").text);
    }
    expect(Token::RParen, "')'");
    return term;
  }

  void parse_chain() {
    std::vector<RawTerm> chain;
    chain.push_back(parse_term());
    if (current_.kind != Token::Equals) fail("expected '='");
    while (current_.kind == Token::Equals) {
      shift();
      chain.push_back(parse_term());
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) add_equation(chain[i], chain[i + 1]);
  }

  std::size_t symbol_index(const RawTerm& term) {
    auto it = symbol_ids_.find(term.symbol);
    if (it == symbol_ids_.end()) {
      symbol_ids_.emplace(term.symbol, symbols_.size());
      symbols_.push_back(Symbol{term.symbol, term.args.size()});
      return symbols_.size() - 1;
    }
    if (symbols_[it->second].arity != term.args.size()) {
      throw Error(ErrorKind::ArityMismatch,
                  std::to_string(term.line) + ":" + std::to_string(term.column) + ": symbol '" +
                      term.symbol + "' used with arity " + std::to_string(term.args.size()) +
                      " but declared with arity " +
                      std::to_string(symbols_[it->second].arity));
    }
    return it->second;
  }

  // Universal variables of one equation are numbered by first occurrence.
  void add_equation(const RawTerm& lhs, const RawTerm& rhs) {
    std::map<std::string, std::size_t> variables;
    auto number = [&](const std::string& name) {
      auto [it, inserted] = variables.emplace(name, variables.size());
      return it->second;
    };
    std::vector<std::size_t> left, right;
    for (const auto& a : lhs.args) left.push_back(number(a));
    for (const auto& a : rhs.args) right.push_back(number(a));
    std::size_t n = variables.size();
    MinorTerm l{symbol_index(lhs), MinorMap{n, std::move(left)}};
    MinorTerm r{symbol_index(rhs), MinorMap{n, std::move(right)}};
    equations_.push_back(MinorEquation{std::move(l), std::move(r)});
  }

  Lexer lexer_;
  Token current_{Token::End, {}, 1, 1};
  std::vector<Symbol> symbols_;
  std::map<std::string, std::size_t> symbol_ids_;
  std::vector<MinorEquation> equations_;
};

std::string variable_name(std::size_t i) {
  static constexpr const char* kNames[] = {"x", "y", "z", "u", "v", "w"};
  if (i < 6) return kNames[i];
  return "x" + std::to_string(i);
}

}  // namespace

MinorCondition parse_condition(std::string_view text) {
  return ConditionParser(text).parse();
}

std::string MinorCondition::to_string() const {
  std::ostringstream out;
  for (std::size_t e = 0; e < equations_.size(); ++e) {
    if (e > 0) out << "; ";
    const auto& eq = equations_[e];
    // Rename so variables appear in first-occurrence order.
    std::vector<std::size_t> rename(eq.lhs.map.to_arity, SIZE_MAX);
    std::size_t next = 0;
    for (const MinorTerm* side : {&eq.lhs, &eq.rhs})
      for (std::size_t v : side->map.table)
        if (rename[v] == SIZE_MAX) rename[v] = next++;
    for (const MinorTerm* side : {&eq.lhs, &eq.rhs}) {
      if (side == &eq.rhs) out << '=';
      out << symbols_[side->symbol].name << '(';
      for (std::size_t i = 0; i < side->map.table.size(); ++i) {
        if (i > 0) out << ',';
        out << variable_name(rename[side->map.table[i]]);
      }
      out << ')';
    }
  }
  return out.str();
}

MinorCondition cyclic_condition(std::size_t arity) {
  if (arity < 2) throw Error(ErrorKind::UnknownBuiltin, "cyclic condition needs arity >= 2");
  std::ostringstream text;
  text << "f(";
  for (std::size_t i = 0; i < arity; ++i) text << (i ? "," : "") << "x" << i + 1;
  text << ")=f(";
  for (std::size_t i = 0; i < arity; ++i) text << (i ? "," : "") << "x" << (i + 1) % arity + 1;
  text << ")";
  return parse_condition(text.str());
}

MinorCondition maltsev_condition() {
  return parse_condition("f(x,y,y)=f(x,x,x); f(x,x,x)=f(y,y,x)");
}

MinorCondition constant_condition() { return parse_condition("f(x)=f(y)"); }

MinorCondition fourfold_condition() {
  return parse_condition("f(x,x,y)=f(y,y,x)=f(x,y,y)=f(y,x,x)");
}

MinorCondition builtin(std::string_view name) {
  if (name == "maltsev") return maltsev_condition();
  if (name == "constant") return constant_condition();
  if (name == "fourfold") return fourfold_condition();
  constexpr std::string_view kCyclic = "cyclic:";
  if (name.substr(0, kCyclic.size()) == kCyclic) {
    auto digits = name.substr(kCyclic.size());
    std::size_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && p >= 2 && p <= 64)
      return cyclic_condition(p);
  }
  throw Error(ErrorKind::UnknownBuiltin, "unknown builtin condition '" + std::string(name) + "'");
}

MinorCondition condition_from_text(std::string_view text) {
  if (text.find('(') != std::string_view::npos) return parse_condition(text);
  return builtin(text);
}

}  // namespace ppc
