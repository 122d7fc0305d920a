#include <doctest.h>

#include "error_kind.hpp"
#include "ppc/minorcond.hpp"

using namespace ppc;

TEST_CASE("single equation") {
  auto c = parse_condition("f(x,y) = f(y,x)");
  REQUIRE(c.symbols().size() == 1);
  CHECK(c.symbols()[0].name == "f");
  CHECK(c.symbols()[0].arity == 2);
  REQUIRE(c.equations().size() == 1);
  const auto& eq = c.equations()[0];
  CHECK(eq.lhs.map.to_arity == 2);
  CHECK(eq.lhs.map.table == std::vector<std::size_t>{0, 1});
  CHECK(eq.rhs.map.table == std::vector<std::size_t>{1, 0});
}

TEST_CASE("chains expand into consecutive equations") {
  auto c = parse_condition("f(x,x,y)=f(y,y,x)=f(x,y,y)");
  REQUIRE(c.equations().size() == 2);
  CHECK(c.equations()[0].lhs.map.table == std::vector<std::size_t>{0, 0, 1});
  CHECK(c.equations()[0].rhs.map.table == std::vector<std::size_t>{1, 1, 0});
  CHECK(c.equations()[1].lhs.map.table == std::vector<std::size_t>{0, 0, 1});
  CHECK(c.equations()[1].rhs.map.table == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("comments, blank equations and several symbols") {
  auto c = parse_condition("# two symbols\n g(a,b)=g(b,a);;\n f(a) = g(a,a) ; ");
  CHECK(c.symbols().size() == 2);
  CHECK(c.symbols()[1].name == "f");
  CHECK(c.equations().size() == 2);
  CHECK(c.equations()[1].lhs.map.to_arity == 1);
}

TEST_CASE("variables unused on one side are allowed") {
  auto c = parse_condition("f(x)=f(y)");
  CHECK(c.equations()[0].lhs.map.to_arity == 2);
  CHECK(c.equations()[0].rhs.map.table == std::vector<std::size_t>{1});
}

TEST_CASE("syntax errors report positions") {
  try {
    parse_condition("f(x,y)=f(y,x);\n  f(x,y=f(y,x)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  try {
    parse_condition("f(x) = f(y) $");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 13);
  }
  CHECK(error_kind([] { parse_condition(""); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_condition("f(x)"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_condition("f()=f()"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_condition("f(x)=f(y) f(x)=f(y)"); }) == ErrorKind::ParseError);
}

TEST_CASE("arity is fixed by first use") {
  CHECK(error_kind([] { parse_condition("f(x)=f(x,y)"); }) == ErrorKind::ArityMismatch);
  CHECK(error_kind([] { parse_condition("f(x,y)=f(y,x); f(x)=f(x)"); }) ==
        ErrorKind::ArityMismatch);
}

TEST_CASE("direct construction validates maps") {
  MinorMap bad{2, {0, 2}};
  std::vector<Symbol> symbols{{"f", 2}};
  std::vector<MinorEquation> eqs{{{0, MinorMap{2, {0, 1}}}, {0, bad}}};
  CHECK(error_kind([&] { MinorCondition(symbols, eqs); }) == ErrorKind::ArityMismatch);
  std::vector<MinorEquation> wrong_symbol{{{0, MinorMap{2, {0, 1}}}, {1, MinorMap{2, {0, 1}}}}};
  CHECK(error_kind([&] { MinorCondition(symbols, wrong_symbol); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("printing round-trips") {
  for (const auto& c : {cyclic_condition(2), cyclic_condition(5), maltsev_condition(),
                        constant_condition(), fourfold_condition(),
                        parse_condition("g(a,b)=g(b,a); f(a)=g(a,a)")}) {
    CHECK(parse_condition(c.to_string()) == c);
  }
  CHECK(cyclic_condition(3).to_string() == "f(x,y,z)=f(y,z,x)");
}
