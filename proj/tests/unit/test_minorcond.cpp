#include <doctest.h>

#include "error_kind.hpp"
#include "oracles.hpp"
#include "ppc/minorcond.hpp"

using namespace ppc;

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

TEST_CASE("builtin shapes") {
  auto c3 = cyclic_condition(3);
  REQUIRE(c3.symbols().size() == 1);
  CHECK(c3.symbols()[0].arity == 3);
  CHECK(c3.equations().size() == 1);
  CHECK(c3.equations()[0].rhs.map.table == std::vector<std::size_t>{1, 2, 0});

  CHECK(maltsev_condition().max_arity() == 3);
  CHECK(maltsev_condition().equations().size() == 2);
  CHECK(fourfold_condition().equations().size() == 3);
  CHECK(constant_condition().max_arity() == 1);

  CHECK(builtin("cyclic:5") == cyclic_condition(5));
  CHECK(builtin("maltsev") == maltsev_condition());
  CHECK(error_kind([] { builtin("cyclic:1"); }) == ErrorKind::UnknownBuiltin);
  CHECK(error_kind([] { builtin("cyclic:"); }) == ErrorKind::UnknownBuiltin);
  CHECK(error_kind([] { builtin("majority"); }) == ErrorKind::UnknownBuiltin);
  CHECK(error_kind([] { cyclic_condition(1); }) == ErrorKind::UnknownBuiltin);
  CHECK(condition_from_text("f(x,y)=f(y,x)") == cyclic_condition(2));
}

TEST_CASE("cyclic indicators have one class per necklace") {
  for (std::size_t n = 1; n <= 4; ++n) {
    Digraph h = cycle(n);
    for (std::size_t p : {2, 3, 5}) {
      auto ind = indicator(h, cyclic_condition(p));
      CHECK(ind.class_of.size() == power(n, p));
      CHECK(ind.graph.size() == (power(n, p) - n) / p + n);
      CHECK(ind.graph.edge_count() <= power(n, p));
    }
  }
}

TEST_CASE("maltsev indicator collapses the minors of each diagonal") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto ind = indicator(clique(std::max<std::size_t>(n, 2)), maltsev_condition());
    std::size_t m = std::max<std::size_t>(n, 2);
    CHECK(ind.graph.size() == m * m * m - 2 * m * m + 2 * m);
  }
}

TEST_CASE("indicator budget") {
  Limits tight;
  tight.vertex_budget = 100;
  CHECK(error_kind([&] { indicator(cycle(5), cyclic_condition(3), tight); }) ==
        ErrorKind::BudgetExceeded);
  CHECK(error_kind([] { indicator(cycle(10), cyclic_condition(7)); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("directed cycles and cyclic conditions") {
  for (std::size_t q : {2, 3, 5}) {
    for (std::size_t p : {2, 3, 5}) {
      auto s = satisfies(cycle(q), cyclic_condition(p));
      CHECK(s.satisfied == (p != q));
      CHECK(s.witness.has_value() == s.satisfied);
      if (s.witness) CHECK(verify_witness(cycle(q), cyclic_condition(p), *s.witness));
    }
  }
}

TEST_CASE("known satisfactions") {
  CHECK_FALSE(satisfies(transitive_tournament(3), maltsev_condition()).satisfied);
  CHECK(satisfies(transitive_tournament(3), cyclic_condition(3)).satisfied);
  CHECK(satisfies(path(2), fourfold_condition()).satisfied);
  CHECK(satisfies(cycle(4), maltsev_condition()).satisfied);
  CHECK_FALSE(satisfies(clique(3), cyclic_condition(2)).satisfied);
  CHECK(satisfies(cycle(1), constant_condition()).satisfied);
}

TEST_CASE("the constant condition holds exactly with a loop or without edges") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Digraph h = oracle::random_digraph(rng, 5, 0.3, true);
    CHECK(satisfies(h, constant_condition()).satisfied == (h.has_loop() || h.edge_count() == 0));
  }
}

TEST_CASE("witness tables are checked, not trusted") {
  auto s = satisfies(path(2), cyclic_condition(2));
  REQUIRE(s.witness.has_value());
  PolymorphismWitness w = *s.witness;
  CHECK(verify_witness(path(2), cyclic_condition(2), w));

  PolymorphismWitness asymmetric = w;
  asymmetric.tables[0].values[1] = asymmetric.tables[0].values[2] == 0 ? 1 : 0;
  CHECK_FALSE(verify_witness(path(2), cyclic_condition(2), asymmetric));

  PolymorphismWitness truncated = w;
  truncated.tables[0].values.pop_back();
  CHECK_FALSE(verify_witness(path(2), cyclic_condition(2), truncated));

  // f(x,y) = x is a polymorphism but not commutative.
  PolymorphismWitness projection{{{"f", 2, {0, 0, 1, 1}}}};
  CHECK_FALSE(verify_witness(path(2), cyclic_condition(2), projection));
  // A constant operation is commutative but does not preserve the edge.
  PolymorphismWitness constant{{{"f", 2, {0, 0, 0, 0}}}};
  CHECK_FALSE(verify_witness(path(2), cyclic_condition(2), constant));
}

TEST_CASE("multi-symbol conditions") {
  // g is a binary commutative operation and f(x) = g(x,x): always satisfiable
  // when the cyclic condition of arity 2 is.
  auto cond = parse_condition("g(x,y)=g(y,x); f(x)=g(x,x)");
  CHECK(cond.symbols().size() == 2);
  for (std::size_t q : {2, 3, 4}) {
    auto s = satisfies(cycle(q), cond);
    CHECK(s.satisfied == satisfies(cycle(q), cyclic_condition(2)).satisfied);
    if (s.witness) CHECK(verify_witness(cycle(q), cond, *s.witness));
  }
}

TEST_CASE("indicator search agrees with the direct oracle on small digraphs") {
  std::vector<MinorCondition> conditions{cyclic_condition(2), cyclic_condition(3),
                                         maltsev_condition(), constant_condition(),
                                         fourfold_condition()};
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<ppc::Edge> arcs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) arcs.emplace_back(u, v);
    for (std::size_t mask = 0; mask < (std::size_t{1} << arcs.size()); ++mask) {
      std::vector<ppc::Edge> edges;
      for (std::size_t i = 0; i < arcs.size(); ++i)
        if (mask >> i & 1) edges.push_back(arcs[i]);
      Digraph h(n, edges);
      for (const auto& cond : conditions)
        CHECK(satisfies(h, cond).satisfied == brute_force_satisfies(h, cond));
    }
  }
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph h = oracle::random_digraph(rng, 3, 0.4, trial % 2 == 0);
    for (const auto& cond : conditions)
      CHECK(satisfies(h, cond).satisfied == brute_force_satisfies(h, cond));
  }
}

TEST_CASE("oracle budgets") {
  CHECK(error_kind([] { brute_force_satisfies(cycle(5), cyclic_condition(7), 100); }) ==
        ErrorKind::BudgetExceeded);
}
