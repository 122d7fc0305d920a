#include "ppc/classify.hpp"

#include <algorithm>

#include "ppc/error.hpp"
#include "ppc/minorcond.hpp"

namespace ppc {

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::EquivalentP1: return "EquivalentP1";
    case Verdict::EquivalentP2: return "EquivalentP2";
    case Verdict::StrictlyBelow: return "StrictlyBelow";
  }
  return "Unknown";
}

std::string UpperBound::name() const {
  return kind == Kind::T3 ? "T3" : "C_" + std::to_string(prime);
}

std::vector<std::size_t> primes_up_to(std::size_t bound) {
  std::vector<std::size_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::size_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::size_t q = p * p; q <= bound; q += p) composite[q] = true;
  }
  return primes;
}

namespace {

std::string cyclic_name(std::size_t p) { return "cyclic:" + std::to_string(p); }

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Classification classify(const Digraph& g, std::optional<std::size_t> prime_bound, Limits limits) {
  Classification result{Verdict::EquivalentP1, core_of(g, limits.search), {}, {}};
  const Digraph& core = result.core.core;
  if (core.has_loop() || core.size() == 1) {
    result.signature.emplace_back("maltsev", true);
    for (std::size_t p : primes_up_to(prime_bound.value_or(core.size())))
      result.signature.emplace_back(cyclic_name(p), true);
    return result;
  }

  const RectResult rect = is_totally_rectangular(core);
  result.signature.emplace_back("maltsev", rect.passes());

  std::vector<std::size_t> failing;
  for (std::size_t p : primes_up_to(prime_bound.value_or(core.size()))) {
    bool holds = satisfies(core, cyclic_condition(p), limits).satisfied;
    result.signature.emplace_back(cyclic_name(p), holds);
    if (!holds) failing.push_back(p);
  }

  if (!rect.passes()) {
    result.verdict = Verdict::StrictlyBelow;
    UpperBound t3;
    t3.kind = UpperBound::Kind::T3;
    t3.t3 = construct_t3_from(core, limits);
    result.upper_bounds.push_back(std::move(t3));
    for (std::size_t p : failing) {
      UpperBound bound;
      bound.kind = UpperBound::Kind::Cycle;
      bound.prime = p;
      result.upper_bounds.push_back(bound);
    }
    return result;
  }

  const ShapeReport shape = shape_of(core);
  if (shape.kind == ShapeKind::Path) {
    if (!failing.empty()) {
      throw Error(ErrorKind::InternalInconsistency,
                  "a path core fails the cyclic condition of arity " +
                      std::to_string(failing.front()));
    }
    result.verdict = Verdict::EquivalentP2;
    return result;
  }
  if (shape.kind != ShapeKind::DisjointUnionOfCycles || !shape.shortest_cycle ||
      *shape.shortest_cycle < 2) {
    throw Error(ErrorKind::InternalInconsistency,
                "totally rectangular core is neither a path nor a disjoint union of cycles");
  }

  result.verdict = Verdict::StrictlyBelow;
  const std::vector<std::size_t> divisors = prime_factors(*shape.shortest_cycle);
  std::vector<std::size_t> bound_primes = failing;
  for (std::size_t p : divisors) {
    if (std::find(failing.begin(), failing.end(), p) != failing.end()) continue;
    // Outside the prime bound: confirm directly.
    bool checked = std::any_of(result.signature.begin(), result.signature.end(),
                               [&](const SignatureEntry& e) { return e.first == cyclic_name(p); });
    if (checked || satisfies(core, cyclic_condition(p), limits).satisfied) {
      throw Error(ErrorKind::InternalInconsistency,
                  "the cyclic condition of arity " + std::to_string(p) +
                      " holds although it divides the shortest cycle length");
    }
    result.signature.emplace_back(cyclic_name(p), false);
    bound_primes.push_back(p);
  }
  std::sort(bound_primes.begin(), bound_primes.end());
  auto arity_of = [](const SignatureEntry& e) {
    return e.first == "maltsev" ? 0 : std::stoul(e.first.substr(7));
  };
  std::stable_sort(result.signature.begin(), result.signature.end(),
                   [&](const auto& a, const auto& b) { return arity_of(a) < arity_of(b); });
  for (std::size_t p : bound_primes) {
    UpperBound bound;
    bound.kind = UpperBound::Kind::Cycle;
    bound.prime = p;
    bound.divides_shortest_cycle =
        std::find(divisors.begin(), divisors.end(), p) != divisors.end();
    result.upper_bounds.push_back(bound);
  }
  return result;
}

std::vector<SignatureEntry> signature(const Digraph& g, const std::vector<std::size_t>& arities,
                                      Limits limits) {
  const Digraph core = core_of(g, limits.search).core;
  std::vector<SignatureEntry> out;
  out.emplace_back("maltsev", satisfies(core, maltsev_condition(), limits).satisfied);
  for (std::size_t n : arities)
    out.emplace_back(cyclic_name(n), satisfies(core, cyclic_condition(n), limits).satisfied);
  return out;
}

}  // namespace ppc
