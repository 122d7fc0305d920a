#include "ppc/serialize.hpp"

namespace ppc::json {

Json digraph(const Digraph& g) {
  Json out;
  out["n"] = g.size();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  out["edges"] = std::move(edges);
  return out;
}

Json hom(const std::optional<Hom>& h) {
  if (!h) return nullptr;
  return Json(h->map());
}

Json witness(const PolymorphismWitness& w) {
  Json out = Json::array();
  for (const auto& table : w.tables) {
    Json t;
    t["name"] = table.name;
    t["arity"] = table.arity;
    t["values"] = table.values;
    out.push_back(std::move(t));
  }
  return out;
}

Json satisfaction(const Satisfaction& s) {
  Json out;
  out["satisfied"] = s.satisfied;
  out["witness"] = s.witness ? witness(*s.witness) : Json(nullptr);
  return out;
}

Json rect_witness(const RectWitness& w) {
  Json out;
  out["k"] = w.k;
  out["a"] = w.a;
  out["b"] = w.b;
  out["c"] = w.c;
  out["d"] = w.d;
  return out;
}

Json construction(const Construction& c) {
  Json out;
  out["formula"] = c.formula.to_string();
  out["dimension"] = c.formula.dimension();
  out["base"] = digraph(c.base);
  out["power"] = digraph(c.power);
  out["target"] = digraph(c.target);
  out["verified"] = c.verified();
  out["to_target"] = hom(c.to_target);
  out["from_target"] = hom(c.from_target);
  return out;
}

Json t3_construction(const T3Construction& c) {
  Json out = construction(c.construction);
  out["witness"] = rect_witness(c.witness);
  out["embedding"] = c.embedding;
  out["core_vertices"] = c.core.kept;
  return out;
}

Json signature(const std::vector<SignatureEntry>& entries) {
  Json out = Json::object();
  for (const auto& [name, holds] : entries) out[name] = holds;
  return out;
}

Json classification(const Classification& c, bool with_dot) {
  Json out;
  out["verdict"] = std::string(to_string(c.verdict));
  out["core"] = digraph(c.core.core);
  Json bounds = Json::array();
  for (const UpperBound& b : c.upper_bounds) {
    Json entry;
    entry["name"] = b.name();
    if (b.kind == UpperBound::Kind::T3) {
      entry["witness"] = rect_witness(b.t3->witness);
      entry["construction"] = t3_construction(*b.t3);
    } else {
      entry["prime"] = b.prime;
      entry["failing_condition"] = "cyclic:" + std::to_string(b.prime);
      entry["divides_shortest_cycle"] = b.divides_shortest_cycle;
    }
    bounds.push_back(std::move(entry));
  }
  out["upper_bounds"] = std::move(bounds);
  out["signature"] = signature(c.signature);
  if (with_dot) {
    Json dot;
    dot["core"] = encode(c.core.core, Format::Dot);
    for (const UpperBound& b : c.upper_bounds)
      if (b.t3) dot["t3_power"] = encode(b.t3->construction.power, Format::Dot);
    out["dot"] = std::move(dot);
  }
  return out;
}

}  // namespace ppc::json
