#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "ppc/classify.hpp"
#include "ppc/digraph.hpp"
#include "ppc/homsearch.hpp"
#include "ppc/minorcond.hpp"
#include "ppc/ppcons.hpp"
#include "ppc/rect.hpp"

// JSON views of library results. Objects keep insertion order so output is
// byte-stable across runs.
namespace ppc::json {

using Json = nlohmann::ordered_json;

Json digraph(const Digraph& g);             // {"n": .., "edges": [[u,v], ..]}
Json hom(const std::optional<Hom>& h);      // array of images, or null
Json witness(const PolymorphismWitness& w); // [{"name","arity","values"}, ..]
Json satisfaction(const Satisfaction& s);   // {"satisfied", "witness"}
Json rect_witness(const RectWitness& w);    // {"k","a","b","c","d"}
Json construction(const Construction& c);
Json t3_construction(const T3Construction& c);
Json signature(const std::vector<SignatureEntry>& entries);

/// {"verdict", "core", "upper_bounds", "signature"}; with_dot appends a
/// "dot" object holding the core and every constructed power as DOT text.
Json classification(const Classification& c, bool with_dot = false);

}  // namespace ppc::json
