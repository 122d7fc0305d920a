// ppc: command-line front end for the pp-constructability library.
//
// Exit codes: 0 success, 1 negative decision, 2 usage or parse error,
// 3 resource limit, 4 internal inconsistency.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ppc/classify.hpp"
#include "ppc/digraph.hpp"
#include "ppc/error.hpp"
#include "ppc/homsearch.hpp"
#include "ppc/minorcond.hpp"
#include "ppc/ppcons.hpp"
#include "ppc/serialize.hpp"

namespace {

using ppc::json::Json;

enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kResource = 3, kInternal = 4 };

struct Options {
  std::uint64_t budget_nodes = ppc::SearchBudget{}.node_limit;
  std::size_t budget_vertices = ppc::kDefaultVertexBudget;
  std::vector<std::size_t> primes;
  std::string format = "json";
  bool dot = false;

  ppc::Limits limits() const { return {budget_vertices, {budget_nodes}}; }
  bool want_dot() const { return dot || format == "dot"; }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ppc::Error(ppc::ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

ppc::Digraph load(const std::string& path) { return ppc::decode_auto(read_input(path)); }

int emit(const Json& payload, int code = kOk) {
  std::cout << payload.dump() << '\n';
  return code;
}

int emit_graph(const ppc::Digraph& g, const Options& opts) {
  if (opts.want_dot()) {
    std::cout << ppc::encode(g, ppc::Format::Dot);
    return kOk;
  }
  return emit(ppc::json::digraph(g));
}

int exit_code_for(ppc::ErrorKind kind) {
  switch (kind) {
    case ppc::ErrorKind::BudgetExceeded:
    case ppc::ErrorKind::BudgetExhausted:
      return kResource;
    case ppc::ErrorKind::NotACore:
    case ppc::ErrorKind::TooFewVertices:
    case ppc::ErrorKind::IsTotallyRectangular:
      return kNegative;
    case ppc::ErrorKind::InternalInconsistency:
      return kInternal;
    default:
      return kUsage;
  }
}

int run_construction(const ppc::Construction& c, Json out, const Options& opts) {
  if (opts.want_dot()) out["dot"] = ppc::encode(c.power, ppc::Format::Dot);
  return emit(out, c.verified() ? kOk : kNegative);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify digraphs up to pp-constructability"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--budget-nodes", opts.budget_nodes, "Search node limit")->capture_default_str();
  app.add_option("--budget-vertices", opts.budget_vertices,
                 "Vertex budget for powers and indicators")
      ->capture_default_str();
  app.add_option("--primes", opts.primes, "Comma-separated prime list")->delimiter(',');
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  app.add_flag("--dot", opts.dot, "Shorthand for --format dot");

  std::function<int()> action;
  std::string input, second, condition, formula, family;
  std::size_t size = 0;

  auto* classify = app.add_subcommand("classify", "Place a digraph in the pp-constructability poset");
  classify->add_option("input", input, "Digraph file or - for stdin")->required();
  classify->callback([&] {
    action = [&] {
      std::optional<std::size_t> bound;
      if (!opts.primes.empty())
        bound = *std::max_element(opts.primes.begin(), opts.primes.end());
      auto result = ppc::classify(load(input), bound, opts.limits());
      return emit(ppc::json::classification(result, opts.want_dot()));
    };
  });

  auto* check = app.add_subcommand("check", "Decide a minor condition on the polymorphisms");
  check->add_option("input", input, "Digraph file or - for stdin")->required();
  check->add_option("--condition", condition, "Builtin name or condition text")->required();
  check->callback([&] {
    action = [&] {
      ppc::Digraph g = load(input);
      auto result = ppc::satisfies(g, ppc::condition_from_text(condition), opts.limits());
      return emit(ppc::json::satisfaction(result), result.satisfied ? kOk : kNegative);
    };
  });

  auto* core = app.add_subcommand("core", "Compute the core");
  core->add_option("input", input, "Digraph file or - for stdin")->required();
  core->callback([&] {
    action = [&] {
      auto result = ppc::core_of(load(input), opts.limits().search);
      if (opts.want_dot()) return emit_graph(result.core, opts);
      Json out;
      out["core"] = ppc::json::digraph(result.core);
      out["kept"] = result.kept;
      out["retraction"] = result.retraction.map();
      return emit(out);
    };
  });

  auto* hom = app.add_subcommand("hom", "Find a homomorphism");
  hom->add_option("source", input, "Source digraph")->required();
  hom->add_option("target", second, "Target digraph")->required();
  hom->callback([&] {
    action = [&] {
      ppc::Digraph g = load(input);
      ppc::Digraph h = load(second);
      auto map = ppc::find_hom(g, h, {}, opts.limits().search);
      Json out;
      out["hom"] = ppc::json::hom(map);
      return emit(out, map ? kOk : kNegative);
    };
  });

  auto* ppower = app.add_subcommand("ppower", "Evaluate a pp power");
  ppower->add_option("input", input, "Base digraph")->required();
  ppower->add_option("--formula", formula, "Formula, e.g. 'd=1; E(x1,y1)'")->required();
  ppower->callback([&] {
    action = [&] {
      ppc::Digraph g = load(input);
      ppc::PpFormula phi = ppc::parse_formula(formula);
      auto power = ppc::pp_power(g, phi, opts.limits());
      if (power.constants_on_non_core)
        std::cerr << "warning: constants used over a digraph that is not a core\n";
      if (opts.want_dot()) return emit_graph(power.graph, opts);
      Json out;
      out["formula"] = phi.to_string();
      out["dimension"] = phi.dimension();
      out["power"] = ppc::json::digraph(power.graph);
      out["constants_on_non_core"] = power.constants_on_non_core;
      return emit(out);
    };
  });

  auto* construct = app.add_subcommand("construct", "Run one of the explicit constructions");
  construct->require_subcommand(1);
  auto* p2_from = construct->add_subcommand("p2-from", "P2 from a core with two vertices");
  p2_from->add_option("input", input, "Digraph file or - for stdin")->required();
  p2_from->callback([&] {
    action = [&] {
      auto c = ppc::construct_p2_from(load(input), opts.limits());
      return run_construction(c, ppc::json::construction(c), opts);
    };
  });
  auto* path_cmd = construct->add_subcommand("path", "P_k from P2");
  path_cmd->add_option("k", size, "Path length in vertices")->required();
  path_cmd->callback([&] {
    action = [&] {
      auto c = ppc::construct_path_formula(size, opts.limits());
      Json out = ppc::json::construction(c.construction);
      out["witness_path"] = c.witness_path;
      return run_construction(c.construction, out, opts);
    };
  });
  auto* t3_from = construct->add_subcommand("t3-from", "T3 from a non-rectangular core");
  t3_from->add_option("input", input, "Digraph file or - for stdin")->required();
  t3_from->callback([&] {
    action = [&] {
      auto c = ppc::construct_t3_from(load(input), opts.limits());
      return run_construction(c.construction, ppc::json::t3_construction(c), opts);
    };
  });

  auto* gen = app.add_subcommand("gen", "Generate a standard digraph");
  gen->add_option("family", family, "cycle, path, tournament or clique")
      ->required()
      ->check(CLI::IsMember({"cycle", "path", "tournament", "transitive_tournament", "clique"}));
  gen->add_option("k", size, "Number of vertices")->required();
  gen->callback([&] {
    action = [&] { return emit_graph(ppc::gen_family(*ppc::family_from_name(family), size), opts); };
  });

  auto* sig = app.add_subcommand("signature", "Maltsev and cyclic conditions on the core");
  sig->add_option("input", input, "Digraph file or - for stdin")->required();
  sig->callback([&] {
    action = [&] {
      ppc::Digraph g = load(input);
      std::vector<std::size_t> arities = opts.primes;
      if (arities.empty())
        arities = ppc::primes_up_to(ppc::core_of(g, opts.limits().search).core.size());
      Json out;
      out["signature"] = ppc::json::signature(ppc::signature(g, arities, opts.limits()));
      return emit(out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const ppc::Error& e) {
    int code = exit_code_for(e.kind());
    std::cerr << "ppc: " << ppc::to_string(e.kind()) << ": " << e.what() << '\n';
    if (code == kNegative) {
      Json out;
      out["error"] = std::string(ppc::to_string(e.kind()));
      out["message"] = e.what();
      emit(out);
    }
    return code;
  } catch (const std::bad_alloc&) {
    std::cerr << "ppc: out of memory\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "ppc: " << e.what() << '\n';
    return kUsage;
  }
}
