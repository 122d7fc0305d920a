#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "ppc/digraph.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless redirected in args.
Run ppc_cli(const std::string& args) {
  std::string command = std::string(PPC_CLI_PATH) + " " + args;
  if (command.find("2>") == std::string::npos) command += " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run run;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) run.out.append(buffer.data(), got);
  int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

class Workspace {
 public:
  Workspace() : dir_(fs::temp_directory_path() / ("ppc-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) const {
    fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string graph(const std::string& name, const ppc::Digraph& g) const {
    return write(name, ppc::encode(g, ppc::Format::Json));
  }

 private:
  fs::path dir_;
};

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("gen") {
  auto r = ppc_cli("gen cycle 5");
  CHECK(r.code == 0);
  CHECK(ppc::decode_auto(r.out) == ppc::cycle(5));
  auto dot = ppc_cli("gen cycle 5 --dot");
  CHECK(dot.code == 0);
  CHECK(dot.out == ppc::encode(ppc::cycle(5), ppc::Format::Dot));
  CHECK(ppc_cli("--format dot gen path 3").out == ppc::encode(ppc::path(3), ppc::Format::Dot));
  CHECK(ppc::decode_auto(ppc_cli("gen tournament 4").out) == ppc::transitive_tournament(4));
  CHECK(ppc::decode_auto(ppc_cli("gen clique 3").out) == ppc::clique(3));
  CHECK(ppc_cli("gen wheel 3").code == 2);
  CHECK(ppc_cli("gen clique 1").code == 2);
}

TEST_CASE("hom") {
  Workspace ws;
  auto c6 = ws.graph("c6.json", ppc::cycle(6));
  auto c3 = ws.graph("c3.json", ppc::cycle(3));
  auto r = ppc_cli("hom " + c6 + " " + c3);
  CHECK(r.code == 0);
  CHECK(r.out == "{\"hom\":[0,1,2,0,1,2]}\n");
  auto no = ppc_cli("hom " + c3 + " " + c6);
  CHECK(no.code == 1);
  CHECK(parse(no)["hom"].is_null());
}

TEST_CASE("check") {
  Workspace ws;
  auto c5 = ws.graph("c5.json", ppc::cycle(5));
  auto t3 = ws.graph("t3.json", ppc::transitive_tournament(3));
  auto p2 = ws.graph("p2.json", ppc::path(2));

  auto cyc = ppc_cli("check " + c5 + " --condition cyclic:5");
  CHECK(cyc.code == 1);
  CHECK(parse(cyc)["satisfied"] == false);
  CHECK(parse(cyc)["witness"].is_null());

  auto malt = ppc_cli("check " + t3 + " --condition maltsev");
  CHECK(malt.code == 1);
  CHECK(parse(malt)["satisfied"] == false);

  auto four = ppc_cli("check " + p2 +
                      " --condition \"f(x,x,y)=f(y,y,x); f(y,y,x)=f(x,y,y); f(x,y,y)=f(y,x,x)\"");
  CHECK(four.code == 0);
  auto doc = parse(four);
  CHECK(doc["satisfied"] == true);
  CHECK(doc["witness"][0]["values"].size() == 8);

  CHECK(ppc_cli("check " + p2 + " --condition \"f(x,y=f(y,x)\"").code == 2);
  CHECK(ppc_cli("check " + p2 + " --condition nonsense").code == 2);
}

TEST_CASE("classify") {
  Workspace ws;
  auto c6 = ws.graph("c6.json", ppc::cycle(6));
  auto r = ppc_cli("classify " + c6);
  CHECK(r.code == 0);
  auto doc = parse(r);
  CHECK(doc["verdict"] == "StrictlyBelow");
  REQUIRE(doc["upper_bounds"].size() == 2);
  CHECK(doc["upper_bounds"][0]["name"] == "C_2");
  CHECK(doc["upper_bounds"][1]["name"] == "C_3");
  CHECK(ppc_cli("classify " + c6).out == r.out);

  auto p1 = ws.write("p1.txt", "1\n");
  CHECK(parse(ppc_cli("classify " + p1))["verdict"] == "EquivalentP1");

  auto bad = ws.write("bad.json", "{\"n\": 3,\n \"edges\": [[0,1],, ]}");
  auto err = ppc_cli("classify " + bad + " 2>&1");
  CHECK(err.code == 2);
  CHECK(err.out.find("ParseError") != std::string::npos);
  CHECK(err.out.find("2:") != std::string::npos);

  auto k3 = ws.graph("k3.json", ppc::clique(3));
  auto dot = parse(ppc_cli("classify --dot " + k3));
  CHECK(dot["dot"].contains("core"));
  CHECK(dot["dot"].contains("t3_power"));
  auto primes = parse(ppc_cli("classify " + k3 + " --primes 2,3,5"));
  CHECK(primes["signature"].contains("cyclic:5"));

  CHECK(ppc_cli("classify /nonexistent/none.json").code == 2);
}

TEST_CASE("stdin and core") {
  Workspace ws;
  std::string json = ppc::encode(ppc::Digraph(3, {{0, 1}, {2, 1}}), ppc::Format::Json);
  auto r = ppc_cli("core - < " + ws.write("g.json", json));
  CHECK(r.code == 0);
  auto doc = parse(r);
  ppc::Digraph core = ppc::decode_auto(doc["core"].dump());
  CHECK(core.size() == 2);
  CHECK(core.edge_count() == 1);
  REQUIRE(doc["kept"].size() == 2);
  auto retraction = doc["retraction"].get<std::vector<ppc::Vertex>>();
  auto kept = doc["kept"].get<std::vector<ppc::Vertex>>();
  for (std::size_t i = 0; i < kept.size(); ++i) CHECK(retraction[kept[i]] == i);
  CHECK(retraction[0] == retraction[2]);
}

TEST_CASE("ppower") {
  Workspace ws;
  auto t3 = ws.graph("t3.json", ppc::transitive_tournament(3));
  auto r = ppc_cli("ppower " + t3 + " --formula 'd=1; x1=c0 & y1=c1'");
  CHECK(r.code == 0);
  auto doc = parse(r);
  CHECK(doc["formula"] == "d=1; x1=c0 & y1=c1");
  CHECK(ppc::decode_auto(doc["power"].dump()) == ppc::Digraph(3, {{0, 1}}));
  CHECK(doc["constants_on_non_core"] == false);

  CHECK(ppc_cli("ppower " + t3 + " --formula 'd=1; x1=c7'").code == 2);
  CHECK(ppc_cli("ppower " + t3 + " --formula 'd=1; E(x1,'").code == 2);
  CHECK(ppc_cli("--budget-vertices 100 ppower " + t3 + " --formula 'd=5; true'").code == 3);
}

TEST_CASE("construct") {
  Workspace ws;
  auto path4 = ppc_cli("construct path 4");
  CHECK(path4.code == 0);
  auto doc = parse(path4);
  CHECK(doc["dimension"] == 3);
  CHECK(doc["verified"] == true);
  CHECK(doc["formula"] == "d=3; x1=y2 & x2=y3 & E(x3,y1)");
  CHECK(doc["witness_path"] == nlohmann::json::array({0, 4, 6, 7}));

  auto k3 = ws.graph("k3.json", ppc::clique(3));
  auto t3 = parse(ppc_cli("construct t3-from " + k3));
  CHECK(t3["verified"] == true);
  CHECK(t3["witness"]["k"] == 1);
  CHECK(t3["embedding"] == nlohmann::json::array({6, 0, 1}));

  auto c4 = ws.graph("c4.json", ppc::cycle(4));
  auto rect = ppc_cli("construct t3-from " + c4);
  CHECK(rect.code == 1);
  CHECK(parse(rect)["error"] == "IsTotallyRectangular");

  auto p2 = parse(ppc_cli("construct p2-from " + ws.graph("c5.json", ppc::cycle(5))));
  CHECK(p2["verified"] == true);
  CHECK(ppc_cli("construct p2-from " + ws.graph("c1.json", ppc::cycle(1))).code == 1);
  CHECK(ppc_cli("construct path 40").code == 3);
  CHECK(ppc_cli("construct").code == 2);
}

TEST_CASE("signature") {
  Workspace ws;
  auto t3 = ws.graph("t3.json", ppc::transitive_tournament(3));
  auto r = ppc_cli("signature " + t3 + " --primes 2,3,5");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"signature\":{\"maltsev\":false,\"cyclic:2\":true,\"cyclic:3\":true,\"cyclic:5\":true}}\n");
  auto c2 = parse(ppc_cli("signature " + ws.graph("c2.json", ppc::cycle(2))));
  CHECK(c2["signature"]["cyclic:2"] == false);
}

TEST_CASE("usage errors and budgets") {
  CHECK(ppc_cli("").code == 2);
  CHECK(ppc_cli("frobnicate").code == 2);
  CHECK(ppc_cli("--help").code == 0);
  CHECK(ppc_cli("--format xml gen cycle 3").code == 2);
  Workspace ws;
  auto k4 = ws.graph("k4.json", ppc::clique(4));
  auto k3 = ws.graph("k3.json", ppc::clique(3));
  CHECK(ppc_cli("--budget-nodes 1 hom " + k4 + " " + k3).code == 3);
}
