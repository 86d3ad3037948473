#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"

#include "cli.hpp"
#include "corpus.hpp"
#include "gis/io.hpp"

using namespace gis;
using nlohmann::json;

namespace {
  struct Workspace {
    std::filesystem::path dir;

    Workspace() {
      dir = std::filesystem::temp_directory_path()
            / ("gis_cli_test_" + std::to_string(std::rand()));
      std::filesystem::create_directories(dir);
    }
    ~Workspace() {
      std::filesystem::remove_all(dir);
    }
    std::string write(std::string const& name, std::string const& text) const {
      std::ofstream(dir / name) << text;
      return (dir / name).string();
    }
  };

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out;
    std::ostringstream err;
    int const          code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }
}  // namespace

TEST_CASE("cli report", "[cli]") {
  Workspace ws;
  auto g = ws.write("edge.json", to_json(corpus::edge()).dump());

  auto text = run({"report", g});
  REQUIRE(text.code == cli::success);
  CHECK(text.out.find("hereditary subsets: {} {w} {v, w}") != std::string::npos);
  CHECK(text.out.find("congruence-free: no") != std::string::npos);

  auto dot  = (ws.dir / "g.dot").string();
  auto js   = run({"report", g, "--format", "json", "--dot", dot});
  REQUIRE(js.code == cli::success);
  auto doc = json::parse(js.out);
  CHECK(doc["hereditary"].size() == 3);
  CHECK(doc["index_one"] == json::array({"v"}));
  CHECK(doc["rees_only"] == false);
  CHECK(doc["zero_simple"] == false);
  CHECK(std::filesystem::exists(dot));

  auto p = ws.write("point.json", to_json(corpus::point()).dump());
  auto pd = json::parse(run({"report", p, "--format", "json"}).out);
  CHECK(pd["congruence_free"] == true);
  CHECK(pd["zero_simple"] == true);
}

TEST_CASE("cli equiv and nf", "[cli]") {
  Workspace ws;
  auto g = ws.write("loop.json", to_json(corpus::loop()).dump());
  auto t = ws.write("t.json",
                    R"({"H": [], "W": ["v"], "f": [{"cycle": ["e"], "value": 2}]})");

  auto yes = run({"equiv", g, t, "e.e.e|@v", "e|@v"});
  CHECK(yes.code == cli::success);
  CHECK(yes.out == "true\n");
  auto no = run({"equiv", g, t, "e|@v", "@v|@v"});
  CHECK(no.code == cli::success);
  CHECK(no.out == "false\n");

  auto cert = run({"equiv", g, t, "e.e.e|@v", "e|@v", "--certify", "--format",
                   "json"});
  REQUIRE(cert.code == cli::success);
  auto doc = json::parse(cert.out);
  CHECK(doc["related"] == true);
  CHECK(doc["certificate"]["found"] == true);
  CHECK(doc["certificate"]["chain"].front() == "e.e.e|@v");
  CHECK(doc["certificate"]["chain"].back() == "e|@v");

  // related, but the bounds are too tight for a certificate
  auto tight = run({"equiv", g, t, "e.e.e|@v", "e|@v", "--certify",
                    "--len-bound", "1"});
  CHECK(tight.code == cli::inconclusive);
  CHECK(tight.out.rfind("true\n", 0) == 0);

  CHECK(run({"nf", g, t, "e.e.e|@v"}).out == "e|@v\n");
  CHECK(run({"nf", g, t, "@v|e"}).out == "e|@v\n");
  auto nf = json::parse(run({"nf", g, t, "@v|e", "--format", "json"}).out);
  CHECK(nf["normal_form"] == "e|@v");

  auto bad = run({"equiv", g, t, "e|@w", "0"});
  CHECK(bad.code == cli::invalid_input);
  CHECK(bad.err.find("error:") == 0);
}

TEST_CASE("cli rejects non-canonical cycles", "[cli]") {
  Workspace ws;
  auto g = ws.write("g.json", to_json(corpus::two_cycle()).dump());
  auto t = ws.write(
      "t.json",
      R"({"H": [], "W": ["v", "w"], "f": [{"cycle": ["e2", "e1"], "value": 1}]})");
  auto r = run({"nf", g, t, "e1|@w"});
  CHECK(r.code == cli::invalid_input);
  CHECK(r.err.find(R"(write it as "e1.e2")") != std::string::npos);
}

TEST_CASE("cli enumerate", "[cli]") {
  Workspace ws;
  auto loop = ws.write("loop.json", to_json(corpus::loop()).dump());
  auto edge = ws.write("edge.json", to_json(corpus::edge()).dump());

  auto r = run({"enumerate", loop, "--f-cap", "2"});
  REQUIRE(r.code == cli::success);
  CHECK(r.out.rfind("5 triples", 0) == 0);
  CHECK(r.out.find("infinite family") != std::string::npos);

  auto b = run({"enumerate", edge, "--brute"});
  REQUIRE(b.code == cli::success);
  CHECK(b.out.find("brute force: 4 congruences = 4 triples, bijection verified")
        != std::string::npos);

  auto j = json::parse(run({"enumerate", edge, "--brute", "--format", "json"}).out);
  CHECK(j["triples"].size() == 4);
  CHECK(j["brute"]["bijection"] == true);

  CHECK(run({"enumerate", loop, "--brute"}).code == cli::invalid_input);
  CHECK(run({"enumerate", loop, "--f-cap", "0"}).code == cli::invalid_input);
}

TEST_CASE("cli triples", "[cli]") {
  Workspace ws;
  auto g  = ws.write("loop.json", to_json(corpus::loop()).dump());
  auto t8 = ws.write("t8.json",
                     R"({"H": [], "W": ["v"], "f": [{"cycle": ["e"], "value": 8}]})");
  auto t4 = ws.write("t4.json",
                     R"({"H": [], "W": ["v"], "f": [{"cycle": ["e"], "value": 4}]})");
  auto t2 = ws.write("t2.json",
                     R"({"H": [], "W": ["v"], "f": [{"cycle": ["e"], "value": 2}]})");

  auto r = run({"triples", g, t8, t4, t2, t2, t2});
  REQUIRE(r.code == cli::success);
  CHECK(r.out.find("chain stabilizes at index 3") != std::string::npos);
  CHECK(r.out.find("generators: (e|e, @v|@v) (e.e.e.e.e.e.e.e|@v, @v|@v)") != std::string::npos);

  auto j = json::parse(run({"triples", g, t2, t8, "--format", "json"}).out);
  CHECK(j["chain_increasing"] == false);
  CHECK(j["triples"][1]["leq"] == json::array({true, true}));
  CHECK(j["triples"][0]["leq"] == json::array({true, false}));
}

TEST_CASE("cli oracle", "[cli]") {
  Workspace ws;
  auto edge = ws.write("edge.json", to_json(corpus::edge()).dump());
  auto r    = run({"oracle", edge});
  REQUIRE(r.code == cli::success);
  CHECK(r.out.rfind("6 elements:", 0) == 0);
  CHECK(r.out.find("4 congruences") != std::string::npos);

  auto j = json::parse(run({"oracle", edge, "--format", "json"}).out);
  CHECK(j["associative"] == true);
  CHECK(j["congruences"].size() == 4);

  auto loop = ws.write("loop.json", to_json(corpus::loop()).dump());
  auto t    = ws.write("t.json",
                       R"({"H": [], "W": ["v"], "f": [{"cycle": ["e"], "value": 2}]})");
  auto hit  = run({"oracle", loop, "--triple", t, "--x", "e.e|@v", "--y", "@v|@v"});
  CHECK(hit.code == cli::success);
  CHECK(hit.out.rfind("reached in", 0) == 0);
  auto miss = run({"oracle", loop, "--triple", t, "--x", "e|@v", "--y", "@v|@v"});
  CHECK(miss.code == cli::inconclusive);
  CHECK(run({"oracle", loop}).code == cli::invalid_input);
  CHECK(run({"oracle", loop, "--triple", t}).code == cli::invalid_input);
}

TEST_CASE("cli argument errors and help", "[cli]") {
  CHECK(run({}).code == cli::invalid_input);
  CHECK(run({"frobnicate"}).code == cli::invalid_input);
  CHECK(run({"report"}).code == cli::invalid_input);
  CHECK(run({"report", "/nonexistent.json"}).code == cli::invalid_input);
  CHECK(run({"report", "x.json", "--format", "yaml"}).code == cli::invalid_input);
  auto help = run({"--help"});
  CHECK(help.code == cli::success);
  CHECK(help.out.find("equiv") != std::string::npos);
  auto sub = run({"equiv", "--help"});
  CHECK(sub.code == cli::success);
  CHECK(sub.out.find("--certify") != std::string::npos);
}
