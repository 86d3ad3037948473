#include <filesystem>
#include <fstream>

#include "catch_amalgamated.hpp"

#include "corpus.hpp"
#include "gis/io.hpp"

using namespace gis;
using nlohmann::json;

TEST_CASE("graph JSON round trip", "[io]") {
  for (auto const& [name, g] : corpus::all()) {
    INFO(name);
    CHECK(graph_from_json(to_json(g)) == g);
  }
  auto g = graph_from_json(json::parse(R"({
    "vertices": ["v", "w"],
    "edges": [{"id": "e", "src": "v", "dst": "w"}]
  })"));
  CHECK(g == corpus::edge());
}

TEST_CASE("malformed graph JSON", "[io]") {
  CHECK_THROWS_AS(graph_from_json(json::parse("{}")), Error);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": [1], "edges": []})")),
                  Error);
  CHECK_THROWS_AS(
      graph_from_json(json::parse(R"({"vertices": ["v"], "edges": [{"id": "e"}]})")),
      Error);
  CHECK_THROWS_AS(
      graph_from_json(json::parse(
          R"({"vertices": ["v"], "edges": [{"id": "e", "src": "v", "dst": "u"}]})")),
      Error);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": ["a.b"], "edges": []})")),
                  Error);
  CHECK_THROWS_AS(read_graph("/nonexistent/graph.json"), Error);
}

TEST_CASE("DOT export", "[io]") {
  auto dot = to_dot(corpus::edge());
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find(R"("v" -> "w" [label="e"];)") != std::string::npos);
}

TEST_CASE("element literals", "[io]") {
  auto g = corpus::two_cycle();
  CHECK(parse_element(g, "0").is_zero());
  auto x = parse_element(g, "e1.e2|@v");
  CHECK(x.alpha().length() == 2);
  CHECK(x.beta().is_vertex());
  CHECK(to_string(g, x) == "e1.e2|@v");
  CHECK(to_string(g, Element::zero()) == "0");

  for (auto const& y : enumerate_elements(g, 3)) {
    CHECK(parse_element(g, to_string(g, y)) == y);
  }

  CHECK_THROWS_AS(parse_element(g, "e1"), Error);
  CHECK_THROWS_AS(parse_element(g, "e1|e1|e1"), Error);
  CHECK_THROWS_AS(parse_element(g, "e1|@v"), Error);
  CHECK_THROWS_AS(parse_element(g, "e1..e2|@v"), Error);
  CHECK_THROWS_AS(parse_element(g, "e2.e2|@v"), Error);
  CHECK_THROWS_AS(parse_element(g, "@u|@u"), Error);
  CHECK_THROWS_AS(parse_element(g, "|"), Error);
}

TEST_CASE("triple JSON", "[io]") {
  auto g = corpus::cycle_with_tail_and_exit();
  auto t = triple_from_json(g, json::parse(R"({
    "H": ["x"], "W": ["v", "w"], "f": [{"cycle": ["e1", "e2"], "value": 3}]
  })"));
  CHECK(to_string(g, t) == "({x}, {v, w}, {e1.e2 -> 3})");
  CHECK(triple_from_json(g, to_json(g, t)) == t);

  auto inf = triple_from_json(g, json::parse(R"({
    "H": ["x"], "W": ["v", "w"], "f": [{"cycle": ["e1", "e2"], "value": "inf"}]
  })"));
  CHECK(to_json(g, inf)["f"][0]["value"] == "inf");

  for (auto const& [name, h] : corpus::all()) {
    for (auto const& s : enumerate_triples(h, 2).triples) {
      CHECK(triple_from_json(h, to_json(h, s)) == s);
    }
  }
}

TEST_CASE("triple JSON errors", "[io]") {
  auto g = corpus::cycle_with_tail_and_exit();
  auto err = [&](char const* text) -> std::string {
    try {
      (void)triple_from_json(g, json::parse(text));
    } catch (Error const& e) {
      return e.what();
    }
    return {};
  };
  CHECK(err(R"({"H": ["x"], "W": ["v", "w"],
                "f": [{"cycle": ["e2", "e1"], "value": 1}]})")
        == R"(cycle "e2.e1" is not in canonical rotation; write it as "e1.e2")");
  CHECK_FALSE(err(R"({"H": ["x"], "W": ["v", "w"],
                      "f": [{"cycle": ["e1", "e2"], "value": 0}]})")
                  .empty());
  CHECK_FALSE(err(R"({"H": ["x"], "W": ["v", "w"],
                      "f": [{"cycle": ["e1", "e2"], "value": "many"}]})")
                  .empty());
  CHECK_FALSE(err(R"({"H": ["x"], "W": ["v", "w"],
                      "f": [{"cycle": ["e1", "e2"], "value": 1},
                            {"cycle": ["e1", "e2"], "value": 2}]})")
                  .empty());
  CHECK_FALSE(err(R"({"H": ["x"], "W": ["v", "w"],
                      "f": [{"cycle": ["e1"], "value": 1}]})")
                  .empty());
  CHECK_FALSE(err(R"({"H": ["x", "x"], "W": [], "f": []})").empty());
  CHECK_FALSE(err(R"({"H": ["w"], "W": [], "f": []})").empty());
  CHECK_FALSE(err(R"({"H": [], "W": ["w"], "f": []})").empty());
  CHECK_FALSE(err(R"({"H": [], "W": []})").empty());
  CHECK(err(R"({"H": ["x"], "W": ["v", "w"], "f": []})").find("undefined")
        != std::string::npos);
}

TEST_CASE("reading files", "[io]") {
  auto dir = std::filesystem::temp_directory_path() / "gis_io_test";
  std::filesystem::create_directories(dir);
  auto g = corpus::loop();
  {
    std::ofstream(dir / "g.json") << to_json(g).dump();
    std::ofstream(dir / "t.json")
        << R"({"H": [], "W": ["v"], "f": [{"cycle": ["e"], "value": 2}]})";
    std::ofstream(dir / "bad.json") << "{not json";
  }
  auto read = read_graph(dir / "g.json");
  CHECK(read == g);
  CHECK(to_string(g, read_triple(g, dir / "t.json")) == "({}, {v}, {e -> 2})");
  CHECK_THROWS_AS(read_graph(dir / "bad.json"), Error);
  std::filesystem::remove_all(dir);
}
