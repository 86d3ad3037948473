#include <algorithm>

#include "catch_amalgamated.hpp"

#include "corpus.hpp"
#include "gis/congruence.hpp"
#include "gis/io.hpp"
#include "gis/oracle.hpp"

using namespace gis;

namespace {
  Element el(Graph const& g, std::string_view s) {
    return parse_element(g, s);
  }

  VertexSet set_of(Graph const& g, std::vector<std::string> const& ids) {
    VertexSet s(g.number_of_vertices());
    for (auto const& id : ids) {
      s.insert(g.vertex(id));
    }
    return s;
  }

  // Triple with one cycle, given by edge ids in canonical rotation.
  CongruenceTriple triple(Graph const& g, std::vector<std::string> const& h,
                          std::vector<std::string> const& w,
                          std::string_view cycle = {},
                          Period value = Period::infinite()) {
    CongruenceTriple t{set_of(g, h), {set_of(g, w), {}}};
    if (!cycle.empty()) {
      t.pair.f.emplace(Cycle::from_path(g, parse_path(g, cycle)), value);
    }
    return t;
  }

  CongruenceTriple loop_triple(Period value) {
    static auto const g = corpus::loop();
    return triple(g, {}, {"v"}, "e", value);
  }
}  // namespace

TEST_CASE("periods", "[congruence]") {
  auto const inf = Period::infinite();
  CHECK(Period::finite(3).value() == 3);
  CHECK_FALSE(inf.is_finite());
  CHECK_THROWS_AS(Period::finite(0), Error);
  CHECK_THROWS_AS(inf.value(), Error);
  CHECK(Period::finite(1000) < inf);
  CHECK(Period::finite(2) < Period::finite(3));
  CHECK(divides(Period::finite(2), Period::finite(6)));
  CHECK_FALSE(divides(Period::finite(4), Period::finite(6)));
  CHECK(divides(Period::finite(5), inf));
  CHECK(divides(inf, inf));
  CHECK_FALSE(divides(inf, Period::finite(5)));
  CHECK(to_string(inf) == "inf");
  CHECK(to_string(Period::finite(7)) == "7");
}

TEST_CASE("triple validation", "[congruence]") {
  auto g = corpus::cycle_with_tail_and_exit();
  CHECK(validate_triple(g, CongruenceTriple::identity(g)));
  CHECK(validate_triple(g, CongruenceTriple::universal(g)));
  CHECK(validate_triple(g, triple(g, {"x"}, {"v", "w"}, "e1.e2",
                                  Period::finite(2))));

  // H not hereditary
  CHECK_FALSE(validate_triple(g, triple(g, {"w"}, {})));
  // w has index two while x is outside H
  auto d = validate_triple(g, triple(g, {}, {"w"}));
  REQUIRE_FALSE(d);
  CHECK(d.messages.front().find("index 2") != std::string::npos);
  // W inside H
  CHECK_FALSE(validate_triple(g, triple(g, {"x"}, {"x"})));
  // f missing on a cycle of C(W)
  CHECK_FALSE(validate_triple(g, triple(g, {"x"}, {"v", "w"})));
  // f defined on a cycle outside C(W)
  CHECK_FALSE(validate_triple(g, triple(g, {"x"}, {"v"}, "e1.e2",
                                        Period::finite(1))));
  // vertex sets of the wrong size
  CongruenceTriple bad{VertexSet(2), {VertexSet(2), {}}};
  CHECK_FALSE(validate_triple(g, bad));
  CHECK_THROWS_AS(TripleCongruence(g, bad), Error);
}

TEST_CASE("generating pairs", "[congruence]") {
  auto g     = corpus::cycle_with_tail_and_exit();
  auto t     = triple(g, {"x"}, {"v", "w"}, "e1.e2", Period::finite(2));
  auto pairs = generating_pairs(g, t);
  // (x, 0); (e1 e1*, v), (e2 e2*, w); two rotations of (e1 e2)^2
  REQUIRE(pairs.size() == 5);
  CHECK(pairs[0] == std::pair{el(g, "@x|@x"), Element::zero()});
  CHECK(std::count(pairs.begin(), pairs.end(),
                   std::pair{el(g, "e2|e2"), el(g, "@w|@w")})
        == 1);
  CHECK(std::count(pairs.begin(), pairs.end(),
                   std::pair{el(g, "e2.e1.e2.e1|@w"), el(g, "@w|@w")})
        == 1);
  for (auto const& [a, b] : pairs) {
    CHECK(equiv(g, t, a, b));
  }
  CHECK(generating_pairs(g, CongruenceTriple::identity(g)).empty());
}

TEST_CASE("membership on the loop", "[congruence]") {
  auto g  = corpus::loop();
  auto f2 = loop_triple(Period::finite(2));
  CHECK(equiv(g, f2, el(g, "e.e|@v"), el(g, "@v|@v")));
  CHECK(equiv(g, f2, el(g, "@v|@v"), el(g, "@v|e.e")));
  CHECK(equiv(g, f2, el(g, "e.e.e|@v"), el(g, "e|@v")));
  CHECK(equiv(g, f2, el(g, "@v|e"), el(g, "e|@v")));
  CHECK(equiv(g, f2, el(g, "e|e"), el(g, "@v|@v")));
  CHECK_FALSE(equiv(g, f2, el(g, "e|@v"), el(g, "@v|@v")));
  CHECK_FALSE(equiv(g, f2, el(g, "@v|@v"), Element::zero()));
  CHECK(equiv(g, f2, Element::zero(), Element::zero()));

  auto inf = loop_triple(Period::infinite());
  CHECK(equiv(g, inf, el(g, "e|e"), el(g, "@v|@v")));
  CHECK(equiv(g, inf, el(g, "e.e|e"), el(g, "e|@v")));
  CHECK_FALSE(equiv(g, inf, el(g, "e.e|@v"), el(g, "@v|@v")));

  auto id = CongruenceTriple::identity(g);
  CHECK_FALSE(equiv(g, id, el(g, "e|e"), el(g, "@v|@v")));
  auto all = CongruenceTriple::universal(g);
  CHECK(equiv(g, all, el(g, "e|e.e"), Element::zero()));
}

TEST_CASE("normal forms on the loop", "[congruence]") {
  auto g  = corpus::loop();
  auto f2 = loop_triple(Period::finite(2));
  CHECK(normal_form(g, f2, el(g, "e.e.e|@v")) == el(g, "e|@v"));
  CHECK(normal_form(g, f2, el(g, "@v|e")) == el(g, "e|@v"));
  CHECK(normal_form(g, f2, el(g, "e.e|e")) == el(g, "e|@v"));
  CHECK(normal_form(g, f2, el(g, "e|e")) == el(g, "@v|@v"));

  auto inf = loop_triple(Period::infinite());
  CHECK(normal_form(g, inf, el(g, "e.e|e.e.e")) == el(g, "@v|e"));
  CHECK(normal_form(g, CongruenceTriple::universal(g), el(g, "e|@v"))
        == Element::zero());
}

TEST_CASE("normal form across a two-vertex cycle", "[congruence]") {
  // e1 e2 ~ v under f = 1; multiplying by e1* on the left gives e2 ~ e1*
  auto g = corpus::two_cycle();
  auto t = triple(g, {}, {"v", "w"}, "e1.e2", Period::finite(1));
  TripleCongruence rho(g, t);
  CHECK(rho.contains(el(g, "e2|@v"), el(g, "@w|e1")));
  CHECK(rho.normal_form(el(g, "e2|@v")) == rho.normal_form(el(g, "@w|e1")));
}

TEST_CASE("reduction modulo H", "[congruence]") {
  auto g = corpus::loop_with_exit();
  auto t = triple(g, {"x"}, {"v"}, "e", Period::infinite());
  TripleCongruence rho(g, t);
  CHECK(rho.reduce_mod_h(el(g, "d|e.d")).is_zero());
  CHECK(rho.reduce_mod_h(el(g, "e|e")) == el(g, "e|e"));
  CHECK(rho.contains(el(g, "d|d"), Element::zero()));
  CHECK(rho.contains(el(g, "e|e"), el(g, "@v|@v")));
}

TEST_CASE("vertex class members", "[congruence]") {
  auto g  = corpus::loop();
  auto f2 = loop_triple(Period::finite(2));
  auto members = vertex_class_members(g, f2, 0, 2);
  std::vector<Element> expected{el(g, "@v|@v"), el(g, "e|e"),
                                el(g, "e.e|e.e"), el(g, "e.e|@v"),
                                el(g, "@v|e.e")};
  std::sort(expected.begin(), expected.end());
  CHECK(members == expected);

  // brute force against every element of bounded length
  for (auto const& t : enumerate_triples(g, 3).triples) {
    if (t.h.contains(0)) {
      CHECK_THROWS_AS(vertex_class_members(g, t, 0, 3), Error);
      continue;
    }
    TripleCongruence rho(g, t);
    std::vector<Element> brute;
    for (auto const& x : enumerate_elements(g, 3)) {
      if (rho.contains(Element::vertex(0), x)) {
        brute.push_back(x);
      }
    }
    std::sort(brute.begin(), brute.end());
    CHECK(rho.vertex_class_members(0, 3) == brute);
  }
}

TEST_CASE("triple enumeration", "[congruence]") {
  auto loop = enumerate_triples(corpus::loop(), 2);
  CHECK(loop.triples.size() == 5);
  CHECK(loop.infinite_family);

  auto edge = enumerate_triples(corpus::edge(), 4);
  CHECK(edge.triples.size() == 4);
  CHECK_FALSE(edge.infinite_family);
  CHECK(enumerate_triples(corpus::point(), 1).triples.size() == 2);
  CHECK_THROWS_AS(enumerate_triples(corpus::point(), 0), Error);

  for (auto const& [name, g] : corpus::all()) {
    INFO(name);
    auto ts = enumerate_triples(g, 3).triples;
    CHECK(std::is_sorted(ts.begin(), ts.end(),
                         [](auto const& a, auto const& b) {
                           return compare(a, b) < 0;
                         }));
    CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
    for (auto const& t : ts) {
      CHECK(validate_triple(g, t));
    }
    // without cycles the count is the sum over H of 2^|index-one vertices|
    if (is_acyclic(g)) {
      std::size_t expected = 0;
      for (auto const& h : enumerate_hereditary(g)) {
        expected += std::size_t{1} << index_one_vertices(g, h).size();
      }
      CHECK(ts.size() == expected);
    }
  }
}

TEST_CASE("triple order agrees with inclusion", "[congruence][property]") {
  for (auto const& [name, g] : corpus::all()) {
    INFO(name);
    auto ts = enumerate_triples(g, 4).triples;
    for (auto const& a : ts) {
      CHECK(triple_leq(g, a, a));
      CHECK(triple_leq(g, CongruenceTriple::identity(g), a));
      CHECK(triple_leq(g, a, CongruenceTriple::universal(g)));
      for (auto const& b : ts) {
        TripleCongruence rho(g, b);
        auto const pairs = generating_pairs(g, a);
        bool included    = std::all_of(
            pairs.begin(), pairs.end(),
            [&](auto const& p) { return rho.contains(p.first, p.second); });
        INFO(to_string(g, a) << " <= " << to_string(g, b));
        CHECK(triple_leq(g, a, b) == included);
        if (a != b && triple_leq(g, a, b)) {
          CHECK_FALSE(triple_leq(g, b, a));
        }
      }
    }
  }
}

TEST_CASE("membership agrees with congruence closure", "[congruence][oracle]") {
  for (auto const& [name, g] : corpus::all()) {
    if (!is_acyclic(g)) {
      continue;
    }
    INFO(name);
    auto s = materialize(g);
    for (auto const& t : enumerate_triples(g, 1).triples) {
      auto closed = congruence_closure(s, generating_pairs(g, t));
      TripleCongruence rho(g, t);
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
          REQUIRE(rho.contains(s.element(i), s.element(j))
                  == closed.contains(i, j));
        }
      }
    }
  }
}

TEST_CASE("membership agrees with bounded transitions", "[congruence][oracle]") {
  for (auto const& name :
       {"loop", "two_cycle", "loop_with_exit", "cycle_with_tail_and_exit"}) {
    INFO(name);
    Graph g;
    for (auto& [n, h] : corpus::all()) {
      if (n == name) {
        g = h;
      }
    }
    auto const xs = enumerate_elements(g, 2);
    for (auto const& t : enumerate_triples(g, 2).triples) {
      TripleCongruence  rho(g, t);
      TransitionSystem  sys(g, t, 5);
      for (auto const& x : xs) {
        auto comp = sys.component(x);
        std::sort(comp.begin(), comp.end());
        for (auto const& y : xs) {
          bool const reached = std::binary_search(comp.begin(), comp.end(), y);
          INFO(to_string(g, t) << ' ' << to_string(g, x) << ' '
                               << to_string(g, y));
          REQUIRE(rho.contains(x, y) == reached);
        }
      }
    }
  }
}

TEST_CASE("normal form properties", "[congruence][property]") {
  for (auto const& [name, g] : corpus::all()) {
    INFO(name);
    auto const xs = enumerate_elements(g, g.number_of_edges() > 2 ? 2 : 3);
    for (auto const& t : enumerate_triples(g, 2).triples) {
      TripleCongruence rho(g, t);
      for (auto const& x : xs) {
        auto const n = rho.normal_form(x);
        REQUIRE(rho.contains(x, n));
        REQUIRE(rho.normal_form(n) == n);
      }
    }
  }
}

TEST_CASE("chain stabilization", "[congruence]") {
  auto g = corpus::loop();
  std::vector<CongruenceTriple> chain;
  for (std::uint64_t f : {8, 4, 2, 2, 2}) {
    chain.push_back(loop_triple(Period::finite(f)));
  }
  auto s = chain_stabilizes(g, chain);
  CHECK(s.index == 3);
  CHECK(s.witnessed);

  auto one = chain_stabilizes(g, std::span(chain).first(1));
  CHECK(one.index == 1);
  CHECK_FALSE(one.witnessed);

  std::vector<CongruenceTriple> down{loop_triple(Period::finite(2)),
                                     loop_triple(Period::finite(4))};
  CHECK_THROWS_AS(chain_stabilizes(g, down), Error);
  CHECK_THROWS_AS(chain_stabilizes(g, std::span<CongruenceTriple const>{}),
                  Error);
}
