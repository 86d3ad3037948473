#include "gis/io.hpp"

#include <fstream>
#include <sstream>

namespace gis {

  using nlohmann::json;

  namespace {
    std::string const& require_string(json const& j, char const* what) {
      if (!j.is_string()) {
        throw Error(std::string(what) + " must be a string");
      }
      return j.get_ref<std::string const&>();
    }

    json const& require_array(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
        throw Error(std::string("expected an array under \"") + key + "\"");
      }
      return j.at(key);
    }

    json read_json_file(std::filesystem::path const& file) {
      std::ifstream in(file);
      if (!in) {
        throw Error("cannot open " + file.string());
      }
      try {
        return json::parse(in);
      } catch (json::parse_error const& e) {
        throw Error(file.string() + ": " + e.what());
      }
    }

    VertexSet vertex_set_from_json(Graph const& g, json const& j,
                                   char const* key) {
      VertexSet out = g.no_vertices();
      for (auto const& id : require_array(j, key)) {
        auto v = g.vertex(require_string(id, "vertex id"));
        if (out.contains(v)) {
          throw Error(std::string("vertex \"") + g.vertex_id(v)
                      + "\" listed twice in " + key);
        }
        out.insert(v);
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Graphs
  ////////////////////////////////////////////////////////////////////////

  Graph graph_from_json(json const& j) {
    Graph g;
    for (auto const& id : require_array(j, "vertices")) {
      g.add_vertex(require_string(id, "vertex id"));
    }
    for (auto const& e : require_array(j, "edges")) {
      if (!e.is_object() || !e.contains("id") || !e.contains("src")
          || !e.contains("dst")) {
        throw Error("edges need \"id\", \"src\" and \"dst\"");
      }
      g.add_edge(require_string(e["id"], "edge id"),
                 require_string(e["src"], "edge source"),
                 require_string(e["dst"], "edge range"));
    }
    return g;
  }

  json to_json(Graph const& g) {
    json j;
    j["vertices"] = json::array();
    for (vertex_index v = 0; v < g.number_of_vertices(); ++v) {
      j["vertices"].push_back(g.vertex_id(v));
    }
    j["edges"] = json::array();
    for (edge_index e = 0; e < g.number_of_edges(); ++e) {
      j["edges"].push_back({{"id", g.edge_id(e)},
                            {"src", g.vertex_id(g.source(e))},
                            {"dst", g.vertex_id(g.range(e))}});
    }
    return j;
  }

  Graph read_graph(std::filesystem::path const& file) {
    return graph_from_json(read_json_file(file));
  }

  std::string to_dot(Graph const& g) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (vertex_index v = 0; v < g.number_of_vertices(); ++v) {
      out << "  " << json(g.vertex_id(v)).dump() << ";\n";
    }
    for (edge_index e = 0; e < g.number_of_edges(); ++e) {
      out << "  " << json(g.vertex_id(g.source(e))).dump() << " -> "
          << json(g.vertex_id(g.range(e))).dump()
          << " [label=" << json(g.edge_id(e)).dump() << "];\n";
    }
    out << "}\n";
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Element literals
  ////////////////////////////////////////////////////////////////////////

  Path parse_path(Graph const& g, std::string_view text) {
    if (text.starts_with('@')) {
      return Path::vertex(g.vertex(text.substr(1)));
    }
    std::vector<edge_index> edges;
    std::size_t             start = 0;
    while (true) {
      auto const dot = text.find('.', start);
      auto const id  = text.substr(start, dot - start);
      if (id.empty()) {
        throw Error("empty edge id in path \"" + std::string(text) + "\"");
      }
      edges.push_back(g.edge(id));
      if (dot == std::string_view::npos) {
        break;
      }
      start = dot + 1;
    }
    auto const base = g.source(edges.front());
    return Path(g, base, std::move(edges));
  }

  std::string to_string(Graph const& g, Path const& p) {
    if (p.is_vertex()) {
      return "@" + g.vertex_id(p.source());
    }
    std::string out;
    for (auto e : p.edges()) {
      if (!out.empty()) {
        out += '.';
      }
      out += g.edge_id(e);
    }
    return out;
  }

  Element parse_element(Graph const& g, std::string_view text) {
    if (text == "0") {
      return Element::zero();
    }
    auto const bar = text.find('|');
    if (bar == std::string_view::npos
        || text.find('|', bar + 1) != std::string_view::npos) {
      throw Error("element literal \"" + std::string(text)
                  + "\" must be 0 or P|Q");
    }
    auto alpha = parse_path(g, text.substr(0, bar));
    auto beta  = parse_path(g, text.substr(bar + 1));
    if (alpha.range() != beta.range()) {
      throw Error("element literal \"" + std::string(text)
                  + "\": the two paths end at different vertices");
    }
    return Element(std::move(alpha), std::move(beta));
  }

  std::string to_string(Graph const& g, Element const& x) {
    if (x.is_zero()) {
      return "0";
    }
    return to_string(g, x.alpha()) + "|" + to_string(g, x.beta());
  }

  std::string to_string(Graph const& g, VertexSet const& s) {
    std::string out = "{";
    for (auto v : s.members()) {
      if (out.size() > 1) {
        out += ", ";
      }
      out += g.vertex_id(v);
    }
    return out + "}";
  }

  json to_json(Graph const& g, VertexSet const& s) {
    json out = json::array();
    for (auto v : s.members()) {
      out.push_back(g.vertex_id(v));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Triples
  ////////////////////////////////////////////////////////////////////////

  CongruenceTriple triple_from_json(Graph const& g, json const& j) {
    CongruenceTriple t{vertex_set_from_json(g, j, "H"),
                       {vertex_set_from_json(g, j, "W"), {}}};
    for (auto const& entry : require_array(j, "f")) {
      if (!entry.is_object() || !entry.contains("cycle")
          || !entry.contains("value")) {
        throw Error("entries of \"f\" need \"cycle\" and \"value\"");
      }
      std::vector<edge_index> edges;
      for (auto const& id : require_array(entry, "cycle")) {
        edges.push_back(g.edge(require_string(id, "edge id")));
      }
      if (edges.empty()) {
        throw Error("empty cycle in \"f\"");
      }
      auto const base = g.source(edges.front());
      Path const p(g, base, std::move(edges));
      if (!Cycle::is_cycle(p)) {
        throw Error("\"" + to_string(g, p) + "\" is not a cycle");
      }
      auto c = Cycle::from_path(g, p);
      if (c.path() != p) {
        throw Error("cycle \"" + to_string(g, p)
                    + "\" is not in canonical rotation; write it as \""
                    + to_string(g, c.path()) + "\"");
      }
      auto const& value = entry.at("value");
      Period      period = Period::infinite();
      if (value.is_string()) {
        if (value.get<std::string>() != "inf") {
          throw Error("cycle values are positive integers or \"inf\"");
        }
      } else if (value.is_number_integer() && value.get<std::int64_t>() > 0) {
        period = Period::finite(value.get<std::uint64_t>());
      } else {
        throw Error("cycle values are positive integers or \"inf\"");
      }
      if (!t.pair.f.emplace(std::move(c), period).second) {
        throw Error("cycle \"" + to_string(g, p) + "\" listed twice");
      }
    }
    if (auto d = validate_triple(g, t); !d) {
      std::string msg = "invalid congruence triple:";
      for (auto const& m : d.messages) {
        msg += " " + m + ";";
      }
      throw Error(msg);
    }
    return t;
  }

  json to_json(Graph const& g, CongruenceTriple const& t) {
    json j;
    j["H"] = to_json(g, t.h);
    j["W"] = to_json(g, t.pair.w);
    j["f"] = json::array();
    for (auto const& [c, value] : t.pair.f) {
      json cycle = json::array();
      for (auto e : c.path().edges()) {
        cycle.push_back(g.edge_id(e));
      }
      json entry = {{"cycle", cycle}};
      if (value.is_finite()) {
        entry["value"] = value.value();
      } else {
        entry["value"] = "inf";
      }
      j["f"].push_back(std::move(entry));
    }
    return j;
  }

  CongruenceTriple read_triple(Graph const& g,
                               std::filesystem::path const& file) {
    return triple_from_json(g, read_json_file(file));
  }

  std::string to_string(Graph const& g, CongruenceTriple const& t) {
    std::string out
        = "(" + to_string(g, t.h) + ", " + to_string(g, t.pair.w) + ", {";
    bool first = true;
    for (auto const& [c, value] : t.pair.f) {
      out += first ? "" : ", ";
      out += to_string(g, c.path()) + " -> " + to_string(value);
      first = false;
    }
    return out + "})";
  }

}  // namespace gis
