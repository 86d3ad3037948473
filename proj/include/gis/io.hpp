// Text formats: graph and triple JSON, DOT export, element literals.
//
// Graph JSON
//   {"vertices": ["v", "w"], "edges": [{"id": "e", "src": "v", "dst": "w"}]}
//
// Triple JSON (cycles listed by edge ids in canonical rotation)
//   {"H": ["w"], "W": ["v"], "f": [{"cycle": ["e"], "value": 2}]}
//   with "value" a positive integer or the string "inf".
//
// Element literals
//   0        the zero element
//   P|Q      the element P Q*, where P and Q are each either @v (the vertex
//            v as a path of length 0) or edge ids joined by '.'
// so the vertex v is written @v|@v and e e* is e|e.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gis/congruence.hpp"
#include "gis/element.hpp"
#include "gis/graph.hpp"

namespace gis {

  [[nodiscard]] Graph          graph_from_json(nlohmann::json const& j);
  [[nodiscard]] nlohmann::json to_json(Graph const& g);
  [[nodiscard]] Graph          read_graph(std::filesystem::path const& file);

  // Vertices become nodes; edges are labeled with their ids.
  [[nodiscard]] std::string to_dot(Graph const& g);

  [[nodiscard]] Path        parse_path(Graph const& g, std::string_view text);
  [[nodiscard]] std::string to_string(Graph const& g, Path const& p);
  [[nodiscard]] Element parse_element(Graph const& g, std::string_view text);
  [[nodiscard]] std::string to_string(Graph const& g, Element const& x);

  [[nodiscard]] std::string    to_string(Graph const& g, VertexSet const& s);
  [[nodiscard]] nlohmann::json to_json(Graph const& g, VertexSet const& s);

  // Throws Error on malformed input, on cycles given in a rotation other
  // than the canonical one (the message names the canonical rotation), and
  // when validate_triple rejects the result.
  [[nodiscard]] CongruenceTriple triple_from_json(Graph const&          g,
                                                  nlohmann::json const& j);
  [[nodiscard]] nlohmann::json   to_json(Graph const&            g,
                                         CongruenceTriple const& t);
  [[nodiscard]] CongruenceTriple read_triple(Graph const& g,
                                             std::filesystem::path const& file);
  [[nodiscard]] std::string to_string(Graph const& g, CongruenceTriple const& t);

}  // namespace gis
