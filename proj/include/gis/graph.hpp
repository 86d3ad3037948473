// Directed multigraphs, vertex sets, paths and cycles.

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gis {

  using vertex_index = std::size_t;
  using edge_index   = std::size_t;

  // Thrown on malformed input: unknown ids, broken paths, violated
  // preconditions of the graph-side constructions.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Subset of the vertices {0, ..., universe - 1} of a graph.
  //
  // Ordering treats the set as a binary number in which vertex n - 1 is the
  // most significant bit, so for the graph v -> w the hereditary subsets sort
  // as {}, {w}, {v, w}.
  class VertexSet {
   public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
    VertexSet(std::size_t universe, std::initializer_list<vertex_index> vs);

    [[nodiscard]] std::size_t universe() const noexcept {
      return bits_.size();
    }
    [[nodiscard]] bool contains(vertex_index v) const {
      return v < bits_.size() && bits_[v];
    }
    void insert(vertex_index v);
    void erase(vertex_index v);

    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] bool        empty() const noexcept {
      return size() == 0;
    }
    [[nodiscard]] std::vector<vertex_index> members() const;
    [[nodiscard]] bool is_subset_of(VertexSet const& other) const;

    friend VertexSet operator|(VertexSet const& a, VertexSet const& b);
    friend VertexSet operator&(VertexSet const& a, VertexSet const& b);
    friend VertexSet operator-(VertexSet const& a, VertexSet const& b);

    friend bool operator==(VertexSet const&, VertexSet const&) = default;
    friend std::strong_ordering operator<=>(VertexSet const& a,
                                            VertexSet const& b);

   private:
    std::vector<bool> bits_;
  };

  // A directed multigraph (V, E, s, r) with string identifiers.
  //
  // Vertices and edges are indexed in insertion order; every enumeration in
  // the library iterates in this order. Identifiers must be nonempty and
  // must not contain any of the characters reserved by the element literal
  // grammar: '.', '|', '@', '*'.
  class Graph {
   public:
    Graph() = default;

    vertex_index add_vertex(std::string id);
    edge_index   add_edge(std::string id, vertex_index src, vertex_index dst);
    edge_index   add_edge(std::string id, std::string_view src,
                          std::string_view dst);

    [[nodiscard]] std::size_t number_of_vertices() const noexcept {
      return vertex_ids_.size();
    }
    [[nodiscard]] std::size_t number_of_edges() const noexcept {
      return edge_ids_.size();
    }

    [[nodiscard]] std::string const& vertex_id(vertex_index v) const;
    [[nodiscard]] std::string const& edge_id(edge_index e) const;

    [[nodiscard]] std::optional<vertex_index>
    find_vertex(std::string_view id) const;
    [[nodiscard]] std::optional<edge_index>
    find_edge(std::string_view id) const;
    // As find_*, but throw Error for unknown identifiers.
    [[nodiscard]] vertex_index vertex(std::string_view id) const;
    [[nodiscard]] edge_index   edge(std::string_view id) const;

    [[nodiscard]] vertex_index source(edge_index e) const;
    [[nodiscard]] vertex_index range(edge_index e) const;

    [[nodiscard]] std::span<edge_index const> out_edges(vertex_index v) const;

    // |s^-1(v)|
    [[nodiscard]] std::size_t index(vertex_index v) const {
      return out_edges(v).size();
    }

    [[nodiscard]] VertexSet no_vertices() const {
      return VertexSet(number_of_vertices());
    }
    [[nodiscard]] VertexSet all_vertices() const;

    friend bool operator==(Graph const& a, Graph const& b) {
      return a.vertex_ids_ == b.vertex_ids_ && a.edge_ids_ == b.edge_ids_
             && a.src_ == b.src_ && a.dst_ == b.dst_;
    }

   private:
    void check_vertex(vertex_index v) const;
    void check_edge(edge_index e) const;

    std::vector<std::string>                       vertex_ids_;
    std::vector<std::string>                       edge_ids_;
    std::vector<vertex_index>                      src_;
    std::vector<vertex_index>                      dst_;
    std::vector<std::vector<edge_index>>           out_;
    std::unordered_map<std::string, vertex_index>  vertex_lookup_;
    std::unordered_map<std::string, edge_index>    edge_lookup_;
  };

  // True iff id can name a vertex or an edge.
  [[nodiscard]] bool is_valid_identifier(std::string_view id) noexcept;

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  // A path e_1 ... e_n with r(e_i) = s(e_{i+1}); a path of length 0 is a
  // vertex. The vertex sequence s(e_1), ..., s(e_n), r(e_n) is stored
  // alongside the edges so that sub-paths can be formed without the graph.
  class Path {
   public:
    Path() : vertices_{0} {}

    // Validates composability against g.
    Path(Graph const& g, vertex_index base, std::vector<edge_index> edges);

    static Path vertex(vertex_index v);
    static Path edge(Graph const& g, edge_index e);

    [[nodiscard]] vertex_index source() const noexcept {
      return vertices_.front();
    }
    [[nodiscard]] vertex_index range() const noexcept {
      return vertices_.back();
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return edges_.size();
    }
    [[nodiscard]] bool is_vertex() const noexcept {
      return edges_.empty();
    }
    [[nodiscard]] bool is_closed() const noexcept {
      return source() == range();
    }
    [[nodiscard]] std::span<edge_index const> edges() const noexcept {
      return edges_;
    }
    // s(e_i) for i = 0..length; vertex_at(length()) == range().
    [[nodiscard]] vertex_index vertex_at(std::size_t i) const {
      return vertices_.at(i);
    }
    // v(p) = {s(e_i)}; empty for a vertex.
    [[nodiscard]] std::span<vertex_index const> sources() const noexcept {
      return std::span<vertex_index const>(vertices_).first(edges_.size());
    }

    // Edges [from, to) as a path starting at vertex_at(from).
    [[nodiscard]] Path subpath(std::size_t from, std::size_t to) const;
    [[nodiscard]] Path prefix(std::size_t n) const {
      return subpath(0, n);
    }
    [[nodiscard]] Path suffix(std::size_t n) const {
      return subpath(length() - n, length());
    }

    friend Path concat(Path const& p, Path const& q);

    friend bool operator==(Path const&, Path const&) = default;
    friend auto operator<=>(Path const&, Path const&) = default;

   private:
    // Order matters for the defaulted comparison: vertices first.
    std::vector<vertex_index> vertices_;
    std::vector<edge_index>   edges_;
  };

  // p followed by q; throws Error unless r(p) = s(q).
  [[nodiscard]] Path concat(Path const& p, Path const& q);
  // p^n for a closed path p (n = 0 gives the base vertex).
  [[nodiscard]] Path power(Path const& p, std::size_t n);

  [[nodiscard]] bool is_prefix(Path const& prefix, Path const& p) noexcept;
  // xi with p = prefix . xi, if prefix is a prefix of p.
  [[nodiscard]] std::optional<Path> strip_prefix(Path const& p,
                                                 Path const& prefix);
  // Longest common suffix length of p and q, counted in edges; both paths
  // must share a range for the result to be meaningful.
  [[nodiscard]] std::size_t common_suffix_length(Path const& p,
                                                 Path const& q) noexcept;

  // Every path of length <= max_length, ordered by length then by edge
  // sequence (vertices first for length 0).
  [[nodiscard]] std::vector<Path> enumerate_paths(Graph const& g,
                                                  std::size_t  max_length);

  ////////////////////////////////////////////////////////////////////////
  // Cycles
  ////////////////////////////////////////////////////////////////////////

  // A closed path of length >= 1 with pairwise distinct sources, held in
  // canonical rotation: the rotation whose first edge has the least edge id
  // (edge ids are distinct along a cycle, so this is the lexicographically
  // least edge-id sequence).
  class Cycle {
   public:
    // Throws Error unless p is a cycle.
    static Cycle from_path(Graph const& g, Path const& p);
    static bool  is_cycle(Path const& p) noexcept;
    // True iff p is already the canonical rotation of a cycle.
    static bool is_canonical(Graph const& g, Path const& p);

    [[nodiscard]] Path const& path() const noexcept {
      return path_;
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return path_.length();
    }
    [[nodiscard]] vertex_index base() const noexcept {
      return path_.source();
    }
    [[nodiscard]] bool contains(vertex_index v) const noexcept;
    // Position of v along the canonical rotation, if v lies on the cycle.
    [[nodiscard]] std::optional<std::size_t>
    position(vertex_index v) const noexcept;
    // The rotation of the cycle that starts at v.
    [[nodiscard]] Path rotation_at(vertex_index v) const;

    friend bool operator==(Cycle const&, Cycle const&) = default;
    friend auto operator<=>(Cycle const&, Cycle const&) = default;

   private:
    explicit Cycle(Path p) : path_(std::move(p)) {}
    Path path_;
  };

  // Rotation of the closed path p starting after its first k edges.
  [[nodiscard]] Path rotate(Path const& p, std::size_t k);

  ////////////////////////////////////////////////////////////////////////
  // Graph-side constructions
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] bool is_hereditary(Graph const& g, VertexSet const& h);
  [[nodiscard]] VertexSet hereditary_closure(Graph const& g,
                                             VertexSet const& seed);
  // All hereditary subsets, in VertexSet order.
  [[nodiscard]] std::vector<VertexSet> enumerate_hereditary(Graph const& g);

  // G \ H: the vertices outside h and the edges whose range is outside h.
  // Identifiers and relative order are preserved.
  [[nodiscard]] Graph quotient(Graph const& g, VertexSet const& h);

  // Number of edges e with s(e) = v and r(e) not in h, i.e. the index of v
  // in G \ h.
  [[nodiscard]] std::size_t index(Graph const& g, vertex_index v,
                                  VertexSet const& h);
  [[nodiscard]] inline std::size_t index(Graph const& g, vertex_index v) {
    return g.index(v);
  }
  // The unique edge out of v in G \ h; nullopt unless v has index one there.
  [[nodiscard]] std::optional<edge_index>
  forced_edge(Graph const& g, vertex_index v, VertexSet const& h);

  // Vertices outside h of index one in G \ h.
  [[nodiscard]] VertexSet index_one_vertices(Graph const& g,
                                             VertexSet const& h);
  [[nodiscard]] VertexSet index_one_vertices(Graph const& g);

  // C(W) computed in G \ h, one canonical representative per rotation class.
  // Throws Error if some vertex of w is in h or has index != 1 in G \ h.
  [[nodiscard]] std::vector<Cycle>
  cycles_in(Graph const& g, VertexSet const& w, VertexSet const& h);
  [[nodiscard]] std::vector<Cycle> cycles_in(Graph const& g,
                                             VertexSet const& w);

  // Edges e with s(e) = s(e_i) and e != e_i for some i.
  [[nodiscard]] std::vector<edge_index> exits_of(Graph const& g,
                                                 Path const&  p);

  // Strongly connected components in Tarjan order (reverse topological:
  // a component is listed before every component that can reach it).
  [[nodiscard]] std::vector<std::vector<vertex_index>>
  strongly_connected_components(Graph const& g);

  // The empty graph counts as strongly connected.
  [[nodiscard]] bool is_strongly_connected(Graph const& g);
  [[nodiscard]] bool is_acyclic(Graph const& g);

  // Every congruence on the semigroup is a Rees congruence. Decided by
  // checking that G \ H has no vertex of index one for every hereditary H.
  [[nodiscard]] bool rees_only_condition(Graph const& g);
  // The same property decided edge by edge: every e is an exit of some path
  // from s(e) to r(e).
  [[nodiscard]] bool rees_only_condition_by_exits(Graph const& g);

  // Strongly connected and no vertex of index one.
  [[nodiscard]] bool is_congruence_free_graph(Graph const& g);

}  // namespace gis

template <>
struct std::hash<gis::Path> {
  std::size_t operator()(gis::Path const& p) const noexcept;
};
