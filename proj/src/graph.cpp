#include "gis/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gis {

  ////////////////////////////////////////////////////////////////////////
  // VertexSet
  ////////////////////////////////////////////////////////////////////////

  VertexSet::VertexSet(std::size_t                          universe,
                       std::initializer_list<vertex_index> vs)
      : bits_(universe, false) {
    for (auto v : vs) {
      insert(v);
    }
  }

  void VertexSet::insert(vertex_index v) {
    if (v >= bits_.size()) {
      throw Error("vertex index " + std::to_string(v)
                  + " out of range for a vertex set over "
                  + std::to_string(bits_.size()) + " vertices");
    }
    bits_[v] = true;
  }

  void VertexSet::erase(vertex_index v) {
    if (v < bits_.size()) {
      bits_[v] = false;
    }
  }

  std::size_t VertexSet::size() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
  }

  std::vector<vertex_index> VertexSet::members() const {
    std::vector<vertex_index> out;
    for (vertex_index v = 0; v < bits_.size(); ++v) {
      if (bits_[v]) {
        out.push_back(v);
      }
    }
    return out;
  }

  bool VertexSet::is_subset_of(VertexSet const& other) const {
    for (vertex_index v = 0; v < bits_.size(); ++v) {
      if (bits_[v] && !other.contains(v)) {
        return false;
      }
    }
    return true;
  }

  namespace {
    void check_same_universe(VertexSet const& a, VertexSet const& b) {
      if (a.universe() != b.universe()) {
        throw Error("vertex sets over different graphs");
      }
    }
  }  // namespace

  VertexSet operator|(VertexSet const& a, VertexSet const& b) {
    check_same_universe(a, b);
    VertexSet out(a);
    for (vertex_index v = 0; v < b.bits_.size(); ++v) {
      if (b.bits_[v]) {
        out.bits_[v] = true;
      }
    }
    return out;
  }

  VertexSet operator&(VertexSet const& a, VertexSet const& b) {
    check_same_universe(a, b);
    VertexSet out(a.universe());
    for (vertex_index v = 0; v < a.bits_.size(); ++v) {
      out.bits_[v] = a.bits_[v] && b.bits_[v];
    }
    return out;
  }

  VertexSet operator-(VertexSet const& a, VertexSet const& b) {
    check_same_universe(a, b);
    VertexSet out(a.universe());
    for (vertex_index v = 0; v < a.bits_.size(); ++v) {
      out.bits_[v] = a.bits_[v] && !b.bits_[v];
    }
    return out;
  }

  std::strong_ordering operator<=>(VertexSet const& a, VertexSet const& b) {
    if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0) {
      return c;
    }
    for (auto i = a.bits_.size(); i-- > 0;) {
      if (a.bits_[i] != b.bits_[i]) {
        return a.bits_[i] ? std::strong_ordering::greater
                          : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph
  ////////////////////////////////////////////////////////////////////////

  bool is_valid_identifier(std::string_view id) noexcept {
    return !id.empty() && id.find_first_of(".|@*") == std::string_view::npos;
  }

  vertex_index Graph::add_vertex(std::string id) {
    if (!is_valid_identifier(id)) {
      throw Error("invalid vertex id \"" + id + "\"");
    }
    if (vertex_lookup_.contains(id)) {
      throw Error("duplicate vertex id \"" + id + "\"");
    }
    vertex_index v = vertex_ids_.size();
    vertex_lookup_.emplace(id, v);
    vertex_ids_.push_back(std::move(id));
    out_.emplace_back();
    return v;
  }

  edge_index Graph::add_edge(std::string id, vertex_index src,
                             vertex_index dst) {
    check_vertex(src);
    check_vertex(dst);
    if (!is_valid_identifier(id)) {
      throw Error("invalid edge id \"" + id + "\"");
    }
    if (edge_lookup_.contains(id)) {
      throw Error("duplicate edge id \"" + id + "\"");
    }
    edge_index e = edge_ids_.size();
    edge_lookup_.emplace(id, e);
    edge_ids_.push_back(std::move(id));
    src_.push_back(src);
    dst_.push_back(dst);
    out_[src].push_back(e);
    return e;
  }

  edge_index Graph::add_edge(std::string id, std::string_view src,
                             std::string_view dst) {
    return add_edge(std::move(id), vertex(src), vertex(dst));
  }

  std::string const& Graph::vertex_id(vertex_index v) const {
    check_vertex(v);
    return vertex_ids_[v];
  }

  std::string const& Graph::edge_id(edge_index e) const {
    check_edge(e);
    return edge_ids_[e];
  }

  std::optional<vertex_index> Graph::find_vertex(std::string_view id) const {
    if (auto it = vertex_lookup_.find(std::string(id));
        it != vertex_lookup_.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  std::optional<edge_index> Graph::find_edge(std::string_view id) const {
    if (auto it = edge_lookup_.find(std::string(id)); it != edge_lookup_.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  vertex_index Graph::vertex(std::string_view id) const {
    if (auto v = find_vertex(id)) {
      return *v;
    }
    throw Error("unknown vertex id \"" + std::string(id) + "\"");
  }

  edge_index Graph::edge(std::string_view id) const {
    if (auto e = find_edge(id)) {
      return *e;
    }
    throw Error("unknown edge id \"" + std::string(id) + "\"");
  }

  vertex_index Graph::source(edge_index e) const {
    check_edge(e);
    return src_[e];
  }

  vertex_index Graph::range(edge_index e) const {
    check_edge(e);
    return dst_[e];
  }

  std::span<edge_index const> Graph::out_edges(vertex_index v) const {
    check_vertex(v);
    return out_[v];
  }

  VertexSet Graph::all_vertices() const {
    VertexSet all(number_of_vertices());
    for (vertex_index v = 0; v < number_of_vertices(); ++v) {
      all.insert(v);
    }
    return all;
  }

  void Graph::check_vertex(vertex_index v) const {
    if (v >= vertex_ids_.size()) {
      throw Error("vertex index " + std::to_string(v) + " out of range");
    }
  }

  void Graph::check_edge(edge_index e) const {
    if (e >= edge_ids_.size()) {
      throw Error("edge index " + std::to_string(e) + " out of range");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Path
  ////////////////////////////////////////////////////////////////////////

  Path::Path(Graph const& g, vertex_index base, std::vector<edge_index> edges)
      : vertices_{base}, edges_(std::move(edges)) {
    if (base >= g.number_of_vertices()) {
      throw Error("path base vertex out of range");
    }
    vertices_.reserve(edges_.size() + 1);
    for (auto e : edges_) {
      if (g.source(e) != vertices_.back()) {
        throw Error("edge \"" + g.edge_id(e) + "\" does not start at \""
                    + g.vertex_id(vertices_.back()) + "\"");
      }
      vertices_.push_back(g.range(e));
    }
  }

  Path Path::vertex(vertex_index v) {
    Path p;
    p.vertices_ = {v};
    return p;
  }

  Path Path::edge(Graph const& g, edge_index e) {
    return Path(g, g.source(e), {e});
  }

  Path Path::subpath(std::size_t from, std::size_t to) const {
    if (from > to || to > length()) {
      throw Error("subpath bounds out of range");
    }
    Path p;
    p.vertices_.assign(vertices_.begin() + from, vertices_.begin() + to + 1);
    p.edges_.assign(edges_.begin() + from, edges_.begin() + to);
    return p;
  }

  Path concat(Path const& p, Path const& q) {
    if (p.range() != q.source()) {
      throw Error("paths do not compose");
    }
    Path out(p);
    out.edges_.insert(out.edges_.end(), q.edges_.begin(), q.edges_.end());
    out.vertices_.insert(
        out.vertices_.end(), q.vertices_.begin() + 1, q.vertices_.end());
    return out;
  }

  Path power(Path const& p, std::size_t n) {
    if (!p.is_closed()) {
      throw Error("power of a path that is not closed");
    }
    Path out = Path::vertex(p.source());
    for (std::size_t i = 0; i < n; ++i) {
      out = concat(out, p);
    }
    return out;
  }

  bool is_prefix(Path const& prefix, Path const& p) noexcept {
    if (prefix.source() != p.source() || prefix.length() > p.length()) {
      return false;
    }
    auto pe = p.edges();
    auto qe = prefix.edges();
    return std::equal(qe.begin(), qe.end(), pe.begin());
  }

  std::optional<Path> strip_prefix(Path const& p, Path const& prefix) {
    if (!is_prefix(prefix, p)) {
      return std::nullopt;
    }
    return p.subpath(prefix.length(), p.length());
  }

  std::size_t common_suffix_length(Path const& p, Path const& q) noexcept {
    auto pe = p.edges();
    auto qe = q.edges();
    std::size_t n = 0;
    while (n < pe.size() && n < qe.size()
           && pe[pe.size() - 1 - n] == qe[qe.size() - 1 - n]) {
      ++n;
    }
    return n;
  }

  std::vector<Path> enumerate_paths(Graph const& g, std::size_t max_length) {
    std::vector<Path> out;
    for (vertex_index v = 0; v < g.number_of_vertices(); ++v) {
      out.push_back(Path::vertex(v));
    }
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::size_t layer_end = out.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        // copy: out may reallocate
        Path const p = out[i];
        for (auto e : g.out_edges(p.range())) {
          out.push_back(concat(p, Path::edge(g, e)));
        }
      }
      layer_begin = layer_end;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cycle
  ////////////////////////////////////////////////////////////////////////

  Path rotate(Path const& p, std::size_t k) {
    if (!p.is_closed()) {
      throw Error("rotation of a path that is not closed");
    }
    if (p.is_vertex()) {
      return p;
    }
    k %= p.length();
    return concat(p.subpath(k, p.length()), p.subpath(0, k));
  }

  bool Cycle::is_cycle(Path const& p) noexcept {
    if (p.is_vertex() || !p.is_closed()) {
      return false;
    }
    std::set<vertex_index> seen;
    for (auto v : p.sources()) {
      if (!seen.insert(v).second) {
        return false;
      }
    }
    return true;
  }

  namespace {
    std::size_t canonical_offset(Graph const& g, Path const& p) {
      auto        edges = p.edges();
      std::size_t best  = 0;
      for (std::size_t i = 1; i < edges.size(); ++i) {
        if (g.edge_id(edges[i]) < g.edge_id(edges[best])) {
          best = i;
        }
      }
      return best;
    }
  }  // namespace

  Cycle Cycle::from_path(Graph const& g, Path const& p) {
    if (!is_cycle(p)) {
      throw Error("path is not a cycle");
    }
    return Cycle(rotate(p, canonical_offset(g, p)));
  }

  bool Cycle::is_canonical(Graph const& g, Path const& p) {
    return is_cycle(p) && canonical_offset(g, p) == 0;
  }

  bool Cycle::contains(vertex_index v) const noexcept {
    return position(v).has_value();
  }

  std::optional<std::size_t> Cycle::position(vertex_index v) const noexcept {
    auto src = path_.sources();
    auto it  = std::find(src.begin(), src.end(), v);
    if (it == src.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - src.begin());
  }

  Path Cycle::rotation_at(vertex_index v) const {
    auto pos = position(v);
    if (!pos) {
      throw Error("vertex does not lie on the cycle");
    }
    return rotate(path_, *pos);
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph-side constructions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_universe(Graph const& g, VertexSet const& h) {
      if (h.universe() != g.number_of_vertices()) {
        throw Error("vertex set does not belong to this graph");
      }
    }
  }  // namespace

  bool is_hereditary(Graph const& g, VertexSet const& h) {
    check_universe(g, h);
    for (edge_index e = 0; e < g.number_of_edges(); ++e) {
      if (h.contains(g.source(e)) && !h.contains(g.range(e))) {
        return false;
      }
    }
    return true;
  }

  VertexSet hereditary_closure(Graph const& g, VertexSet const& seed) {
    check_universe(g, seed);
    VertexSet                 out   = seed;
    std::vector<vertex_index> stack = seed.members();
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto e : g.out_edges(v)) {
        auto w = g.range(e);
        if (!out.contains(w)) {
          out.insert(w);
          stack.push_back(w);
        }
      }
    }
    return out;
  }

  std::vector<std::vector<vertex_index>>
  strongly_connected_components(Graph const& g) {
    // Tarjan
    auto const n = g.number_of_vertices();
    constexpr auto unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t>  number(n, unvisited), low(n, 0);
    std::vector<bool>         on_stack(n, false);
    std::vector<vertex_index> stack;
    std::vector<std::vector<vertex_index>> out;
    std::size_t counter = 0;

    std::function<void(vertex_index)> visit = [&](vertex_index v) {
      number[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      for (auto e : g.out_edges(v)) {
        auto w = g.range(e);
        if (number[w] == unvisited) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], number[w]);
        }
      }
      if (low[v] == number[v]) {
        std::vector<vertex_index> component;
        vertex_index              w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
      }
    };
    for (vertex_index v = 0; v < n; ++v) {
      if (number[v] == unvisited) {
        visit(v);
      }
    }
    return out;
  }

  std::vector<VertexSet> enumerate_hereditary(Graph const& g) {
    // A hereditary set is a union of strongly connected components that
    // contains every successor of each of its components. Tarjan lists
    // successors first, so a single pass of include/exclude choices suffices.
    auto const components = strongly_connected_components(g);
    std::vector<std::size_t> component_of(g.number_of_vertices());
    for (std::size_t i = 0; i < components.size(); ++i) {
      for (auto v : components[i]) {
        component_of[v] = i;
      }
    }
    std::vector<std::vector<std::size_t>> successors(components.size());
    for (edge_index e = 0; e < g.number_of_edges(); ++e) {
      auto a = component_of[g.source(e)];
      auto b = component_of[g.range(e)];
      if (a != b) {
        successors[a].push_back(b);
      }
    }

    std::vector<VertexSet> out;
    std::vector<bool>      chosen(components.size(), false);
    std::function<void(std::size_t)> extend = [&](std::size_t i) {
      if (i == components.size()) {
        VertexSet h = g.no_vertices();
        for (std::size_t j = 0; j < components.size(); ++j) {
          if (chosen[j]) {
            for (auto v : components[j]) {
              h.insert(v);
            }
          }
        }
        out.push_back(std::move(h));
        return;
      }
      extend(i + 1);
      if (std::all_of(successors[i].begin(),
                      successors[i].end(),
                      [&](std::size_t j) { return chosen[j]; })) {
        chosen[i] = true;
        extend(i + 1);
        chosen[i] = false;
      }
    };
    extend(0);
    std::sort(out.begin(), out.end());
    return out;
  }

  Graph quotient(Graph const& g, VertexSet const& h) {
    if (!is_hereditary(g, h)) {
      throw Error("quotient by a vertex set that is not hereditary");
    }
    Graph out;
    for (vertex_index v = 0; v < g.number_of_vertices(); ++v) {
      if (!h.contains(v)) {
        out.add_vertex(g.vertex_id(v));
      }
    }
    for (edge_index e = 0; e < g.number_of_edges(); ++e) {
      if (!h.contains(g.range(e))) {
        out.add_edge(g.edge_id(e),
                     g.vertex_id(g.source(e)),
                     g.vertex_id(g.range(e)));
      }
    }
    return out;
  }

  std::size_t index(Graph const& g, vertex_index v, VertexSet const& h) {
    auto out = g.out_edges(v);
    return static_cast<std::size_t>(std::count_if(
        out.begin(), out.end(), [&](edge_index e) {
          return !h.contains(g.range(e));
        }));
  }

  std::optional<edge_index> forced_edge(Graph const&     g,
                                        vertex_index     v,
                                        VertexSet const& h) {
    std::optional<edge_index> found;
    for (auto e : g.out_edges(v)) {
      if (!h.contains(g.range(e))) {
        if (found) {
          return std::nullopt;
        }
        found = e;
      }
    }
    return found;
  }

  VertexSet index_one_vertices(Graph const& g, VertexSet const& h) {
    check_universe(g, h);
    VertexSet out = g.no_vertices();
    for (vertex_index v = 0; v < g.number_of_vertices(); ++v) {
      if (!h.contains(v) && index(g, v, h) == 1) {
        out.insert(v);
      }
    }
    return out;
  }

  VertexSet index_one_vertices(Graph const& g) {
    return index_one_vertices(g, g.no_vertices());
  }

  std::vector<Cycle> cycles_in(Graph const&     g,
                               VertexSet const& w,
                               VertexSet const& h) {
    check_universe(g, w);
    check_universe(g, h);
    for (auto v : w.members()) {
      if (h.contains(v) || index(g, v, h) != 1) {
        throw Error("vertex \"" + g.vertex_id(v)
                    + "\" does not have index one");
      }
    }
    std::vector<Cycle> out;
    VertexSet          covered = g.no_vertices();
    for (auto v : w.members()) {
      if (covered.contains(v)) {
        continue;
      }
      VertexSet               visited = g.no_vertices();
      std::vector<edge_index> edges;
      vertex_index            cur = v;
      while (w.contains(cur) && !visited.contains(cur)) {
        visited.insert(cur);
        auto e = *forced_edge(g, cur, h);
        edges.push_back(e);
        cur = g.range(e);
        if (cur == v) {
          auto c = Cycle::from_path(g, Path(g, v, edges));
          for (auto u : c.path().sources()) {
            covered.insert(u);
          }
          out.push_back(std::move(c));
          break;
        }
      }
    }
    return out;
  }

  std::vector<Cycle> cycles_in(Graph const& g, VertexSet const& w) {
    return cycles_in(g, w, g.no_vertices());
  }

  std::vector<edge_index> exits_of(Graph const& g, Path const& p) {
    std::vector<edge_index> out;
    auto const              pe  = p.edges();
    auto const              src = p.sources();
    for (edge_index e = 0; e < g.number_of_edges(); ++e) {
      for (std::size_t i = 0; i < pe.size(); ++i) {
        if (g.source(e) == src[i] && e != pe[i]) {
          out.push_back(e);
          break;
        }
      }
    }
    return out;
  }

  bool is_strongly_connected(Graph const& g) {
    return strongly_connected_components(g).size() <= 1;
  }

  bool is_acyclic(Graph const& g) {
    for (edge_index e = 0; e < g.number_of_edges(); ++e) {
      if (g.source(e) == g.range(e)) {
        return false;
      }
    }
    return strongly_connected_components(g).size() == g.number_of_vertices();
  }

  bool rees_only_condition(Graph const& g) {
    for (auto const& h : enumerate_hereditary(g)) {
      if (!index_one_vertices(g, h).empty()) {
        return false;
      }
    }
    return true;
  }

  bool rees_only_condition_by_exits(Graph const& g) {
    // e is an exit of a path alpha with s(alpha) = s(e), r(alpha) = r(e)
    // iff some other edge f out of s(e) has r(e) reachable from r(f).
    for (edge_index e = 0; e < g.number_of_edges(); ++e) {
      bool witnessed = false;
      for (auto f : g.out_edges(g.source(e))) {
        if (f == e) {
          continue;
        }
        VertexSet seed = g.no_vertices();
        seed.insert(g.range(f));
        if (hereditary_closure(g, seed).contains(g.range(e))) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) {
        return false;
      }
    }
    return true;
  }

  bool is_congruence_free_graph(Graph const& g) {
    return is_strongly_connected(g) && index_one_vertices(g).empty();
  }

}  // namespace gis

std::size_t std::hash<gis::Path>::operator()(gis::Path const& p) const noexcept {
  std::size_t seed = p.source() * 0x9e3779b97f4a7c15ULL;
  for (auto e : p.edges()) {
    seed ^= e + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}
