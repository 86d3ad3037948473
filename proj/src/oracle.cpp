#include "gis/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace gis {

  namespace {
    // Union-find with path halving.
    class Partition {
     public:
      explicit Partition(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
      }

      std::size_t find(std::size_t i) {
        while (parent_[i] != i) {
          parent_[i] = parent_[parent_[i]];
          i          = parent_[i];
        }
        return i;
      }

      bool unite(std::size_t i, std::size_t j) {
        i = find(i);
        j = find(j);
        if (i == j) {
          return false;
        }
        parent_[std::max(i, j)] = std::min(i, j);
        return true;
      }

      std::vector<std::size_t> labels() {
        std::vector<std::size_t> out(parent_.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
          out[i] = find(i);
        }
        return out;
      }

     private:
      std::vector<std::size_t> parent_;
    };
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup::FiniteSemigroup(Graph const& g) {
    if (!is_acyclic(g)) {
      throw Error("the semigroup of a graph with a cycle is infinite");
    }
    // No path is longer than |V| - 1 in an acyclic graph.
    auto const longest = g.number_of_vertices() == 0 ? 0
                                                     : g.number_of_vertices() - 1;
    elements_ = enumerate_elements(g, longest);
    for (index_type i = 0; i < elements_.size(); ++i) {
      lookup_.emplace(elements_[i], i);
    }
    auto const n = elements_.size();
    table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table_[i * n + j] = lookup_.at(multiply(elements_[i], elements_[j]));
      }
    }
  }

  std::optional<FiniteSemigroup::index_type>
  FiniteSemigroup::find(Element const& x) const {
    if (auto it = lookup_.find(x); it != lookup_.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  FiniteSemigroup::index_type FiniteSemigroup::index_of(Element const& x) const {
    if (auto i = find(x)) {
      return *i;
    }
    throw Error("element does not belong to the semigroup");
  }

  FiniteSemigroup materialize(Graph const& g) {
    return FiniteSemigroup(g);
  }

  bool is_associative(FiniteSemigroup const& s) {
    using index_type = FiniteSemigroup::index_type;
    auto const n     = static_cast<index_type>(s.size());
    for (index_type x = 0; x < n; ++x) {
      for (index_type y = 0; y < n; ++y) {
        auto const xy = s.product(x, y);
        for (index_type z = 0; z < n; ++z) {
          if (s.product(xy, z) != s.product(x, s.product(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // ExplicitCongruence
  ////////////////////////////////////////////////////////////////////////

  ExplicitCongruence::ExplicitCongruence(std::vector<std::size_t> labels)
      : label_(labels.size()) {
    std::unordered_map<std::size_t, std::size_t> renumber;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, fresh] = renumber.emplace(labels[i], renumber.size());
      label_[i]        = it->second;
    }
    classes_ = renumber.size();
  }

  std::vector<std::vector<std::size_t>> ExplicitCongruence::classes() const {
    std::vector<std::vector<std::size_t>> out(classes_);
    for (std::size_t i = 0; i < label_.size(); ++i) {
      out[label_[i]].push_back(i);
    }
    return out;
  }

  bool ExplicitCongruence::refines(ExplicitCongruence const& other) const {
    std::vector<std::optional<std::size_t>> image(classes_);
    for (std::size_t i = 0; i < label_.size(); ++i) {
      auto& slot = image[label_[i]];
      if (!slot) {
        slot = other.class_of(i);
      } else if (*slot != other.class_of(i)) {
        return false;
      }
    }
    return true;
  }

  bool is_compatible(FiniteSemigroup const& s, ExplicitCongruence const& rho) {
    using index_type = FiniteSemigroup::index_type;
    auto const n     = static_cast<index_type>(s.size());
    for (index_type x = 0; x < n; ++x) {
      for (index_type y = x + 1; y < n; ++y) {
        if (!rho.contains(x, y)) {
          continue;
        }
        for (index_type z = 0; z < n; ++z) {
          if (!rho.contains(s.product(z, x), s.product(z, y))
              || !rho.contains(s.product(x, z), s.product(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ExplicitCongruence congruence_closure(FiniteSemigroup const& s,
                                        IndexPairs const&      pairs) {
    using index_type = FiniteSemigroup::index_type;
    auto const n     = static_cast<index_type>(s.size());
    Partition  part(n);
    std::deque<std::pair<std::size_t, std::size_t>> queue(pairs.begin(),
                                                          pairs.end());
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      if (!part.unite(x, y)) {
        continue;
      }
      for (index_type z = 0; z < n; ++z) {
        auto const ix = static_cast<index_type>(x);
        auto const iy = static_cast<index_type>(y);
        queue.emplace_back(s.product(z, ix), s.product(z, iy));
        queue.emplace_back(s.product(ix, z), s.product(iy, z));
      }
    }
    return ExplicitCongruence(part.labels());
  }

  ExplicitCongruence congruence_closure(FiniteSemigroup const& s,
                                        GeneratingPairs const& pairs) {
    IndexPairs indices;
    for (auto const& [x, y] : pairs) {
      indices.emplace_back(s.index_of(x), s.index_of(y));
    }
    return congruence_closure(s, indices);
  }

  ExplicitCongruence join(ExplicitCongruence const& a,
                          ExplicitCongruence const& b) {
    if (a.size() != b.size()) {
      throw Error("partitions of different sets");
    }
    Partition part(a.size());
    for (auto const* rho : {&a, &b}) {
      for (auto const& cls : rho->classes()) {
        for (auto i : cls) {
          part.unite(cls.front(), i);
        }
      }
    }
    return ExplicitCongruence(part.labels());
  }

  std::vector<ExplicitCongruence>
  enumerate_congruences(FiniteSemigroup const& s, std::size_t max_elements) {
    if (s.size() > max_elements) {
      throw Error("semigroup has " + std::to_string(s.size())
                  + " elements, above the enumeration bound of "
                  + std::to_string(max_elements));
    }
    std::set<ExplicitCongruence> found;
    found.insert(congruence_closure(s, IndexPairs{}));
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = x + 1; y < s.size(); ++y) {
        found.insert(congruence_closure(s, IndexPairs{{x, y}}));
      }
    }
    // Every congruence is the join of the principal congruences it contains.
    std::vector<ExplicitCongruence> frontier(found.begin(), found.end());
    std::vector<ExplicitCongruence> const principal = frontier;
    while (!frontier.empty()) {
      std::vector<ExplicitCongruence> next;
      for (auto const& rho : frontier) {
        for (auto const& p : principal) {
          auto j = join(rho, p);
          if (found.insert(j).second) {
            next.push_back(std::move(j));
          }
        }
      }
      frontier = std::move(next);
    }
    return {found.begin(), found.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // T(rho)
  ////////////////////////////////////////////////////////////////////////

  CongruenceTriple triple_of_relation(Graph const&    g,
                                      Relation const& rho,
                                      std::size_t     max_power) {
    CongruenceTriple t = CongruenceTriple::identity(g);
    for (vertex_index v = 0; v < g.number_of_vertices(); ++v) {
      if (rho(Element::vertex(v), Element::zero())) {
        t.h.insert(v);
      }
    }
    for (edge_index e = 0; e < g.number_of_edges(); ++e) {
      auto const p = Path::edge(g, e);
      if (!t.h.contains(g.range(e))
          && rho(Element(p, p), Element::vertex(g.source(e)))) {
        t.pair.w.insert(g.source(e));
      }
    }
    // Cycles inside W all of whose exits end in H: follow the edges of
    // G \ H from each vertex of W.
    VertexSet covered = g.no_vertices();
    for (auto v : t.pair.w.members()) {
      if (covered.contains(v)) {
        continue;
      }
      std::vector<edge_index> edges;
      VertexSet               visited = g.no_vertices();
      vertex_index            cur     = v;
      while (t.pair.w.contains(cur) && !visited.contains(cur)) {
        visited.insert(cur);
        auto e = forced_edge(g, cur, t.h);
        if (!e) {
          break;
        }
        edges.push_back(*e);
        cur = g.range(*e);
        if (cur == v) {
          auto c = Cycle::from_path(g, Path(g, v, edges));
          for (auto u : c.path().sources()) {
            covered.insert(u);
          }
          auto value = Period::infinite();
          for (std::size_t m = 1; m <= max_power; ++m) {
            if (rho(Element::path(power(c.path(), m)),
                    Element::vertex(c.base()))) {
              value = Period::finite(m);
              break;
            }
          }
          t.pair.f.emplace(std::move(c), value);
          break;
        }
      }
    }
    return t;
  }

  CongruenceTriple triple_of_congruence(Graph const&              g,
                                        FiniteSemigroup const&    s,
                                        ExplicitCongruence const& rho) {
    Relation related = [&](Element const& x, Element const& y) {
      auto i = s.find(x);
      auto j = s.find(y);
      return i && j && rho.contains(*i, *j);
    };
    return triple_of_relation(g, related, s.size());
  }

  bool is_zero_simple(FiniteSemigroup const& s) {
    using index_type = FiniteSemigroup::index_type;
    auto const n     = static_cast<index_type>(s.size());
    for (index_type a = 0; a < n; ++a) {
      if (a == s.zero()) {
        continue;
      }
      // S^1 a S^1
      std::vector<bool> ideal(n, false);
      ideal[a] = true;
      for (index_type x = 0; x < n; ++x) {
        ideal[s.product(x, a)] = true;
        ideal[s.product(a, x)] = true;
        for (index_type y = 0; y < n; ++y) {
          ideal[s.product(s.product(x, a), y)] = true;
        }
      }
      if (std::find(ideal.begin(), ideal.end(), false) != ideal.end()) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // TransitionSystem
  ////////////////////////////////////////////////////////////////////////

  TransitionSystem::TransitionSystem(Graph const&            g,
                                     CongruenceTriple const& t,
                                     std::size_t             len_bound) {
    elements_ = enumerate_elements(g, len_bound);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      lookup_.emplace(elements_[i], i);
    }
    adjacent_.resize(elements_.size());

    std::vector<Element> multipliers(elements_.begin() + 1, elements_.end());
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (auto const& [a, b] : generating_pairs(g, t)) {
      for (auto const& p : multipliers) {
        auto const pa = multiply(p, a);
        auto const pb = multiply(p, b);
        if (pa == pb) {
          continue;
        }
        for (auto const& q : multipliers) {
          auto const u = lookup_.find(multiply(pa, q));
          auto const v = lookup_.find(multiply(pb, q));
          if (u == lookup_.end() || v == lookup_.end()
              || u->second == v->second) {
            continue;
          }
          edges.emplace(std::min(u->second, v->second),
                        std::max(u->second, v->second));
        }
      }
    }
    for (auto [u, v] : edges) {
      adjacent_[u].push_back(v);
      adjacent_[v].push_back(u);
    }
  }

  TransitionResult TransitionSystem::reach(Element const& x, Element const& y,
                                           std::size_t step_bound) const {
    TransitionResult out;
    auto const       from = lookup_.find(x);
    auto const       to   = lookup_.find(y);
    if (from == lookup_.end() || to == lookup_.end()) {
      return out;
    }
    constexpr auto           none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(elements_.size(), none);
    std::deque<std::size_t>  queue{from->second};
    parent[from->second] = from->second;
    while (!queue.empty() && parent[to->second] == none
           && out.expanded < step_bound) {
      auto const u = queue.front();
      queue.pop_front();
      ++out.expanded;
      for (auto v : adjacent_[u]) {
        if (parent[v] == none) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[to->second] == none) {
      return out;
    }
    out.reached = true;
    for (auto u = to->second;; u = parent[u]) {
      out.chain.push_back(elements_[u]);
      if (u == from->second) {
        break;
      }
    }
    std::reverse(out.chain.begin(), out.chain.end());
    return out;
  }

  std::vector<Element> TransitionSystem::component(Element const& x) const {
    auto const from = lookup_.find(x);
    if (from == lookup_.end()) {
      return {};
    }
    std::vector<bool>       seen(elements_.size(), false);
    std::deque<std::size_t> queue{from->second};
    seen[from->second] = true;
    std::vector<Element> out;
    while (!queue.empty()) {
      auto const u = queue.front();
      queue.pop_front();
      out.push_back(elements_[u]);
      for (auto v : adjacent_[u]) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  TransitionResult transition_reachable(Graph const&            g,
                                        CongruenceTriple const& t,
                                        Element const&          x,
                                        Element const&          y,
                                        std::size_t             len_bound,
                                        std::size_t             step_bound) {
    return TransitionSystem(g, t, len_bound).reach(x, y, step_bound);
  }

}  // namespace gis
