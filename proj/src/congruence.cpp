#include "gis/congruence.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace gis {

  ////////////////////////////////////////////////////////////////////////
  // Period
  ////////////////////////////////////////////////////////////////////////

  Period Period::finite(std::uint64_t n) {
    if (n == 0) {
      throw Error("cycle function values must be positive integers");
    }
    Period p;
    p.value_ = n;
    return p;
  }

  std::uint64_t Period::value() const {
    if (!is_finite()) {
      throw Error("infinite period has no value");
    }
    return value_;
  }

  std::strong_ordering operator<=>(Period a, Period b) noexcept {
    if (a.is_finite() != b.is_finite()) {
      return a.is_finite() ? std::strong_ordering::less
                           : std::strong_ordering::greater;
    }
    return a.value_ <=> b.value_;
  }

  bool divides(Period a, Period b) noexcept {
    if (!b.is_finite()) {
      return true;
    }
    return a.is_finite() && b.value() % a.value() == 0;
  }

  std::string to_string(Period p) {
    return p.is_finite() ? std::to_string(p.value()) : std::string("inf");
  }

  ////////////////////////////////////////////////////////////////////////
  // Triples
  ////////////////////////////////////////////////////////////////////////

  CongruenceTriple CongruenceTriple::identity(Graph const& g) {
    return {g.no_vertices(), {g.no_vertices(), {}}};
  }

  CongruenceTriple CongruenceTriple::universal(Graph const& g) {
    return {g.all_vertices(), {g.no_vertices(), {}}};
  }

  std::strong_ordering compare(CongruenceTriple const& a,
                               CongruenceTriple const& b) {
    if (auto c = a.h <=> b.h; c != 0) {
      return c;
    }
    if (auto c = a.pair.w <=> b.pair.w; c != 0) {
      return c;
    }
    auto ia = a.pair.f.begin();
    auto ib = b.pair.f.begin();
    for (; ia != a.pair.f.end() && ib != b.pair.f.end(); ++ia, ++ib) {
      if (auto c = ia->first <=> ib->first; c != 0) {
        return c;
      }
      if (auto c = ia->second <=> ib->second; c != 0) {
        return c;
      }
    }
    return a.pair.f.size() <=> b.pair.f.size();
  }

  Diagnostics validate_triple(Graph const& g, CongruenceTriple const& t) {
    Diagnostics d;
    auto const  n = g.number_of_vertices();
    if (t.h.universe() != n || t.pair.w.universe() != n) {
      d.messages.emplace_back("vertex sets do not belong to this graph");
      return d;
    }
    if (!is_hereditary(g, t.h)) {
      d.messages.emplace_back("H is not hereditary");
      return d;
    }
    bool w_ok = true;
    for (auto v : t.pair.w.members()) {
      if (t.h.contains(v)) {
        d.messages.push_back("W contains \"" + g.vertex_id(v)
                             + "\", which lies in H");
        w_ok = false;
      } else if (auto i = index(g, v, t.h); i != 1) {
        d.messages.push_back("W contains \"" + g.vertex_id(v)
                             + "\", which has index " + std::to_string(i)
                             + " in G \\ H");
        w_ok = false;
      }
    }
    if (!w_ok) {
      return d;
    }
    auto const cycles = cycles_in(g, t.pair.w, t.h);
    for (auto const& c : cycles) {
      if (!t.pair.f.contains(c)) {
        d.messages.push_back("f is undefined on a cycle of C(W) based at \""
                             + g.vertex_id(c.base()) + "\"");
      }
    }
    for (auto const& [c, value] : t.pair.f) {
      if (std::find(cycles.begin(), cycles.end(), c) == cycles.end()) {
        d.messages.push_back("f is defined on a cycle based at \""
                             + g.vertex_id(c.base())
                             + "\" that is not in C(W)");
      }
    }
    return d;
  }

  GeneratingPairs generating_pairs(Graph const& g, CongruenceTriple const& t) {
    if (auto d = validate_triple(g, t); !d) {
      throw Error(d.messages.front());
    }
    GeneratingPairs out;
    for (auto v : t.h.members()) {
      out.emplace_back(Element::vertex(v), Element::zero());
    }
    for (auto v : t.pair.w.members()) {
      auto e = Path::edge(g, *forced_edge(g, v, t.h));
      out.emplace_back(Element(e, e), Element::vertex(v));
    }
    for (auto const& [c, value] : t.pair.f) {
      if (!value.is_finite()) {
        continue;
      }
      for (auto v : c.path().sources()) {
        out.emplace_back(Element::path(power(c.rotation_at(v), value.value())),
                         Element::vertex(v));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // TripleCongruence
  ////////////////////////////////////////////////////////////////////////

  TripleCongruence::TripleCongruence(Graph const& g, CongruenceTriple t)
      : graph_(&g), triple_(std::move(t)) {
    if (auto d = validate_triple(g, triple_); !d) {
      std::string msg = "invalid congruence triple:";
      for (auto const& m : d.messages) {
        msg += " " + m + ";";
      }
      throw Error(msg);
    }
    position_.resize(g.number_of_vertices());
    for (auto const& [c, value] : triple_.pair.f) {
      auto const src = c.path().sources();
      for (std::size_t i = 0; i < src.size(); ++i) {
        position_[src[i]] = CyclePosition{cycles_.size(), i};
      }
      cycles_.push_back(c);
      periods_.push_back(value);
    }
  }

  std::optional<Cycle> TripleCongruence::cycle_through(vertex_index v) const {
    if (v < position_.size() && position_[v]) {
      return cycles_[position_[v]->cycle];
    }
    return std::nullopt;
  }

  Period TripleCongruence::period(Cycle const& c) const {
    return triple_.pair.f.at(c);
  }

  Element TripleCongruence::reduce_mod_h(Element const& x) const {
    if (x.is_zero() || triple_.h.contains(x.alpha().range())) {
      return Element::zero();
    }
    return x;
  }

  bool TripleCongruence::all_in_w(Path const& p) const {
    auto src = p.sources();
    return std::all_of(
        src.begin(), src.end(), [this](vertex_index v) { return in_w(v); });
  }

  bool TripleCongruence::is_cycle_edge(edge_index e) const {
    auto const& pos = position_[graph_->source(e)];
    return pos && cycles_[pos->cycle].path().edges()[pos->offset] == e;
  }

  Path TripleCongruence::walk_cycle(vertex_index from,
                                    std::size_t  steps) const {
    auto const& c    = cycles_[position_[from]->cycle];
    auto        turn = c.rotation_at(from);
    auto        out  = power(turn, steps / c.length());
    return concat(out, turn.prefix(steps % c.length()));
  }

  bool TripleCongruence::is_identified_cycle_power(Path const& p) const {
    if (p.is_vertex() || !p.is_closed()) {
      return false;
    }
    auto const& pos = position_[p.source()];
    if (!pos) {
      return false;
    }
    auto const& c = cycles_[pos->cycle];
    auto const  f = periods_[pos->cycle];
    if (!f.is_finite() || p.length() % c.length() != 0) {
      return false;
    }
    auto const laps = p.length() / c.length();
    if (laps % f.value() != 0) {
      return false;
    }
    auto const rotation = c.rotation_at(p.source());
    auto const turn     = rotation.edges();
    auto const pe       = p.edges();
    for (std::size_t i = 0; i < pe.size(); ++i) {
      if (pe[i] != turn[i % turn.size()]) {
        return false;
      }
    }
    return true;
  }

  bool TripleCongruence::vertex_class_test(Path const& p, Path const& q) const {
    if (p == q) {
      return all_in_w(p);
    }
    auto const& longer  = p.length() >= q.length() ? p : q;
    auto const& shorter = p.length() >= q.length() ? q : p;
    auto        t       = strip_prefix(longer, shorter);
    return t && all_in_w(shorter) && is_identified_cycle_power(*t);
  }

  bool TripleCongruence::special_contains(Element const& x,
                                          Element const& y) const {
    if (x == y) {
      return true;
    }
    bool const  swap  = x.alpha().length() > y.alpha().length();
    auto const& lhs   = swap ? y : x;
    auto const& rhs   = swap ? x : y;
    auto const  xi1   = strip_prefix(rhs.alpha(), lhs.alpha());
    if (!xi1) {
      return false;
    }
    if (auto eta1 = strip_prefix(rhs.beta(), lhs.beta())) {
      return vertex_class_test(*xi1, *eta1);
    }
    if (auto beta1 = strip_prefix(lhs.beta(), rhs.beta())) {
      return is_identified_cycle_power(concat(*xi1, *beta1));
    }
    return false;
  }

  bool TripleCongruence::contains(Element const& x, Element const& y) const {
    auto const rx = reduce_mod_h(x);
    auto const ry = reduce_mod_h(y);
    if (rx.is_zero() || ry.is_zero()) {
      return rx.is_zero() && ry.is_zero();
    }
    return special_contains(rx, ry);
  }

  void TripleCongruence::strip_common_tail(Path& a, Path& b) const {
    std::size_t n = 0;
    while (n < a.length() && n < b.length()) {
      auto const ea = a.edges()[a.length() - 1 - n];
      auto const eb = b.edges()[b.length() - 1 - n];
      if (ea != eb || !in_w(graph_->source(ea))) {
        break;
      }
      ++n;
    }
    if (n > 0) {
      a = a.prefix(a.length() - n);
      b = b.prefix(b.length() - n);
    }
  }

  std::size_t TripleCongruence::cycle_suffix_length(Path const& p) const {
    auto const  pe = p.edges();
    std::size_t n  = 0;
    while (n < pe.size() && is_cycle_edge(pe[pe.size() - 1 - n])) {
      ++n;
    }
    return n;
  }

  Element TripleCongruence::normal_form(Element const& x) const {
    auto const reduced = reduce_mod_h(x);
    if (reduced.is_zero()) {
      return reduced;
    }
    Path a = reduced.alpha();
    Path b = reduced.beta();
    strip_common_tail(a, b);

    auto const& pos = position_[a.range()];
    if (pos) {
      // Move every full or partial lap of the cycle to one side, reduced
      // modulo f(c) laps when the period is finite.
      auto const la = cycle_suffix_length(a);
      auto const lb = cycle_suffix_length(b);
      a             = a.prefix(a.length() - la);
      b             = b.prefix(b.length() - lb);
      auto offset   = static_cast<std::int64_t>(la) - static_cast<std::int64_t>(lb);
      auto const f  = periods_[pos->cycle];
      if (f.is_finite()) {
        auto const modulus = static_cast<std::int64_t>(
            f.value() * cycles_[pos->cycle].length());
        offset = ((offset % modulus) + modulus) % modulus;
      }
      if (offset >= 0) {
        a = concat(a, walk_cycle(a.range(), static_cast<std::size_t>(offset)));
      } else {
        b = concat(b, walk_cycle(b.range(), static_cast<std::size_t>(-offset)));
      }
      strip_common_tail(a, b);
    }
    return Element(std::move(a), std::move(b));
  }

  std::vector<Element>
  TripleCongruence::vertex_class_members(vertex_index v,
                                         std::size_t  max_length) const {
    auto const& g = *graph_;
    if (triple_.h.contains(v)) {
      throw Error("vertex \"" + g.vertex_id(v) + "\" lies in H");
    }
    std::vector<Element> out;
    Path                 alpha = Path::vertex(v);
    while (true) {
      out.emplace_back(alpha, alpha);
      auto const& pos = position_[alpha.range()];
      if (pos && periods_[pos->cycle].is_finite()) {
        auto const turn = cycles_[pos->cycle].rotation_at(alpha.range());
        auto const step = periods_[pos->cycle].value() * turn.length();
        for (auto len = step; alpha.length() + len <= max_length; len += step) {
          auto const longer = concat(alpha, power(turn, len / turn.length()));
          out.emplace_back(longer, alpha);
          out.emplace_back(alpha, longer);
        }
      }
      if (alpha.length() == max_length || !in_w(alpha.range())) {
        break;
      }
      alpha = concat(alpha,
                     Path::edge(g, *forced_edge(g, alpha.range(), triple_.h)));
    }
    std::sort(out.begin(), out.end());
    auto const vx = Element::vertex(v);
    for (auto const& y : out) {
      if (!contains(vx, y)) {
        throw std::logic_error("generated element is not related to the vertex");
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  Element reduce_mod_h(Graph const& g, CongruenceTriple const& t,
                       Element const& x) {
    return TripleCongruence(g, t).reduce_mod_h(x);
  }

  bool equiv(Graph const& g, CongruenceTriple const& t, Element const& x,
             Element const& y) {
    return TripleCongruence(g, t).contains(x, y);
  }

  Element normal_form(Graph const& g, CongruenceTriple const& t,
                      Element const& x) {
    return TripleCongruence(g, t).normal_form(x);
  }

  std::vector<Element> vertex_class_members(Graph const&            g,
                                            CongruenceTriple const& t,
                                            vertex_index            v,
                                            std::size_t max_length) {
    return TripleCongruence(g, t).vertex_class_members(v, max_length);
  }

  bool triple_leq(Graph const& g, CongruenceTriple const& t1,
                  CongruenceTriple const& t2) {
    for (auto const* t : {&t1, &t2}) {
      if (auto d = validate_triple(g, *t); !d) {
        throw Error("invalid congruence triple: " + d.messages.front());
      }
    }
    if (!t1.h.is_subset_of(t2.h)) {
      return false;
    }
    if (!(t1.pair.w - t2.h).is_subset_of(t2.pair.w)) {
      return false;
    }
    for (auto const& [c, f1] : t1.pair.f) {
      if (auto it = t2.pair.f.find(c); it != t2.pair.f.end()) {
        if (!divides(it->second, f1)) {
          return false;
        }
      }
    }
    return true;
  }

  TripleEnumeration enumerate_triples(Graph const& g, std::uint64_t f_cap) {
    if (f_cap == 0) {
      throw Error("the f-value cap must be positive");
    }
    std::vector<Period> values;
    for (std::uint64_t n = 1; n <= f_cap; ++n) {
      values.push_back(Period::finite(n));
    }
    values.push_back(Period::infinite());

    TripleEnumeration out;
    for (auto const& h : enumerate_hereditary(g)) {
      auto const candidates = index_one_vertices(g, h).members();
      if (candidates.size() >= 64) {
        throw Error("too many index-one vertices to enumerate subsets");
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size());
           ++mask) {
        VertexSet w = g.no_vertices();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          if (mask >> i & 1U) {
            w.insert(candidates[i]);
          }
        }
        auto cycles = cycles_in(g, w, h);
        std::sort(cycles.begin(), cycles.end());
        if (!cycles.empty()) {
          out.infinite_family = true;
        }
        // odometer over values^cycles, first cycle most significant
        std::vector<std::size_t> digit(cycles.size(), 0);
        while (true) {
          CongruenceTriple t{h, {w, {}}};
          for (std::size_t i = 0; i < cycles.size(); ++i) {
            t.pair.f.emplace(cycles[i], values[digit[i]]);
          }
          out.triples.push_back(std::move(t));
          auto i = cycles.size();
          while (i > 0 && ++digit[i - 1] == values.size()) {
            digit[--i] = 0;
          }
          if (i == 0) {
            break;
          }
        }
      }
    }
    return out;
  }

  Stabilization chain_stabilizes(Graph const&                      g,
                                 std::span<CongruenceTriple const> chain) {
    if (chain.empty()) {
      throw Error("empty chain");
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (!triple_leq(g, chain[i], chain[i + 1])) {
        throw Error("chain is not increasing at position "
                    + std::to_string(i + 1));
      }
    }
    std::size_t m = chain.size();
    while (m > 1 && chain[m - 2] == chain[m - 1]) {
      --m;
    }
    return {m, m < chain.size()};
  }

}  // namespace gis
