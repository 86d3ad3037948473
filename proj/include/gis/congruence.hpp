// Congruences on I(G) described by congruence triples (H, W, f).
//
// A triple fixes a hereditary set H, a set W of vertices of index one in
// G \ H, and a period f(c) in Z+ or infinity for every cycle c of C(W). The
// congruence it describes is generated by
//
//   (v, 0)          for v in H,
//   (e e*, s(e))    for s(e) in W, e the edge of G \ H leaving s(e),
//   (c^f(c), s(c))  for c in C(W) (every rotation) with f(c) finite,
//
// and every congruence on I(G) arises from exactly one triple. The
// congruence is never materialized: membership is decided from the shape of
// the two elements.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gis/element.hpp"
#include "gis/graph.hpp"

namespace gis {

  // Value of a cycle function: a positive integer or infinity.
  //
  // Finite values order before infinity.
  class Period {
   public:
    // Throws Error if n == 0.
    static Period finite(std::uint64_t n);
    static Period infinite() noexcept {
      return Period();
    }

    [[nodiscard]] bool is_finite() const noexcept {
      return value_ != 0;
    }
    // Throws Error for infinity.
    [[nodiscard]] std::uint64_t value() const;

    friend bool operator==(Period, Period) = default;
    friend std::strong_ordering operator<=>(Period a, Period b) noexcept;

   private:
    Period() = default;
    std::uint64_t value_ = 0;  // 0 encodes infinity
  };

  // a | b, where every positive integer and infinity divide infinity.
  [[nodiscard]] bool divides(Period a, Period b) noexcept;

  [[nodiscard]] std::string to_string(Period p);

  // Keyed by canonical rotation.
  using CycleFunction = std::map<Cycle, Period>;

  struct CongruencePair {
    VertexSet     w;
    CycleFunction f;

    friend bool operator==(CongruencePair const&, CongruencePair const&)
        = default;
  };

  struct CongruenceTriple {
    VertexSet      h;
    CongruencePair pair;

    // The identity congruence (empty, empty, empty).
    static CongruenceTriple identity(Graph const& g);
    // The universal congruence (V, empty, empty).
    static CongruenceTriple universal(Graph const& g);

    friend bool operator==(CongruenceTriple const&, CongruenceTriple const&)
        = default;
  };

  // Lexicographic in (H, W, f); f compares values along the cycle order.
  [[nodiscard]] std::strong_ordering compare(CongruenceTriple const& a,
                                             CongruenceTriple const& b);

  struct Diagnostics {
    std::vector<std::string> messages;

    [[nodiscard]] bool ok() const noexcept {
      return messages.empty();
    }
    explicit operator bool() const noexcept {
      return ok();
    }
  };

  // Checks that H is hereditary, W is a set of index-one vertices of G \ H,
  // and f is defined exactly on the canonical cycles of C(W).
  [[nodiscard]] Diagnostics validate_triple(Graph const&            g,
                                            CongruenceTriple const& t);

  using GeneratingPairs = std::vector<std::pair<Element, Element>>;

  // The pairs listed in the header comment; rotations of each cycle included.
  [[nodiscard]] GeneratingPairs generating_pairs(Graph const&            g,
                                                 CongruenceTriple const& t);

  // The congruence described by a triple, with membership decided
  // structurally. Holds a reference to the graph, which must outlive it.
  class TripleCongruence {
   public:
    // Throws Error with the diagnostics of validate_triple if t is invalid.
    TripleCongruence(Graph const& g, CongruenceTriple t);

    [[nodiscard]] Graph const& graph() const noexcept {
      return *graph_;
    }
    [[nodiscard]] CongruenceTriple const& triple() const noexcept {
      return triple_;
    }

    // Image in I(G \ H) with 0 (elements whose paths end in H become 0).
    [[nodiscard]] Element reduce_mod_h(Element const& x) const;

    [[nodiscard]] bool contains(Element const& x, Element const& y) const;

    // Canonical representative: x and y are related iff their normal forms
    // coincide.
    [[nodiscard]] Element normal_form(Element const& x) const;

    // Elements related to the vertex v whose paths have length <= max_length.
    // Throws Error if v is in H.
    [[nodiscard]] std::vector<Element>
    vertex_class_members(vertex_index v, std::size_t max_length) const;

    // The cycle of C(W) through v, if any.
    [[nodiscard]] std::optional<Cycle> cycle_through(vertex_index v) const;
    [[nodiscard]] Period               period(Cycle const& c) const;

   private:
    struct CyclePosition {
      std::size_t cycle;
      std::size_t offset;
    };

    [[nodiscard]] bool in_w(vertex_index v) const {
      return triple_.pair.w.contains(v);
    }
    [[nodiscard]] bool all_in_w(Path const& p) const;
    [[nodiscard]] bool is_cycle_edge(edge_index e) const;
    // p = rotation_at(s(p))^m with m a positive multiple of a finite period.
    [[nodiscard]] bool is_identified_cycle_power(Path const& p) const;
    // (v, p q*) in the congruence, for paths p, q from v.
    [[nodiscard]] bool vertex_class_test(Path const& p, Path const& q) const;
    [[nodiscard]] bool special_contains(Element const& x,
                                        Element const& y) const;
    void strip_common_tail(Path& a, Path& b) const;
    // Edge count of the longest suffix of p made of cycle edges.
    [[nodiscard]] std::size_t cycle_suffix_length(Path const& p) const;
    [[nodiscard]] Path walk_cycle(vertex_index from, std::size_t steps) const;

    Graph const*                              graph_;
    CongruenceTriple                          triple_;
    std::vector<Cycle>                        cycles_;
    std::vector<Period>                       periods_;
    std::vector<std::optional<CyclePosition>> position_;
  };

  // Free-function forms; each builds a TripleCongruence.
  [[nodiscard]] Element reduce_mod_h(Graph const& g, CongruenceTriple const& t,
                                     Element const& x);
  [[nodiscard]] bool    equiv(Graph const& g, CongruenceTriple const& t,
                              Element const& x, Element const& y);
  [[nodiscard]] Element normal_form(Graph const& g, CongruenceTriple const& t,
                                    Element const& x);
  [[nodiscard]] std::vector<Element>
  vertex_class_members(Graph const& g, CongruenceTriple const& t,
                       vertex_index v, std::size_t max_length);

  // (H1, W1, f1) <= (H2, W2, f2) iff H1 is contained in H2, W1 \ H2 in W2,
  // and f2(c) | f1(c) on the cycles shared by C(W1) and C(W2). Throws Error
  // for invalid triples.
  [[nodiscard]] bool triple_leq(Graph const& g, CongruenceTriple const& t1,
                                CongruenceTriple const& t2);

  struct TripleEnumeration {
    std::vector<CongruenceTriple> triples;
    // Some C(W) is nonempty, so beyond the cap there are infinitely many.
    bool infinite_family = false;
  };

  // Every triple whose finite f-values are <= f_cap (infinity always
  // included), in (H, W, f) order.
  [[nodiscard]] TripleEnumeration enumerate_triples(Graph const&  g,
                                                    std::uint64_t f_cap);

  struct Stabilization {
    // Least 1-based m with t_m = t_j for every j >= m.
    std::size_t index;
    // True when the chain repeats its final value at least once, i.e. the
    // stabilization is witnessed inside the given prefix.
    bool witnessed;
  };

  // Throws Error if the chain is empty or not weakly increasing.
  [[nodiscard]] Stabilization
  chain_stabilizes(Graph const& g, std::span<CongruenceTriple const> chain);

}  // namespace gis
