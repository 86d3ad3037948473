// Brute-force ground truth for the congruence classification: explicit
// finite semigroups for acyclic graphs, congruence closure and enumeration
// over them, and a bounded search over elementary transitions for graphs
// with cycles.
//
// Nothing here calls the structural decision procedure of TripleCongruence;
// the two sides are meant to be checked against each other.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gis/congruence.hpp"
#include "gis/element.hpp"
#include "gis/graph.hpp"

namespace gis {

  // I(G) for a finite acyclic graph: every alpha beta*, plus zero, with its
  // Cayley table.
  class FiniteSemigroup {
   public:
    using index_type = std::uint32_t;

    // Throws Error if g has a cycle.
    explicit FiniteSemigroup(Graph const& g);

    [[nodiscard]] std::size_t size() const noexcept {
      return elements_.size();
    }
    [[nodiscard]] Element const& element(index_type i) const {
      return elements_.at(i);
    }
    [[nodiscard]] std::vector<Element> const& elements() const noexcept {
      return elements_;
    }
    [[nodiscard]] std::optional<index_type> find(Element const& x) const;
    // Throws Error if x is not an element.
    [[nodiscard]] index_type index_of(Element const& x) const;
    [[nodiscard]] index_type zero() const noexcept {
      return 0;
    }
    [[nodiscard]] index_type product(index_type i, index_type j) const {
      return table_[i * elements_.size() + j];
    }

   private:
    std::vector<Element>                           elements_;
    std::unordered_map<Element, index_type>        lookup_;
    std::vector<index_type>                        table_;
  };

  [[nodiscard]] FiniteSemigroup materialize(Graph const& g);

  // Exhaustive check of (xy)z = x(yz) on the Cayley table.
  [[nodiscard]] bool is_associative(FiniteSemigroup const& s);

  // A partition of the elements of a FiniteSemigroup.
  //
  // Class labels are normalized (numbered by first occurrence), so equal
  // partitions compare equal.
  class ExplicitCongruence {
   public:
    explicit ExplicitCongruence(std::vector<std::size_t> labels);

    [[nodiscard]] std::size_t size() const noexcept {
      return label_.size();
    }
    [[nodiscard]] std::size_t class_of(std::size_t i) const {
      return label_.at(i);
    }
    [[nodiscard]] bool contains(std::size_t i, std::size_t j) const {
      return class_of(i) == class_of(j);
    }
    [[nodiscard]] std::size_t number_of_classes() const noexcept {
      return classes_;
    }
    [[nodiscard]] std::vector<std::vector<std::size_t>> classes() const;
    // Every class of *this lies inside a class of other.
    [[nodiscard]] bool refines(ExplicitCongruence const& other) const;

    friend bool operator==(ExplicitCongruence const& a,
                           ExplicitCongruence const& b) {
      return a.label_ == b.label_;
    }
    friend auto operator<=>(ExplicitCongruence const& a,
                            ExplicitCongruence const& b) {
      return a.label_ <=> b.label_;
    }

   private:
    std::vector<std::size_t> label_;
    std::size_t              classes_ = 0;
  };

  // Left and right compatibility, checked pair by pair against the table.
  [[nodiscard]] bool is_compatible(FiniteSemigroup const&    s,
                                   ExplicitCongruence const& rho);

  using IndexPairs = std::vector<std::pair<std::size_t, std::size_t>>;

  // The least congruence containing the pairs.
  [[nodiscard]] ExplicitCongruence congruence_closure(FiniteSemigroup const& s,
                                                      IndexPairs const& pairs);
  // Throws Error if some element of a pair is not in s.
  [[nodiscard]] ExplicitCongruence
  congruence_closure(FiniteSemigroup const& s, GeneratingPairs const& pairs);

  // Least congruence containing both.
  [[nodiscard]] ExplicitCongruence join(ExplicitCongruence const& a,
                                        ExplicitCongruence const& b);

  // Every congruence: principal congruences closed under joins. Throws Error
  // if s has more than max_elements elements.
  [[nodiscard]] std::vector<ExplicitCongruence>
  enumerate_congruences(FiniteSemigroup const& s,
                        std::size_t            max_elements = 20);

  using Relation = std::function<bool(Element const&, Element const&)>;

  // The triple read off a relation rho on I(G):
  //   H = {v : v rho 0},
  //   W = {s(e) : e e* rho s(e), r(e) not in H},
  //   f(c) = least m <= max_power with c^m rho s(c), else infinity,
  // for the cycles whose vertices lie in W and whose exits all end in H.
  [[nodiscard]] CongruenceTriple triple_of_relation(Graph const&    g,
                                                    Relation const& rho,
                                                    std::size_t max_power);

  [[nodiscard]] CongruenceTriple
  triple_of_congruence(Graph const& g, FiniteSemigroup const& s,
                       ExplicitCongruence const& rho);

  // Every nonzero a generates s as a two-sided ideal.
  [[nodiscard]] bool is_zero_simple(FiniteSemigroup const& s);

  ////////////////////////////////////////////////////////////////////////
  // Elementary transitions
  ////////////////////////////////////////////////////////////////////////

  struct TransitionResult {
    // True when a chain of elementary transitions joins the two elements.
    // False means only that none exists within the bounds.
    bool reached = false;
    // x = chain.front(), ..., chain.back() = y when reached.
    std::vector<Element> chain;
    std::size_t          expanded = 0;
  };

  // Elementary transitions p a q <-> p b q for the generating pairs (a, b) of
  // a triple, restricted to elements (and multipliers p, q) whose paths have
  // length <= len_bound.
  class TransitionSystem {
   public:
    TransitionSystem(Graph const& g, CongruenceTriple const& t,
                     std::size_t len_bound);

    [[nodiscard]] std::size_t size() const noexcept {
      return elements_.size();
    }
    [[nodiscard]] bool in_bounds(Element const& x) const {
      return lookup_.contains(x);
    }
    // Breadth-first search expanding at most step_bound elements.
    [[nodiscard]] TransitionResult reach(Element const& x, Element const& y,
                                         std::size_t step_bound) const;
    // Elements connected to x within the bounds.
    [[nodiscard]] std::vector<Element> component(Element const& x) const;

   private:
    std::vector<Element>                        elements_;
    std::unordered_map<Element, std::size_t>    lookup_;
    std::vector<std::vector<std::size_t>>       adjacent_;
  };

  [[nodiscard]] TransitionResult
  transition_reachable(Graph const& g, CongruenceTriple const& t,
                       Element const& x, Element const& y,
                       std::size_t len_bound, std::size_t step_bound);

}  // namespace gis
