// Elements of the graph inverse semigroup I(G) and the path combinatorics
// used to reason about them.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gis/graph.hpp"

namespace gis {

  // Zero, or alpha beta* for paths alpha, beta with r(alpha) = r(beta).
  //
  // Nonzero elements of I(G) have exactly one such representation, so
  // structural equality is equality in the semigroup.
  class Element {
   public:
    // The zero element.
    Element() = default;
    // Throws Error unless r(alpha) = r(beta).
    Element(Path alpha, Path beta);

    static Element zero() {
      return Element();
    }
    static Element vertex(vertex_index v) {
      return Element(Path::vertex(v), Path::vertex(v));
    }
    // alpha r(alpha)*
    static Element path(Path alpha);
    // r(beta) beta*
    static Element ghost(Path beta);

    [[nodiscard]] bool is_zero() const noexcept {
      return !nonzero_;
    }
    [[nodiscard]] Path const& alpha() const;
    [[nodiscard]] Path const& beta() const;

    [[nodiscard]] bool is_vertex() const noexcept {
      return nonzero_ && alpha_.is_vertex() && beta_.is_vertex();
    }

    friend bool operator==(Element const&, Element const&) = default;
    friend auto operator<=>(Element const&, Element const&) = default;

   private:
    bool nonzero_ = false;
    Path alpha_;
    Path beta_;
  };

  // (alpha beta*)(zeta eta*) by the three-case rule: (alpha xi) eta* when
  // zeta = beta xi, alpha (eta xi)* when beta = zeta xi, and 0 otherwise.
  [[nodiscard]] Element multiply(Element const& x, Element const& y);

  [[nodiscard]] inline Element operator*(Element const& x, Element const& y) {
    return multiply(x, y);
  }

  // (alpha beta*)^-1 = beta alpha*
  [[nodiscard]] Element inverse(Element const& x);

  // Zero or alpha alpha*.
  [[nodiscard]] bool is_idempotent(Element const& x) noexcept;

  // Every nonzero element whose paths have length <= max_length, preceded by
  // zero. Ordered by the range vertex, then by alpha, then by beta in the
  // order of enumerate_paths.
  [[nodiscard]] std::vector<Element> enumerate_elements(Graph const& g,
                                                        std::size_t max_length);

  ////////////////////////////////////////////////////////////////////////
  // Path combinatorics
  ////////////////////////////////////////////////////////////////////////

  // The unique factorization of a closed path into closed simple paths
  // based at its source (cut after each return to the base). Empty for a
  // vertex. Throws Error if p is not closed.
  [[nodiscard]] std::vector<Path> decompose_closed_path(Path const& p);

  // (c, m) with p = (some rotation of c)^m, c in canonical rotation, when p
  // is a power of a cycle; nullopt otherwise (including for vertices).
  [[nodiscard]] std::optional<std::pair<Cycle, std::size_t>>
  as_cycle_power(Graph const& g, Path const& p);

  // Greedy factorization p = cycle^k tail with k maximal, for a closed path
  // `cycle` based at s(p). Throws Error on a source mismatch.
  struct CycleFactorization {
    std::size_t laps;
    Path        tail;
  };
  [[nodiscard]] CycleFactorization factor_along_cycle(Path const& cycle,
                                                      Path const& p);

  // For a no-exit cycle c and a path a from s(c) that follows c:
  // a = c^laps offset with c = offset rest, and the conjugate
  // rotated = rest offset, which satisfies
  //   a* c^k a = rotated^k   and   c^k a a* = a rotated^k a*.
  struct Conjugation {
    Path        rotated;
    std::size_t laps;
    Path        offset;
  };
  // Throws Error if some vertex of c has index other than one, if
  // s(a) != s(c), or if a leaves c.
  [[nodiscard]] Conjugation conjugate_cycle(Graph const& g, Path const& c,
                                            Path const& a);

}  // namespace gis

template <>
struct std::hash<gis::Element> {
  std::size_t operator()(gis::Element const& x) const noexcept;
};
