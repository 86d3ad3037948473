#include "gis/element.hpp"

#include <algorithm>

namespace gis {

  Element::Element(Path alpha, Path beta)
      : nonzero_(true), alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.range() != beta_.range()) {
      throw Error("alpha and beta must share their range");
    }
  }

  Element Element::path(Path alpha) {
    auto r = alpha.range();
    return Element(std::move(alpha), Path::vertex(r));
  }

  Element Element::ghost(Path beta) {
    auto r = beta.range();
    return Element(Path::vertex(r), std::move(beta));
  }

  Path const& Element::alpha() const {
    if (!nonzero_) {
      throw Error("the zero element has no paths");
    }
    return alpha_;
  }

  Path const& Element::beta() const {
    if (!nonzero_) {
      throw Error("the zero element has no paths");
    }
    return beta_;
  }

  Element multiply(Element const& x, Element const& y) {
    if (x.is_zero() || y.is_zero()) {
      return Element::zero();
    }
    auto const& beta = x.beta();
    auto const& zeta = y.alpha();
    if (auto xi = strip_prefix(zeta, beta)) {
      return Element(concat(x.alpha(), *xi), y.beta());
    }
    if (auto xi = strip_prefix(beta, zeta)) {
      return Element(x.alpha(), concat(y.beta(), *xi));
    }
    return Element::zero();
  }

  Element inverse(Element const& x) {
    if (x.is_zero()) {
      return x;
    }
    return Element(x.beta(), x.alpha());
  }

  bool is_idempotent(Element const& x) noexcept {
    return x.is_zero() || x.alpha() == x.beta();
  }

  std::vector<Element> enumerate_elements(Graph const& g,
                                          std::size_t  max_length) {
    std::vector<std::vector<Path>> by_range(g.number_of_vertices());
    for (auto& p : enumerate_paths(g, max_length)) {
      by_range[p.range()].push_back(std::move(p));
    }
    std::vector<Element> out{Element::zero()};
    for (auto const& paths : by_range) {
      for (auto const& a : paths) {
        for (auto const& b : paths) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  std::vector<Path> decompose_closed_path(Path const& p) {
    if (!p.is_closed()) {
      throw Error("decomposition of a path that is not closed");
    }
    std::vector<Path> out;
    std::size_t       start = 0;
    for (std::size_t i = 1; i <= p.length(); ++i) {
      if (p.vertex_at(i) == p.source()) {
        out.push_back(p.subpath(start, i));
        start = i;
      }
    }
    return out;
  }

  std::optional<std::pair<Cycle, std::size_t>>
  as_cycle_power(Graph const& g, Path const& p) {
    if (p.is_vertex() || !p.is_closed()) {
      return std::nullopt;
    }
    auto factors = decompose_closed_path(p);
    if (!Cycle::is_cycle(factors.front())
        || !std::all_of(factors.begin(), factors.end(), [&](Path const& f) {
             return f == factors.front();
           })) {
      return std::nullopt;
    }
    return std::pair{Cycle::from_path(g, factors.front()), factors.size()};
  }

  CycleFactorization factor_along_cycle(Path const& cycle, Path const& p) {
    if (!cycle.is_closed() || cycle.is_vertex()) {
      throw Error("factor_along_cycle needs a closed path of positive length");
    }
    if (cycle.source() != p.source()) {
      throw Error("path does not start at the base of the cycle");
    }
    std::size_t laps = 0;
    Path        tail = p;
    while (auto rest = strip_prefix(tail, cycle)) {
      tail = std::move(*rest);
      ++laps;
    }
    return {laps, std::move(tail)};
  }

  Conjugation conjugate_cycle(Graph const& g, Path const& c, Path const& a) {
    if (!Cycle::is_cycle(c)) {
      throw Error("conjugate_cycle needs a cycle");
    }
    for (auto v : c.sources()) {
      if (g.index(v) != 1) {
        throw Error("cycle has an exit at \"" + g.vertex_id(v) + "\"");
      }
    }
    auto [laps, offset] = factor_along_cycle(c, a);
    if (!is_prefix(offset, c)) {
      throw Error("path leaves the cycle");
    }
    auto rest = c.subpath(offset.length(), c.length());
    return {concat(rest, offset), laps, std::move(offset)};
  }

}  // namespace gis

std::size_t
std::hash<gis::Element>::operator()(gis::Element const& x) const noexcept {
  if (x.is_zero()) {
    return 0x51ed270b;
  }
  std::hash<gis::Path> h;
  auto                 seed = h(x.alpha());
  return seed ^ (h(x.beta()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
