#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropical/polynomial.hpp"

namespace tropical {

// One linear piece of x ↦ f(x): on [lo, hi] the monomial of `degree` is
// minimal. An empty lo means -∞, an empty hi means +∞. A piece with
// lo == hi is a single point where the monomial only touches the
// minimum (a collinear point of the lower hull).
struct Piece {
  std::size_t degree = 0;
  std::optional<ExtendedRational> lo;
  std::optional<ExtendedRational> hi;

  friend bool operator==(const Piece&, const Piece&) = default;
};

// The lower envelope min_i (a_i + i·x) as a partition of the line.
// Pieces run left to right with strictly decreasing degree; consecutive
// pieces share an endpoint. Breakpoints are the distinct finite endpoints.
struct Envelope {
  std::vector<Piece> pieces;
  std::vector<ExtendedRational> breakpoints;
};

// Degrees of the lower convex hull of {(i, a_i) : a_i finite}, ascending.
// Collinear points are kept. Throws DomainError for the zero polynomial.
std::vector<std::size_t> lower_hull(const TropPoly& f);

// Throws DomainError for the zero polynomial.
Envelope lower_envelope(const TropPoly& f);

// Whether some finite x0 has eval(f, x0) == a_i + i·x0, i.e. (i, a_i) is
// on the lower hull. False for an infinite a_i. Throws DomainError for the
// zero polynomial or i outside [r, n].
bool supports_degree(const TropPoly& f, std::size_t i);

// The corner locus: points where at least two monomials attain the
// minimum, ascending, without repetition.
std::vector<ExtendedRational> breakpoints(const TropPoly& f);

}  // namespace tropical
