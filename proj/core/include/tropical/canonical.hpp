#pragma once

#include <cstddef>

#include "tropical/polynomial.hpp"

namespace tropical {

class Factorization;

// A nonzero least-coefficient polynomial: no interior infinities and
// consecutive differences a_{i-1} - a_i non-decreasing as i decreases.
class CanonicalPoly {
 public:
  // Throws DomainError unless is_canonical(f).
  explicit CanonicalPoly(TropPoly f);

  const TropPoly& poly() const noexcept { return poly_; }
  operator const TropPoly&() const noexcept { return poly_; }  // NOLINT

  friend bool operator==(const CanonicalPoly&, const CanonicalPoly&) = default;

 private:
  struct Trusted {};
  CanonicalPoly(TropPoly f, Trusted);

  friend CanonicalPoly canonicalize(const TropPoly&);
  friend CanonicalPoly canonicalize_naive(const TropPoly&);
  friend CanonicalPoly expand(const Factorization&);

  TropPoly poly_;
};

// The least-coefficient representative of f's functional-equivalence
// class, read off the lower convex hull of the coefficients in O(n).
// Throws DomainError for the zero polynomial.
CanonicalPoly canonicalize(const TropPoly& f);

// Same result by the direct O(n^3) formula
//   b_j = min({a_j} ∪ {(a_i·(k-j) + a_k·(j-i)) / (k-i) : r <= i < j < k <= n}),
// skipping chords with an infinite endpoint.
CanonicalPoly canonicalize_naive(const TropPoly& f);

// Throws DomainError for the zero polynomial.
bool is_canonical(const TropPoly& f);

// Whether a_i cannot be lowered without changing f as a function.
// Throws DomainError for the zero polynomial or i outside [r, n].
bool is_least_coefficient(const TropPoly& f, std::size_t i);

// f(x) == g(x) for every rational x. Zero is equivalent only to zero.
bool equivalent(const TropPoly& f, const TropPoly& g);

}  // namespace tropical
