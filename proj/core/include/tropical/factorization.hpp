#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropical/canonical.hpp"

namespace tropical {

// leading · x^monomial_degree · (x ⊕ d_n)(x ⊕ d_{n-1}) ⋯ (x ⊕ d_{r+1}),
// with roots held sorted ascending.
class Factorization {
 public:
  // Roots are sorted on construction. Throws DomainError if leading or
  // any root is infinite.
  Factorization(ExtendedRational leading, std::size_t monomial_degree,
                std::vector<ExtendedRational> roots);

  const ExtendedRational& leading() const noexcept { return leading_; }
  std::size_t monomial_degree() const noexcept { return monomial_degree_; }
  const std::vector<ExtendedRational>& roots() const noexcept { return roots_; }
  std::size_t degree() const noexcept {
    return monomial_degree_ + roots_.size();
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  ExtendedRational leading_;
  std::size_t monomial_degree_;
  std::vector<ExtendedRational> roots_;
};

// Canonicalizes f and reads the roots off consecutive coefficient
// differences. Throws DomainError for the zero polynomial.
Factorization factor(const TropPoly& f);

// Coefficient of x^{n-m} is leading plus the sum of the m smallest roots.
CanonicalPoly expand(const Factorization& fac);

// The same product computed by repeated min-plus convolution of the
// linear factors. O(n^2); meant for cross-checking expand().
TropPoly expand_by_convolution(const Factorization& fac);

// Distinct roots, ascending. Throws DomainError for the zero polynomial.
std::vector<ExtendedRational> zero_locus(const TropPoly& f);

// Number of roots equal to d. Throws DomainError for the zero polynomial
// or infinite d.
std::size_t multiplicity(const TropPoly& f, const ExtendedRational& d);

// "0 * (x + 3)^2", "3 * x * (x + 2)", "5". The x^r factor is omitted when
// r == 0; repeated roots are collected into powers.
std::string format_factored(const Factorization& fac);

}  // namespace tropical
