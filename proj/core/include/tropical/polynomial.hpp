#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tropical/scalar.hpp"

namespace tropical {

// A single parsed term coeff·x^exponent.
struct Term {
  ExtendedRational coeff;
  std::uint64_t exponent = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

// Terms in the order they were written. Exponents may repeat.
using PolyExpr = std::vector<Term>;

// Upper bound on n - r for the dense coefficient vector.
inline constexpr std::uint64_t kMaxDenseSpan = std::uint64_t{1} << 22;

// A univariate tropical polynomial a_n x^n ⊕ ... ⊕ a_r x^r stored densely
// from the least supported degree r upward. Either empty (the zero
// polynomial, f ≡ ∞) or both a_r and a_n are finite. Interior
// coefficients may be infinite.
class TropPoly {
 public:
  // The zero polynomial.
  TropPoly() = default;

  // Coefficients [a_r, a_{r+1}, ...]. Infinite entries at either end are
  // trimmed, shifting low_degree as needed.
  TropPoly(std::size_t low_degree, std::vector<ExtendedRational> coeffs);

  // The monomial c·x^degree (the zero polynomial if c is infinite).
  static TropPoly monomial(const ExtendedRational& c, std::size_t degree = 0);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // r. Zero for the zero polynomial.
  std::size_t low_degree() const noexcept { return low_degree_; }
  // n. Zero for the zero polynomial.
  std::size_t degree() const noexcept {
    return coeffs_.empty() ? 0 : low_degree_ + coeffs_.size() - 1;
  }
  std::span<const ExtendedRational> coeffs() const noexcept { return coeffs_; }

  // a_i; infinity outside [r, n].
  ExtendedRational coeff(std::size_t i) const;

  friend bool operator==(const TropPoly&, const TropPoly&) = default;

 private:
  std::size_t low_degree_ = 0;
  std::vector<ExtendedRational> coeffs_;
};

// Lowers parsed terms: duplicate exponents merge by ⊕, infinite ends are
// trimmed. Throws DomainError if the span n - r exceeds kMaxDenseSpan.
TropPoly normalize(const PolyExpr& terms);

// min_i (a_i + i·x0); infinity for the zero polynomial.
// Throws DomainError if x0 is infinite.
ExtendedRational eval(const TropPoly& f, const ExtendedRational& x0);

// Degrees i (ascending) with a_i + i·x0 == eval(f, x0). Never empty.
// Throws DomainError for the zero polynomial or infinite x0.
std::vector<std::size_t> argmin_monomials(const TropPoly& f,
                                          const ExtendedRational& x0);

// Coefficient-wise ⊕.
TropPoly poly_add(const TropPoly& f, const TropPoly& g);

// Min-plus convolution c_k = min_{i+j=k} (a_i + b_j).
TropPoly poly_mul(const TropPoly& f, const TropPoly& g);

}  // namespace tropical
