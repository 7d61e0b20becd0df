#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropical {

// An element of the rational tropical semiring: an exact rational, or
// infinity (the additive identity). Finite values are kept in lowest terms
// with a positive denominator. Infinity compares greater than every
// finite value.
class ExtendedRational {
 public:
  // Finite zero, the multiplicative identity.
  ExtendedRational() : value_(mpq_class(0)) {}
  ExtendedRational(long value) : value_(mpq_class(value)) {}  // NOLINT
  ExtendedRational(const mpq_class& value);                    // NOLINT
  ExtendedRational(mpq_class&& value);                         // NOLINT
  // num/den, reduced. Throws DomainError if den == 0.
  ExtendedRational(long num, long den);

  static ExtendedRational infinity() { return ExtendedRational(Infinite{}); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  // Precondition: is_finite(). Throws DomainError otherwise.
  const mpq_class& value() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b);

  // "inf", "p" or "p/q".
  std::string to_string() const;

 private:
  struct Infinite {};
  explicit ExtendedRational(Infinite) {}

  std::optional<mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& a);

// a ⊕ b = min(a, b).
ExtendedRational trop_add(const ExtendedRational& a, const ExtendedRational& b);
// a ⊙ b = a + b; infinity is absorbing.
ExtendedRational trop_mul(const ExtendedRational& a, const ExtendedRational& b);
// k-fold ⊙ of a, i.e. k·a. trop_pow(a, 0) == 0 for every a, including
// infinity (empty product).
ExtendedRational trop_pow(const ExtendedRational& a, std::uint64_t k);
// The classical negative of a. Throws DomainError for infinity.
ExtendedRational trop_inverse(const ExtendedRational& a);

// Strict scalar literal: optional sign, then digits, optionally "/digits";
// or the literal "inf". No surrounding whitespace. Throws ParseError.
ExtendedRational parse_scalar(std::string_view text);

}  // namespace tropical
