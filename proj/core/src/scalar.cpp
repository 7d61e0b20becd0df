#include "tropical/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "tropical/error.hpp"

namespace tropical {

ExtendedRational::ExtendedRational(const mpq_class& value) : value_(value) {
  value_->canonicalize();
}

ExtendedRational::ExtendedRational(mpq_class&& value)
    : value_(std::move(value)) {
  value_->canonicalize();
}

ExtendedRational::ExtendedRational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  value_ = std::move(q);
}

const mpq_class& ExtendedRational::value() const {
  if (!value_) throw DomainError("value of an infinite scalar");
  return *value_;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() == b.is_infinite();
  }
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a,
                                 const ExtendedRational& b) {
  if (a.is_infinite()) {
    return b.is_infinite() ? std::strong_ordering::equal
                           : std::strong_ordering::greater;
  }
  if (b.is_infinite()) return std::strong_ordering::less;
  return cmp(*a.value_, *b.value_) <=> 0;
}

std::string ExtendedRational::to_string() const {
  return value_ ? value_->get_str() : std::string("inf");
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& a) {
  return os << a.to_string();
}

ExtendedRational trop_add(const ExtendedRational& a,
                          const ExtendedRational& b) {
  return b < a ? b : a;
}

ExtendedRational trop_mul(const ExtendedRational& a,
                          const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtendedRational::infinity();
  return mpq_class(a.value() + b.value());
}

ExtendedRational trop_pow(const ExtendedRational& a, std::uint64_t k) {
  if (k == 0) return ExtendedRational();
  if (a.is_infinite()) return a;
  mpz_class times;
  mpz_import(times.get_mpz_t(), 1, 1, sizeof k, 0, 0, &k);
  return mpq_class(a.value() * mpq_class(times));
}

ExtendedRational trop_inverse(const ExtendedRational& a) {
  if (a.is_infinite()) {
    throw DomainError("trop_inverse: infinity has no multiplicative inverse");
  }
  return mpq_class(-a.value());
}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

ExtendedRational parse_scalar(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar", 0);
  if (text == "inf") return ExtendedRational::infinity();

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](const char* what) {
    const std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == start) throw ParseError(std::string("expected ") + what, pos);
    return mpz_class(std::string(text.substr(start, pos - start)));
  };

  mpz_class num = digits("digits");
  mpz_class den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_pos = pos;
    den = digits("denominator digits");
    if (den == 0) throw ParseError("zero denominator", den_pos);
  }
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  if (negative) num = -num;
  return mpq_class(num, den);
}

}  // namespace tropical
