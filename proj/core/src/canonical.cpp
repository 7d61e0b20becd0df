#include "tropical/canonical.hpp"

#include <cassert>
#include <string>
#include <utility>

#include "tropical/envelope.hpp"
#include "tropical/error.hpp"

namespace tropical {
namespace {

void require_nonzero(const TropPoly& f, const char* op) {
  if (f.is_zero()) throw DomainError(std::string(op) + ": zero polynomial");
}

}  // namespace

CanonicalPoly::CanonicalPoly(TropPoly f) : poly_(std::move(f)) {
  if (poly_.is_zero() || !is_canonical(poly_)) {
    throw DomainError("CanonicalPoly: not a least-coefficient polynomial");
  }
}

CanonicalPoly::CanonicalPoly(TropPoly f, Trusted) : poly_(std::move(f)) {
  assert(is_canonical(poly_));
}

CanonicalPoly canonicalize(const TropPoly& f) {
  require_nonzero(f, "canonicalize");
  const auto a = f.coeffs();
  const std::size_t r = f.low_degree();
  const std::vector<std::size_t> hull = lower_hull(f);

  std::vector<ExtendedRational> b;
  b.reserve(a.size());
  b.push_back(a.front());
  mpq_class slope;
  mpq_class level;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const std::size_t u = hull[k] - r;
    const std::size_t v = hull[k + 1] - r;
    if (v > u + 1) {
      // Points strictly between hull vertices drop onto the chord.
      slope = a[v].value() - a[u].value();
      slope /= static_cast<unsigned long>(v - u);
      level = a[u].value();
      for (std::size_t j = u + 1; j < v; ++j) {
        level += slope;
        b.emplace_back(level);
      }
    }
    b.push_back(a[v]);
  }
  return CanonicalPoly(TropPoly(r, std::move(b)), CanonicalPoly::Trusted{});
}

CanonicalPoly canonicalize_naive(const TropPoly& f) {
  require_nonzero(f, "canonicalize_naive");
  const auto a = f.coeffs();
  const std::size_t len = a.size();
  std::vector<ExtendedRational> b(a.begin(), a.end());
  mpq_class chord;
  mpq_class term;
  for (std::size_t j = 1; j + 1 < len; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (a[i].is_infinite()) continue;
      for (std::size_t k = j + 1; k < len; ++k) {
        if (a[k].is_infinite()) continue;
        chord = a[i].value();
        chord *= static_cast<unsigned long>(k - j);
        term = a[k].value();
        term *= static_cast<unsigned long>(j - i);
        chord += term;
        chord /= static_cast<unsigned long>(k - i);
        if (b[j].is_infinite() || chord < b[j].value()) b[j] = chord;
      }
    }
  }
  return CanonicalPoly(TropPoly(f.low_degree(), std::move(b)),
                       CanonicalPoly::Trusted{});
}

bool is_canonical(const TropPoly& f) {
  require_nonzero(f, "is_canonical");
  const auto a = f.coeffs();
  for (const ExtendedRational& c : a) {
    if (c.is_infinite()) return false;
  }
  // Walking upward in degree, a_{i-1} - a_i must not increase.
  mpq_class prev;
  mpq_class diff;
  for (std::size_t k = 1; k < a.size(); ++k) {
    diff = a[k - 1].value() - a[k].value();
    if (k > 1 && diff > prev) return false;
    prev = diff;
  }
  return true;
}

bool is_least_coefficient(const TropPoly& f, std::size_t i) {
  require_nonzero(f, "is_least_coefficient");
  if (i < f.low_degree() || i > f.degree()) {
    throw DomainError("is_least_coefficient: degree " + std::to_string(i) +
                      " outside [" + std::to_string(f.low_degree()) + ", " +
                      std::to_string(f.degree()) + "]");
  }
  if (i == f.low_degree() || i == f.degree()) return true;
  if (f.coeffs()[i - f.low_degree()].is_infinite()) return false;
  return supports_degree(f, i);
}

bool equivalent(const TropPoly& f, const TropPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.low_degree() != g.low_degree() || f.degree() != g.degree()) {
    return false;
  }
  return canonicalize(f) == canonicalize(g);
}

}  // namespace tropical
