#include "tropical/envelope.hpp"

#include <algorithm>
#include <string>

#include "tropical/error.hpp"

namespace tropical {
namespace {

void require_nonzero(const TropPoly& f, const char* op) {
  if (f.is_zero()) throw DomainError(std::string(op) + ": zero polynomial");
}

// The x at which monomials u < v of f take equal values.
ExtendedRational crossing(const TropPoly& f, std::size_t u, std::size_t v) {
  const auto c = f.coeffs();
  const std::size_t r = f.low_degree();
  mpq_class x = c[u - r].value() - c[v - r].value();
  x /= static_cast<unsigned long>(v - u);
  return x;
}

}  // namespace

std::vector<std::size_t> lower_hull(const TropPoly& f) {
  require_nonzero(f, "lower_hull");
  const auto c = f.coeffs();
  const std::size_t r = f.low_degree();
  std::vector<std::size_t> hull;
  mpq_class lhs;
  mpq_class rhs;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_infinite()) continue;
    const mpq_class& py = c[k].value();
    // Pop the last vertex while it lies strictly above the chord from the
    // one before it to the new point. Collinear vertices survive.
    while (hull.size() >= 2) {
      const std::size_t o = hull[hull.size() - 2] - r;
      const std::size_t a = hull.back() - r;
      const mpq_class& oy = c[o].value();
      const mpq_class& ay = c[a].value();
      lhs = ay - oy;
      lhs *= static_cast<unsigned long>(k - o);
      rhs = py - oy;
      rhs *= static_cast<unsigned long>(a - o);
      if (lhs <= rhs) break;
      hull.pop_back();
    }
    hull.push_back(r + k);
  }
  return hull;
}

Envelope lower_envelope(const TropPoly& f) {
  require_nonzero(f, "lower_envelope");
  const std::vector<std::size_t> hull = lower_hull(f);
  const std::size_t m = hull.size();

  // cross[k] is where hull[k] and hull[k + 1] meet; non-increasing in k.
  std::vector<ExtendedRational> cross;
  cross.reserve(m - 1);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    cross.push_back(crossing(f, hull[k], hull[k + 1]));
  }

  Envelope env;
  env.pieces.reserve(m);
  for (std::size_t k = m; k-- > 0;) {
    Piece piece{hull[k], std::nullopt, std::nullopt};
    if (k + 1 < m) piece.lo = cross[k];
    if (k > 0) piece.hi = cross[k - 1];
    env.pieces.push_back(std::move(piece));
  }
  for (std::size_t k = cross.size(); k-- > 0;) {
    if (env.breakpoints.empty() || env.breakpoints.back() != cross[k]) {
      env.breakpoints.push_back(cross[k]);
    }
  }
  return env;
}

bool supports_degree(const TropPoly& f, std::size_t i) {
  require_nonzero(f, "supports_degree");
  if (i < f.low_degree() || i > f.degree()) {
    throw DomainError("supports_degree: degree " + std::to_string(i) +
                      " outside [" + std::to_string(f.low_degree()) + ", " +
                      std::to_string(f.degree()) + "]");
  }
  if (f.coeffs()[i - f.low_degree()].is_infinite()) return false;
  const std::vector<std::size_t> hull = lower_hull(f);
  return std::binary_search(hull.begin(), hull.end(), i);
}

std::vector<ExtendedRational> breakpoints(const TropPoly& f) {
  require_nonzero(f, "breakpoints");
  return lower_envelope(f).breakpoints;
}

}  // namespace tropical
