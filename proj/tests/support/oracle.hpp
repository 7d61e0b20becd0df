#pragma once

// Brute-force references built on the line arrangement of the monomials
// a_i + i·x. They share no code with the hull-based library paths beyond
// the TropPoly container and exact rationals.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "tropical/polynomial.hpp"

namespace tropical::testing {

struct Line {
  std::size_t degree;
  mpq_class intercept;
};

inline std::vector<Line> lines_of(const TropPoly& f) {
  std::vector<Line> lines;
  std::size_t i = f.low_degree();
  for (const ExtendedRational& a : f.coeffs()) {
    if (a.is_finite()) lines.push_back({i, a.value()});
    ++i;
  }
  return lines;
}

inline mpq_class brute_value(const std::vector<Line>& lines, const mpq_class& x) {
  mpq_class best = lines.front().intercept + lines.front().degree * x;
  for (const Line& l : lines) {
    mpq_class v = l.intercept + l.degree * x;
    if (v < best) best = v;
  }
  return best;
}

inline std::vector<std::size_t> brute_active(const std::vector<Line>& lines,
                                             const mpq_class& x) {
  const mpq_class best = brute_value(lines, x);
  std::vector<std::size_t> out;
  for (const Line& l : lines) {
    if (l.intercept + l.degree * x == best) out.push_back(l.degree);
  }
  return out;
}

// Every pairwise crossing, sorted and deduplicated, plus one point to the
// left and right of all of them. The active set of the minimum is constant
// between consecutive crossings, so these candidates witness every
// monomial that is ever minimal.
inline std::vector<mpq_class> candidate_points(const std::vector<Line>& lines) {
  std::vector<mpq_class> xs;
  for (std::size_t p = 0; p < lines.size(); ++p) {
    for (std::size_t q = p + 1; q < lines.size(); ++q) {
      mpq_class x = (lines[p].intercept - lines[q].intercept) /
                    mpq_class(static_cast<long>(lines[q].degree) -
                              static_cast<long>(lines[p].degree));
      xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.empty()) {
    xs.push_back(0);
  } else {
    const mpq_class lo = xs.front() - 1;
    const mpq_class hi = xs.back() + 1;
    xs.insert(xs.begin(), lo);
    xs.push_back(hi);
  }
  return xs;
}

// Some rational x0 with f(x0) = a_i + i·x0.
inline bool brute_least_coefficient(const TropPoly& f, std::size_t i) {
  const ExtendedRational a = f.coeff(i);
  if (a.is_infinite()) return false;
  const auto lines = lines_of(f);
  for (const mpq_class& x : candidate_points(lines)) {
    if (brute_value(lines, x) == a.value() + i * x) return true;
  }
  return false;
}

// Points where at least two monomials attain the minimum.
inline std::vector<mpq_class> brute_corner_locus(const TropPoly& f) {
  const auto lines = lines_of(f);
  std::vector<mpq_class> out;
  for (const mpq_class& x : candidate_points(lines)) {
    if (brute_active(lines, x).size() >= 2) out.push_back(x);
  }
  return out;
}

}  // namespace tropical::testing
