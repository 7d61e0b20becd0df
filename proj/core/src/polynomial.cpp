#include "tropical/polynomial.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tropical/error.hpp"

namespace tropical {

TropPoly::TropPoly(std::size_t low_degree, std::vector<ExtendedRational> coeffs)
    : low_degree_(low_degree), coeffs_(std::move(coeffs)) {
  auto finite = [](const ExtendedRational& c) { return c.is_finite(); };
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), finite);
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_degree_ = 0;
    return;
  }
  const auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), finite);
  coeffs_.erase(last.base(), coeffs_.end());
  low_degree_ += static_cast<std::size_t>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

TropPoly TropPoly::monomial(const ExtendedRational& c, std::size_t degree) {
  return TropPoly(degree, {c});
}

ExtendedRational TropPoly::coeff(std::size_t i) const {
  if (coeffs_.empty() || i < low_degree_ || i > degree()) {
    return ExtendedRational::infinity();
  }
  return coeffs_[i - low_degree_];
}

TropPoly normalize(const PolyExpr& terms) {
  std::uint64_t lo = UINT64_MAX;
  std::uint64_t hi = 0;
  for (const Term& t : terms) {
    if (t.coeff.is_infinite()) continue;
    lo = std::min(lo, t.exponent);
    hi = std::max(hi, t.exponent);
  }
  if (lo > hi) return TropPoly();
  if (hi - lo >= kMaxDenseSpan) {
    throw DomainError("normalize: degree span " + std::to_string(hi - lo) +
                      " exceeds the dense limit");
  }

  std::vector<ExtendedRational> coeffs(hi - lo + 1,
                                       ExtendedRational::infinity());
  for (const Term& t : terms) {
    if (t.coeff.is_infinite()) continue;
    ExtendedRational& slot = coeffs[t.exponent - lo];
    if (t.coeff < slot) slot = t.coeff;
  }
  return TropPoly(lo, std::move(coeffs));
}

namespace {

void require_finite_point(const ExtendedRational& x0, const char* op) {
  if (x0.is_infinite()) {
    throw DomainError(std::string(op) + ": evaluation at infinity");
  }
}

// a_i + i·x0 for finite a_i.
mpq_class monomial_value(const mpq_class& a, std::size_t i,
                         const mpq_class& x0) {
  mpq_class v = x0;
  v *= static_cast<unsigned long>(i);
  v += a;
  return v;
}

}  // namespace

ExtendedRational eval(const TropPoly& f, const ExtendedRational& x0) {
  require_finite_point(x0, "eval");
  std::optional<mpq_class> best;
  const mpq_class& x = x0.value();
  std::size_t i = f.low_degree();
  for (const ExtendedRational& a : f.coeffs()) {
    if (a.is_finite()) {
      mpq_class v = monomial_value(a.value(), i, x);
      if (!best || v < *best) best = std::move(v);
    }
    ++i;
  }
  return best ? ExtendedRational(std::move(*best))
              : ExtendedRational::infinity();
}

std::vector<std::size_t> argmin_monomials(const TropPoly& f,
                                          const ExtendedRational& x0) {
  if (f.is_zero()) throw DomainError("argmin_monomials: zero polynomial");
  require_finite_point(x0, "argmin_monomials");
  std::vector<std::size_t> degrees;
  std::optional<mpq_class> best;
  const mpq_class& x = x0.value();
  std::size_t i = f.low_degree();
  for (const ExtendedRational& a : f.coeffs()) {
    if (a.is_finite()) {
      mpq_class v = monomial_value(a.value(), i, x);
      if (!best || v < *best) {
        best = std::move(v);
        degrees.clear();
        degrees.push_back(i);
      } else if (v == *best) {
        degrees.push_back(i);
      }
    }
    ++i;
  }
  return degrees;
}

TropPoly poly_add(const TropPoly& f, const TropPoly& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  const std::size_t lo = std::min(f.low_degree(), g.low_degree());
  const std::size_t hi = std::max(f.degree(), g.degree());
  std::vector<ExtendedRational> coeffs;
  coeffs.reserve(hi - lo + 1);
  for (std::size_t i = lo; i <= hi; ++i) {
    coeffs.push_back(trop_add(f.coeff(i), g.coeff(i)));
  }
  return TropPoly(lo, std::move(coeffs));
}

TropPoly poly_mul(const TropPoly& f, const TropPoly& g) {
  if (f.is_zero() || g.is_zero()) return TropPoly();
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  std::vector<ExtendedRational> c(a.size() + b.size() - 1,
                                  ExtendedRational::infinity());
  mpq_class sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_infinite()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_infinite()) continue;
      sum = a[i].value() + b[j].value();
      ExtendedRational& slot = c[i + j];
      if (slot.is_infinite() || sum < slot.value()) slot = sum;
    }
  }
  return TropPoly(f.low_degree() + g.low_degree(), std::move(c));
}

}  // namespace tropical
