#include "tropical/factorization.hpp"

#include <algorithm>
#include <utility>

#include "tropical/error.hpp"

namespace tropical {

Factorization::Factorization(ExtendedRational leading,
                             std::size_t monomial_degree,
                             std::vector<ExtendedRational> roots)
    : leading_(std::move(leading)),
      monomial_degree_(monomial_degree),
      roots_(std::move(roots)) {
  if (leading_.is_infinite()) {
    throw DomainError("Factorization: infinite leading coefficient");
  }
  for (const ExtendedRational& d : roots_) {
    if (d.is_infinite()) throw DomainError("Factorization: infinite root");
  }
  if (!std::is_sorted(roots_.begin(), roots_.end())) {
    std::sort(roots_.begin(), roots_.end());
  }
}

Factorization factor(const TropPoly& f) {
  if (f.is_zero()) throw DomainError("factor: zero polynomial");
  const CanonicalPoly g = canonicalize(f);
  const auto a = g.poly().coeffs();
  std::vector<ExtendedRational> roots;
  roots.reserve(a.size() - 1);
  // d_i = a_{i-1} - a_i for i = n down to r + 1.
  for (std::size_t k = a.size() - 1; k > 0; --k) {
    roots.emplace_back(mpq_class(a[k - 1].value() - a[k].value()));
  }
  return Factorization(a.back(), g.poly().low_degree(), std::move(roots));
}

CanonicalPoly expand(const Factorization& fac) {
  const auto& roots = fac.roots();
  std::vector<ExtendedRational> coeffs(roots.size() + 1);
  mpq_class partial = fac.leading().value();
  coeffs[roots.size()] = partial;
  for (std::size_t m = 0; m < roots.size(); ++m) {
    partial += roots[m].value();
    coeffs[roots.size() - m - 1] = partial;
  }
  return CanonicalPoly(TropPoly(fac.monomial_degree(), std::move(coeffs)),
                       CanonicalPoly::Trusted{});
}

TropPoly expand_by_convolution(const Factorization& fac) {
  TropPoly product = TropPoly::monomial(fac.leading(), fac.monomial_degree());
  for (const ExtendedRational& d : fac.roots()) {
    product = poly_mul(product, TropPoly(0, {d, ExtendedRational()}));
  }
  return product;
}

std::vector<ExtendedRational> zero_locus(const TropPoly& f) {
  if (f.is_zero()) throw DomainError("zero_locus: zero polynomial");
  std::vector<ExtendedRational> roots = factor(f).roots();
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::size_t multiplicity(const TropPoly& f, const ExtendedRational& d) {
  if (f.is_zero()) throw DomainError("multiplicity: zero polynomial");
  if (d.is_infinite()) throw DomainError("multiplicity: infinite point");
  const Factorization fac = factor(f);
  const auto [lo, hi] =
      std::equal_range(fac.roots().begin(), fac.roots().end(), d);
  return static_cast<std::size_t>(hi - lo);
}

std::string format_factored(const Factorization& fac) {
  std::string out = fac.leading().to_string();
  if (fac.monomial_degree() == 1) {
    out += " * x";
  } else if (fac.monomial_degree() > 1) {
    out += " * x^" + std::to_string(fac.monomial_degree());
  }
  const auto& roots = fac.roots();
  for (auto it = roots.begin(); it != roots.end();) {
    const auto next = std::upper_bound(it, roots.end(), *it);
    out += " * (x + " + it->to_string() + ")";
    if (next - it > 1) out += "^" + std::to_string(next - it);
    it = next;
  }
  return out;
}

}  // namespace tropical
