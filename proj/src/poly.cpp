#include "mutalg/poly.hpp"

#include <algorithm>

#include "mutalg/error.hpp"

namespace mutalg {

namespace {

void require_polynomial(const LaurentPolynomial& f, const char* operation) {
  if (!f.is_polynomial()) {
    throw Error(std::string(operation) + " requires nonnegative exponents");
  }
}

bool divides_monomially(const Exponent& small, const Exponent& big) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

std::optional<LaurentPolynomial> divide_unchecked(const LaurentPolynomial& f,
                                                  const LaurentPolynomial& g) {
  const auto& [lead_exp, lead_coef] = g.leading_term();
  if (g.is_monomial()) {
    Exponent shift(lead_exp.size());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = -lead_exp[i];
    LaurentPolynomial q = f.shifted(shift);
    if (!q.is_polynomial()) return std::nullopt;
    q *= Rational(1) / lead_coef;
    return q;
  }
  // Cheap rejection: per-variable degree bounds.
  Exponent fmax = f.max_exponent();
  Exponent gmax = g.max_exponent();
  if (!divides_monomially(gmax, fmax)) return std::nullopt;
  if (!divides_monomially(g.min_exponent(), f.min_exponent())) return std::nullopt;

  LaurentPolynomial q(f.context());
  LaurentPolynomial r = f;
  Exponent d(lead_exp.size());
  Exponent shifted(lead_exp.size());
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading_term();
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] = re[i] - lead_exp[i];
      if (d[i] < 0) return std::nullopt;
    }
    Rational c = rc / lead_coef;
    q.add_term(d, c);
    for (const auto& [ge, gc] : g.terms()) {
      for (std::size_t i = 0; i < d.size(); ++i) shifted[i] = ge[i] + d[i];
      r.add_term(shifted, -c * gc);
    }
  }
  return q;
}

long degree_in_var(const LaurentPolynomial& f, std::size_t var) {
  long d = 0;
  for (const auto& [e, c] : f.terms()) d = std::max(d, e[var]);
  return d;
}

LaurentPolynomial gcd_impl(const LaurentPolynomial& f, const LaurentPolynomial& g);

LaurentPolynomial primitive_part(const LaurentPolynomial& f, std::size_t var) {
  LaurentPolynomial c = content_in(f, var);
  return make_monic(*divide_unchecked(f, c));
}

// Pseudo-remainder of a by b with respect to var.
LaurentPolynomial pseudo_remainder(const LaurentPolynomial& a, const LaurentPolynomial& b,
                                   std::size_t var) {
  const long db = degree_in_var(b, var);
  const LaurentPolynomial lb = coefficients_in(b, var).back();
  LaurentPolynomial r = a;
  Exponent shift(a.arity(), 0);
  while (!r.is_zero()) {
    const long dr = degree_in_var(r, var);
    if (dr < db) break;
    LaurentPolynomial lr = coefficients_in(r, var).back();
    shift[var] = dr - db;
    r = lb * r - (lr * b).shifted(shift);
  }
  return make_monic(r);
}

LaurentPolynomial primitive_gcd(LaurentPolynomial a, LaurentPolynomial b, std::size_t var) {
  if (degree_in_var(a, var) == 0 || degree_in_var(b, var) == 0) {
    return LaurentPolynomial::constant(a.context(), 1);
  }
  if (degree_in_var(a, var) < degree_in_var(b, var)) std::swap(a, b);
  while (true) {
    LaurentPolynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return primitive_part(b, var);
    if (degree_in_var(r, var) == 0) return LaurentPolynomial::constant(a.context(), 1);
    a = std::move(b);
    b = primitive_part(r, var);
  }
}

LaurentPolynomial gcd_impl(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.is_zero()) return make_monic(g);
  if (g.is_zero()) return make_monic(f);
  const VariableContext& ctx = f.context();
  if (f.is_constant() || g.is_constant()) return LaurentPolynomial::constant(ctx, 1);

  // Split off the monomial content of each side.
  Exponent fmin = f.min_exponent();
  Exponent gmin = g.min_exponent();
  Exponent common(fmin.size());
  bool has_monomial_part = false;
  for (std::size_t i = 0; i < fmin.size(); ++i) {
    common[i] = std::min(fmin[i], gmin[i]);
    has_monomial_part = has_monomial_part || fmin[i] > 0 || gmin[i] > 0;
  }
  if (has_monomial_part) {
    Exponent nf(fmin.size()), ng(gmin.size());
    for (std::size_t i = 0; i < fmin.size(); ++i) {
      nf[i] = -fmin[i];
      ng[i] = -gmin[i];
    }
    LaurentPolynomial rest = gcd_impl(f.shifted(nf), g.shifted(ng));
    return rest.shifted(common);
  }

  if (f.size() >= g.size()) {
    if (divide_unchecked(f, g)) return make_monic(g);
  } else if (divide_unchecked(g, f)) {
    return make_monic(f);
  }

  Exponent fmax = f.max_exponent();
  Exponent gmax = g.max_exponent();
  std::size_t var = 0;
  while (fmax[var] == 0 && gmax[var] == 0) ++var;

  LaurentPolynomial cf = content_in(f, var);
  LaurentPolynomial cg = content_in(g, var);
  LaurentPolynomial c = gcd_impl(cf, cg);
  LaurentPolynomial h = primitive_gcd(*divide_unchecked(f, cf), *divide_unchecked(g, cg), var);
  return make_monic(c * h);
}

}  // namespace

std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& f,
                                              const LaurentPolynomial& g) {
  if (!(f.context() == g.context())) throw Error("context mismatch between polynomials");
  if (g.is_zero()) throw Error("division by the zero polynomial");
  require_polynomial(f, "exact division");
  require_polynomial(g, "exact division");
  if (f.is_zero()) return f;
  return divide_unchecked(f, g);
}

LaurentPolynomial gcd(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (!(f.context() == g.context())) throw Error("context mismatch between polynomials");
  if (f.is_zero() && g.is_zero()) throw Error("gcd of two zero polynomials");
  require_polynomial(f, "gcd");
  require_polynomial(g, "gcd");
  return gcd_impl(f, g);
}

LaurentPolynomial make_monic(const LaurentPolynomial& f) {
  if (f.is_zero()) return f;
  const Rational& lc = f.leading_term().second;
  if (lc == 1) return f;
  return f * (Rational(1) / lc);
}

std::vector<LaurentPolynomial> coefficients_in(const LaurentPolynomial& f, std::size_t var) {
  require_polynomial(f, "coefficient extraction");
  if (var >= f.arity()) throw Error("variable index out of range");
  if (f.is_zero()) return {};
  std::vector<LaurentPolynomial> coeffs(static_cast<std::size_t>(degree_in_var(f, var)) + 1,
                                        LaurentPolynomial(f.context()));
  for (const auto& [e, c] : f.terms()) {
    Exponent rest = e;
    rest[var] = 0;
    coeffs[static_cast<std::size_t>(e[var])].add_term(rest, c);
  }
  return coeffs;
}

LaurentPolynomial content_in(const LaurentPolynomial& f, std::size_t var) {
  LaurentPolynomial c(f.context());
  for (const LaurentPolynomial& coeff : coefficients_in(f, var)) {
    if (coeff.is_zero()) continue;
    c = gcd_impl(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

}  // namespace mutalg
