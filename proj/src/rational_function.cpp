#include "mutalg/rational_function.hpp"

#include <algorithm>

#include "mutalg/error.hpp"
#include "mutalg/poly.hpp"

namespace mutalg {

namespace {

Exponent negated(const Exponent& e) {
  Exponent r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r[i] = -e[i];
  return r;
}

}  // namespace

RationalFunction::RationalFunction(VariableContext ctx)
    : num_(ctx), den_(LaurentPolynomial::constant(ctx, 1)) {}

RationalFunction::RationalFunction(const LaurentPolynomial& f)
    : RationalFunction(normalize(f, LaurentPolynomial::constant(f.context(), 1))) {}

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {}

RationalFunction RationalFunction::normalize(const LaurentPolynomial& num,
                                             const LaurentPolynomial& den) {
  if (!(num.context() == den.context())) throw Error("context mismatch in rational function");
  if (den.is_zero()) throw Error("zero denominator");
  const VariableContext& ctx = num.context();
  if (num.is_zero()) return RationalFunction(ctx);

  // Strip the monomial content of each side, then put the monomial ratio back
  // on whichever side keeps exponents nonnegative.
  Exponent nmin = num.min_exponent();
  Exponent dmin = den.min_exponent();
  LaurentPolynomial n = num.shifted(negated(nmin));
  LaurentPolynomial d = den.shifted(negated(dmin));
  Exponent up(nmin.size()), down(nmin.size());
  for (std::size_t i = 0; i < nmin.size(); ++i) {
    long diff = nmin[i] - dmin[i];
    up[i] = std::max(diff, 0L);
    down[i] = std::max(-diff, 0L);
  }

  if (!d.is_constant()) {
    if (auto q = exact_divide(n, d)) {
      n = std::move(*q);
      d = LaurentPolynomial::constant(ctx, 1);
    } else {
      LaurentPolynomial g = gcd(n, d);
      if (!g.is_constant()) {
        n = *exact_divide(n, g);
        d = *exact_divide(d, g);
      }
    }
  }
  n = n.shifted(up);
  d = d.shifted(down);
  Rational lc = d.leading_term().second;
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    n *= inv;
    d *= inv;
  }
  return RationalFunction(std::move(n), std::move(d));
}

std::optional<LaurentPolynomial> RationalFunction::as_laurent() const {
  if (!den_.is_monomial()) return std::nullopt;
  const auto& [e, c] = den_.leading_term();
  LaurentPolynomial r = num_.shifted(negated(e));
  if (c != 1) r *= Rational(1) / c;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw Error("division by zero");
  return normalize(den_, num_);
}

RationalFunction RationalFunction::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  // num and den are coprime, so their powers are too.
  LaurentPolynomial pn = num_.pow(n);
  LaurentPolynomial pd = den_.pow(n);
  return RationalFunction(std::move(pn), std::move(pd));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction::normalize(a.num_ + b.num_, a.den_);
  return RationalFunction::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error("division by zero");
  return RationalFunction::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RationalFunction& f) {
  if (f.denominator().is_constant()) return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

}  // namespace mutalg
