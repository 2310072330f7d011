#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mutalg/context.hpp"

namespace mutalg {

using Rational = mpq_class;
using Exponent = std::vector<long>;

/// Graded lexicographic order: total degree first, then lexicographic in
/// context order with the first variable most significant.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse Laurent polynomial with rational coefficients.
///
/// Terms are kept canonical: no zero coefficient is ever stored, so equality
/// of term maps is equality of polynomials. The zero polynomial has no terms.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  explicit LaurentPolynomial(VariableContext ctx);

  static LaurentPolynomial constant(VariableContext ctx, const Rational& value);
  static LaurentPolynomial variable(VariableContext ctx, std::size_t index);
  static LaurentPolynomial monomial(VariableContext ctx, Exponent exponent,
                                    const Rational& coefficient = 1);

  const VariableContext& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  std::size_t arity() const { return ctx_.size(); }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// True when every exponent is nonnegative.
  bool is_polynomial() const;

  /// Coefficient of x^e (zero when absent).
  Rational coefficient(const Exponent& e) const;
  /// Greatest term under GrlexLess. Throws on zero.
  const std::pair<const Exponent, Rational>& leading_term() const;
  /// Total degree of the leading term. Throws on zero (degree is -infinity).
  long total_degree() const;
  /// Componentwise minimum of the support. Throws on zero.
  Exponent min_exponent() const;
  /// Componentwise maximum of the support. Throws on zero.
  Exponent max_exponent() const;
  /// Largest exponent of variable `var`. Throws on zero.
  long degree_in(std::size_t var) const;

  /// Multiply by the monomial x^shift.
  LaurentPolynomial shifted(const Exponent& shift) const;
  /// Power with exponent >= 0, or negative when this is a monomial.
  LaurentPolynomial pow(long n) const;

  /// Adds c*x^e, keeping the term map canonical.
  void add_term(const Exponent& e, const Rational& c);

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& scalar);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) {
    a *= s;
    return a;
  }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  void require_same_context(const LaurentPolynomial& other) const;

  VariableContext ctx_;
  TermMap terms_;
};

/// Readable, re-parseable rendering such as `x^2*y - 1/2*x^(-1)`.
std::string to_string(const LaurentPolynomial& f);
std::string to_string(const Rational& q);

}  // namespace mutalg
