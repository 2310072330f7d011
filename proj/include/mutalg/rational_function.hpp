#pragma once

#include <optional>
#include <string>

#include "mutalg/laurent.hpp"

namespace mutalg {

/// Quotient of two coprime polynomials.
///
/// Normal form: numerator and denominator have nonnegative exponents and no
/// common factor, and the denominator is monic under GrlexLess. Equality of
/// normal forms is equality of functions.
class RationalFunction {
 public:
  explicit RationalFunction(VariableContext ctx);
  /// Clears negative exponents into a monomial denominator.
  RationalFunction(const LaurentPolynomial& f);  // NOLINT(google-explicit-constructor)

  /// Canonical form of num/den. Either input may carry negative exponents.
  static RationalFunction normalize(const LaurentPolynomial& num, const LaurentPolynomial& den);

  const VariableContext& context() const { return num_.context(); }
  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// Laurent expansion when the denominator is a single monomial.
  std::optional<LaurentPolynomial> as_laurent() const;

  RationalFunction inverse() const;
  RationalFunction pow(long n) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

std::string to_string(const RationalFunction& f);

}  // namespace mutalg
