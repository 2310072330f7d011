#include "mutalg/substitute.hpp"

#include <algorithm>

#include "mutalg/error.hpp"

namespace mutalg {

namespace {

// Powers of one polynomial, computed on demand.
class PowerCache {
 public:
  explicit PowerCache(const LaurentPolynomial& base) : powers_{LaurentPolynomial::constant(base.context(), 1), base} {}

  const LaurentPolynomial& get(long n) {
    while (static_cast<long>(powers_.size()) <= n) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[static_cast<std::size_t>(n)];
  }

 private:
  std::vector<LaurentPolynomial> powers_;
};

}  // namespace

RationalFunction substitute(const LaurentPolynomial& f, const std::vector<RationalFunction>& images,
                            const VariableContext& target) {
  if (images.size() != f.arity()) throw Error("substitution needs one image per variable");
  for (const RationalFunction& img : images) {
    if (!(img.context() == target)) throw Error("substitution image in the wrong context");
  }
  if (f.is_zero()) return RationalFunction(target);

  // Common denominator prod_i den_i^P_i * num_i^Q_i where P_i and Q_i bound the
  // positive and negative exponents of variable i.
  const std::size_t n = f.arity();
  Exponent pos = f.max_exponent();
  Exponent neg = f.min_exponent();
  for (std::size_t i = 0; i < n; ++i) {
    pos[i] = std::max(pos[i], 0L);
    neg[i] = std::max(-neg[i], 0L);
    if (neg[i] > 0 && images[i].is_zero()) throw Error("negative power of a variable mapped to zero");
  }

  std::vector<PowerCache> num_pows, den_pows;
  num_pows.reserve(n);
  den_pows.reserve(n);
  for (const RationalFunction& img : images) {
    num_pows.emplace_back(img.numerator());
    den_pows.emplace_back(img.denominator());
  }

  LaurentPolynomial common = LaurentPolynomial::constant(target, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (pos[i] > 0 && !images[i].denominator().is_constant()) common = common * den_pows[i].get(pos[i]);
    if (neg[i] > 0) common = common * num_pows[i].get(neg[i]);
  }

  LaurentPolynomial numerator(target);
  for (const auto& [e, c] : f.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(target, c);
    for (std::size_t i = 0; i < n; ++i) {
      long a = neg[i] + e[i];
      long b = pos[i] - e[i];
      if (a > 0) term = term * num_pows[i].get(a);
      if (b > 0 && !images[i].denominator().is_constant()) term = term * den_pows[i].get(b);
    }
    numerator += term;
  }
  return RationalFunction::normalize(numerator, common);
}

RationalFunction substitute(const RationalFunction& f, const std::vector<RationalFunction>& images,
                            const VariableContext& target) {
  RationalFunction num = substitute(f.numerator(), images, target);
  if (f.denominator().is_constant()) {
    return num * RationalFunction(LaurentPolynomial::constant(target, Rational(1) / f.denominator().leading_term().second));
  }
  RationalFunction den = substitute(f.denominator(), images, target);
  if (den.is_zero()) throw Error("substitution sends the denominator to zero");
  return num / den;
}

RationalFunction substitute(const RationalFunction& f,
                            const std::map<std::string, RationalFunction>& images,
                            const VariableContext& target) {
  std::vector<RationalFunction> ordered;
  ordered.reserve(f.context().size());
  for (const std::string& name : f.context().names()) {
    auto it = images.find(name);
    if (it == images.end()) throw Error("no image for variable '" + name + "'");
    ordered.push_back(it->second);
  }
  return substitute(f, ordered, target);
}

std::vector<RationalFunction> coordinate_images(const VariableContext& ctx) {
  std::vector<RationalFunction> images;
  images.reserve(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) images.emplace_back(LaurentPolynomial::variable(ctx, i));
  return images;
}

}  // namespace mutalg
