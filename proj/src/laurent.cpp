#include "mutalg/laurent.hpp"

#include <algorithm>
#include <numeric>

#include "mutalg/error.hpp"

namespace mutalg {

namespace {

long degree_sum(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); }

}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  long da = degree_sum(a);
  long db = degree_sum(b);
  if (da != db) return da < db;
  return a < b;
}

LaurentPolynomial::LaurentPolynomial(VariableContext ctx) : ctx_(std::move(ctx)) {}

LaurentPolynomial LaurentPolynomial::constant(VariableContext ctx, const Rational& value) {
  Exponent zero(ctx.size(), 0);
  LaurentPolynomial p(std::move(ctx));
  p.add_term(zero, value);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(VariableContext ctx, std::size_t index) {
  if (index >= ctx.size()) throw Error("variable index out of range");
  Exponent e(ctx.size(), 0);
  e[index] = 1;
  return monomial(std::move(ctx), std::move(e));
}

LaurentPolynomial LaurentPolynomial::monomial(VariableContext ctx, Exponent exponent,
                                              const Rational& coefficient) {
  if (exponent.size() != ctx.size()) throw Error("exponent length does not match context");
  LaurentPolynomial p(std::move(ctx));
  p.add_term(exponent, coefficient);
  return p;
}

bool LaurentPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Exponent& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](long v) { return v == 0; });
}

bool LaurentPolynomial::is_polynomial() const {
  for (const auto& [e, c] : terms_) {
    if (std::any_of(e.begin(), e.end(), [](long v) { return v < 0; })) return false;
  }
  return true;
}

Rational LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Exponent, Rational>& LaurentPolynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return *terms_.rbegin();
}

long LaurentPolynomial::total_degree() const {
  if (terms_.empty()) throw Error("degree of the zero polynomial is -infinity");
  return degree_sum(terms_.rbegin()->first);
}

Exponent LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw Error("support of the zero polynomial is empty");
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

Exponent LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw Error("support of the zero polynomial is empty");
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], e[i]);
  }
  return m;
}

long LaurentPolynomial::degree_in(std::size_t var) const { return max_exponent().at(var); }

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& shift) const {
  if (shift.size() != arity()) throw Error("exponent length does not match context");
  LaurentPolynomial r(ctx_);
  for (const auto& [e, c] : terms_) {
    Exponent s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(s), c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(long n) const {
  if (n < 0) {
    if (!is_monomial()) throw Error("negative power of a non-monomial Laurent polynomial");
    const auto& [e, c] = *terms_.begin();
    Exponent inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = e[i] * n;
    Rational coeff = 1;
    for (long k = 0; k < -n; ++k) coeff /= c;
    return monomial(ctx_, std::move(inv), coeff);
  }
  LaurentPolynomial result = constant(ctx_, 1);
  LaurentPolynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

void LaurentPolynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  if (e.size() != arity()) throw Error("exponent length does not match context");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPolynomial::require_same_context(const LaurentPolynomial& other) const {
  if (!(ctx_ == other.ctx_)) throw Error("context mismatch between polynomials");
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  require_same_context(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  require_same_context(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.require_same_context(b);
  LaurentPolynomial r(a.ctx_);
  const std::size_t n = a.arity();
  Exponent e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += f.context().name(i);
      if (e[i] < 0) {
        mono += "^(" + std::to_string(e[i]) + ")";
      } else if (e[i] != 1) {
        mono += "^" + std::to_string(e[i]);
      }
    }
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace mutalg
