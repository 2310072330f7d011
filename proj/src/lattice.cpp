#include "mutalg/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mutalg/error.hpp"

namespace mutalg {

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t index) {
  LatticeVector v(rank);
  v.entries_.at(index) = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](long x) { return x == 0; });
}

LatticeVector LatticeVector::operator-() const { return (-1) * *this; }

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) throw Error("lattice rank mismatch");
  LatticeVector r = a;
  for (std::size_t i = 0; i < r.rank(); ++i) r[i] += b[i];
  return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) { return a + (-b); }

LatticeVector operator*(long s, const LatticeVector& v) {
  LatticeVector r = v;
  for (long& x : r.entries_) x *= s;
  return r;
}

long pairing(const LatticeVector& u, const LatticeVector& m) { return pairing(u, m.entries()); }

long pairing(const LatticeVector& u, const Exponent& m) {
  if (u.rank() != m.size()) throw Error("pairing of vectors with different ranks");
  long s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += u[i] * m[i];
  return s;
}

bool is_primitive(const LatticeVector& u) {
  if (u.is_zero()) throw Error("primitivity of the zero vector is undefined");
  long g = 0;
  for (long x : u.entries()) g = std::gcd(g, x);
  return g == 1;
}

LatticeVector primitive_part(const LatticeVector& u) {
  if (u.is_zero()) throw Error("primitive part of the zero vector is undefined");
  long g = 0;
  for (long x : u.entries()) g = std::gcd(g, x);
  LatticeVector r = u;
  for (std::size_t i = 0; i < r.rank(); ++i) r[i] /= g;
  return r;
}

long monomial_valuation(const LatticeVector& w, const LaurentPolynomial& f) {
  if (f.is_zero()) throw Error("valuation of zero is infinite");
  long best = std::numeric_limits<long>::max();
  for (const auto& [e, c] : f.terms()) best = std::min(best, pairing(w, e));
  return best;
}

std::string to_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.rank(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace mutalg
