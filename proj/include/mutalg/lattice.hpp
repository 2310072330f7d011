#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mutalg/laurent.hpp"

namespace mutalg {

/// Element of N = Z^r (cocharacters) or M = Z^r (characters). Which lattice a
/// vector lives in is a matter of use; the pairing is the standard dot product.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : entries_(rank, 0) {}
  explicit LatticeVector(std::vector<long> entries) : entries_(std::move(entries)) {}
  LatticeVector(std::initializer_list<long> entries) : entries_(entries) {}

  static LatticeVector unit(std::size_t rank, std::size_t index);

  std::size_t rank() const { return entries_.size(); }
  long operator[](std::size_t i) const { return entries_[i]; }
  long& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<long>& entries() const { return entries_; }
  bool is_zero() const;

  LatticeVector operator-() const;
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator*(long s, const LatticeVector& v);
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) = default;
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) = default;

 private:
  std::vector<long> entries_;
};

/// <u, m> = sum u_i m_i. Throws on rank mismatch.
long pairing(const LatticeVector& u, const LatticeVector& m);
long pairing(const LatticeVector& u, const Exponent& m);

/// gcd of the entries is 1. Throws on the zero vector.
bool is_primitive(const LatticeVector& u);

/// u divided by the gcd of its entries. Throws on the zero vector.
LatticeVector primitive_part(const LatticeVector& u);

/// min over the support of f of <w, m>. Throws on f = 0 (valuation is infinite).
long monomial_valuation(const LatticeVector& w, const LaurentPolynomial& f);

std::string to_string(const LatticeVector& v);

}  // namespace mutalg
