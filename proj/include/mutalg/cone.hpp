#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mutalg/laurent.hpp"
#include "mutalg/lattice.hpp"

namespace mutalg {

/// Rational polyhedral cone {sum lambda_i g_i : lambda_i >= 0} in N_R.
/// An empty generator list is the zero cone.
class Cone {
 public:
  explicit Cone(std::size_t rank) : rank_(rank) {}
  Cone(std::size_t rank, std::vector<LatticeVector> generators);

  /// Cone spanned by the unit vectors e_i for i in `indices`.
  static Cone coordinate(std::size_t rank, const std::vector<std::size_t>& indices);

  std::size_t rank() const { return rank_; }
  const std::vector<LatticeVector>& generators() const { return generators_; }
  bool is_zero_cone() const { return generators_.empty(); }

 private:
  std::size_t rank_;
  std::vector<LatticeVector> generators_;
};

/// v is a nonnegative rational combination of the generators.
bool cone_contains(const Cone& cone, const LatticeVector& v);

/// The cone contains no line.
bool is_strongly_convex(const Cone& cone);

/// <g, m> >= 0 for every generator g, i.e. m lies in the dual cone.
bool dual_contains(const Cone& cone, const LatticeVector& m);
bool dual_contains(const Cone& cone, const Exponent& m);

/// Exact rational feasibility by Fourier-Motzkin elimination.
///
/// A constraint reads sum_j coeffs[j]*lambda_j + constant (= or >=) 0.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational constant;
  bool equality = false;
};
bool is_feasible(std::vector<LinearConstraint> constraints, std::size_t variables);

}  // namespace mutalg
