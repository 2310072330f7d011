#pragma once

#include <cstddef>
#include <vector>

#include "mutalg/graded.hpp"
#include "mutalg/matrix.hpp"
#include "mutalg/seed.hpp"

namespace mutalg {

/// Blow-up of P^n at e_1, ..., e_n, (-1, ..., -1) and the origin, in the
/// affine coordinates z_1, ..., z_n.
struct BlowupConfig {
  std::size_t n;
  std::vector<std::vector<Rational>> points;

  static BlowupConfig standard(std::size_t n);
};

struct LiftedSeed {
  Seed base;
  /// (n+3) x n; row j is the negated valuation along E_j.
  IntMatrix nu;
  /// (2n+3) x (n-1), the base matrix stacked over -nu*B.
  IntMatrix lifted_b;
  Seed lifted;
  Grading grading;
};

/// Path quiver 1 <- 2 <- ... <- n with n frozen, and ledger x_1 = z_1,
/// x_{k+1} = z_{k+1} x_k - x_{k-1} (x_0 = 1). Throws for n < 2.
Seed build_base_seed(std::size_t n);

/// Least total degree of p(z + q). Throws on p = 0 or a non-polynomial p.
long multiplicity_at_point(const LaurentPolynomial& p, const std::vector<Rational>& q);

/// Order along the hyperplane at infinity: minus the total degree.
long valuation_E0(const LaurentPolynomial& p);

IntMatrix nu_matrix(const BlowupConfig& cfg);

/// Assembles the lifted graded seed; throws if its grading is not compatible.
LiftedSeed lifted_seed(const BlowupConfig& cfg);

}  // namespace mutalg
