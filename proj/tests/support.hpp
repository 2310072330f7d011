#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "mutalg/expr.hpp"
#include "mutalg/graded.hpp"
#include "mutalg/rational_function.hpp"
#include "mutalg/seed.hpp"

namespace mutalg {

inline void PrintTo(const LaurentPolynomial& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const RationalFunction& f, std::ostream* os) { *os << to_string(f); }

}  // namespace mutalg

namespace testing_support {

using mutalg::Rational;

inline mutalg::VariableContext ctx(std::vector<std::string> names) { return mutalg::VariableContext(std::move(names)); }

inline mutalg::RationalFunction rf(const std::string& text, const mutalg::VariableContext& c) {
  return mutalg::parse_expr(text, c);
}

inline mutalg::LaurentPolynomial lp(const std::string& text, const mutalg::VariableContext& c) {
  return mutalg::parse_laurent(text, c);
}

/// Term-by-term evaluation with exact rationals; independent of substitute().
Rational evaluate(const mutalg::LaurentPolynomial& f, const std::vector<Rational>& point);
/// Throws std::domain_error when the denominator vanishes at the point.
Rational evaluate(const mutalg::RationalFunction& f, const std::vector<Rational>& point);

/// Small nonzero rationals p/q with |p| <= 7, 1 <= q <= 5.
std::vector<Rational> random_point(std::size_t n, std::mt19937_64& rng);

mutalg::LaurentPolynomial random_laurent(const mutalg::VariableContext& c, std::mt19937_64& rng, std::size_t terms,
                                         long lo, long hi);

struct SeedShape {
  std::size_t max_vertices = 5;
  long max_entry = 2;
  bool allow_frozen = true;
  /// D = diag(1 or 2) when true, else skew-symmetric principal part.
  bool symmetrizable = true;
};

/// Random seed with identity ledger over x1..xn. The principal part is
/// S * diag(d) for a random skew-symmetric S, so diag(d) skew-symmetrizes it.
mutalg::Seed random_seed(std::mt19937_64& rng, const SeedShape& shape);

/// Integer basis of {y : y B = 0} by exact elimination over Q.
std::vector<std::vector<long>> left_kernel(const mutalg::IntMatrix& b);

/// Grading rows are random integer combinations of the left kernel of B, so
/// every exchange relation is homogeneous.
mutalg::Grading random_compatible_grading(const mutalg::Seed& s, std::mt19937_64& rng, std::size_t rank);

}  // namespace testing_support
