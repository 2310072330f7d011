#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mutalg/rational_function.hpp"
#include "mutalg/seed.hpp"

namespace mutalg {

using Degree = std::vector<long>;

/// Free grading by Z^rank, keyed by variable name.
struct Grading {
  std::size_t rank = 0;
  std::map<std::string, Degree> degrees;

  /// Throws when `name` has no degree.
  const Degree& of(const std::string& name) const;
};

/// Result of a homogeneity test; on failure `witnesses` holds two support
/// exponents of different degree.
struct DegreeResult {
  std::optional<Degree> degree;
  std::pair<Exponent, Exponent> witnesses;
  bool homogeneous() const { return degree.has_value(); }
};

/// Common degree of the support monomials. Throws on f = 0.
DegreeResult degree_of(const LaurentPolynomial& f, const Grading& g);
/// deg(numerator) - deg(denominator) when both are homogeneous.
DegreeResult degree_of(const RationalFunction& f, const Grading& g);

struct VertexCompatibility {
  std::size_t vertex;
  Degree plus;
  Degree minus;
  bool compatible() const { return plus == minus; }
};

struct CompatibilityReport {
  std::vector<VertexCompatibility> vertices;
  bool compatible() const;
};

/// The two exchange monomials at every mutable vertex have equal degree.
/// Degrees are looked up by the seed's current cluster variable names.
CompatibilityReport grading_is_compatible(const Seed& s, const Grading& g);

/// deg(x_k') = sum_j [b_jk]+ deg(x_j) - deg(x_k). Throws when the grading is
/// incompatible at k.
Degree mutated_degree(const Seed& s, const Grading& g, std::size_t k);

/// Mutates the seed and extends the grading by the new variable's degree.
std::pair<Seed, Grading> graded_mutate(const Seed& s, const Grading& g, std::size_t k);

std::string format_degree(const Degree& d);

}  // namespace mutalg
