#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mutalg/cone.hpp"
#include "mutalg/datum.hpp"
#include "mutalg/matrix.hpp"
#include "mutalg/rational_function.hpp"
#include "mutalg/report.hpp"
#include "mutalg/seed.hpp"

namespace mutalg {

/// An embedded semigroup algebra: Laurent polynomials in `ctx` whose support
/// lies in the dual of `cone`, mapped into the reference function field.
struct Chart {
  std::string name;
  VariableContext ctx;
  Cone cone{0};
  /// Image of each chart coordinate, in reference coordinates.
  std::vector<RationalFunction> to_reference;
  /// Image of each reference coordinate, in chart coordinates.
  std::vector<RationalFunction> from_reference;
};

/// Mutation relating the reference chart to another chart. Chart coordinate
/// i corresponds to the monomial x^{basis row i} of the mutated frame.
struct ChartTransition {
  MutationDatum datum;
  IntMatrix basis;
};

struct MSAPresentation {
  Chart reference;
  std::vector<Chart> charts;
  std::vector<ChartTransition> transitions;
  bool height_one_declared = false;
  /// Named shorthands in reference coordinates, usable in queries.
  std::map<std::string, RationalFunction> aliases;

  std::size_t size() const { return charts.size() + 1; }
  /// Index 0 is the reference chart.
  const Chart& chart(std::size_t index) const;
};

/// Coordinate images of x^m -> x^m h^{-<u,m>} (forward) and of
/// x^m -> x^m h^{<u,m>} (inverse), both over `ctx`.
std::pair<std::vector<RationalFunction>, std::vector<RationalFunction>> transition_from_datum(
    const MutationDatum& d, const VariableContext& ctx);

/// The identity chart on `ctx` with the given cone.
Chart reference_chart(const VariableContext& ctx, Cone cone, std::string name = "reference");

/// Chart obtained from the reference coordinates by the datum, with chart
/// coordinates `vars` attached to the rows of the unimodular `basis`.
Chart mutation_chart(const VariableContext& reference, const std::string& name, const VariableContext& vars,
                     Cone cone, const MutationDatum& d, const IntMatrix& basis);

struct SeedDatum {
  MutationDatum datum;
  /// mu_k(f): rows f_i for i != k and -f_k + sum_j [-b_jk]+ f_j in row k.
  IntMatrix basis;
};

/// Datum (e_k, 1 + x^{v_k}) with v_k = sum_j b_jk f_j, in the seed's cluster
/// coordinates. Throws unless column k is primitive.
SeedDatum seed_to_datum(const Seed& s, std::size_t k);

/// Datum and rays check of a transition; cones are in reference coordinates.
/// The ray check compares {rho - v_rho(h) u} with the rays of sigma2 up to
/// positive scaling and reports SurrogatePass or SurrogateFail.
ValidationReport validate_mutation(const MutationDatum& d, const Cone& sigma1, const Cone& sigma2);

/// Chart cone rewritten in reference coordinates through the basis.
Cone cone_in_reference(const Cone& chart_cone, const IntMatrix& basis);

RationalFunction chart_express(const MSAPresentation& p, std::size_t index, const RationalFunction& f);

struct ChartCertificate {
  std::size_t chart;
  std::string chart_name;
  bool member = false;
  /// Laurent expansion in chart coordinates, or the reason for failure.
  std::string detail;
  std::optional<LaurentPolynomial> expansion;
};

struct Membership {
  bool member = false;
  std::vector<ChartCertificate> charts;
  /// First failing chart, if any.
  const ChartCertificate* failure() const;
};

ChartCertificate chart_membership(const MSAPresentation& p, std::size_t index, const RationalFunction& f);
Membership msa_membership(const MSAPresentation& p, const RationalFunction& f);

/// Reference chart on the seed's cluster and one chart per mutable vertex, with
/// cone spanned by the frozen vertices marked in `noninvertible`.
MSAPresentation upper_presentation(const Seed& s, const std::vector<bool>& noninvertible);

/// Membership in the upper cluster algebra; f is in the seed's cluster
/// coordinates. Throws when the seed is not of maximal rank.
Membership upper_membership(const Seed& s, const RationalFunction& f, const std::vector<bool>& noninvertible);

/// Rewrites an ambient expression in the initial cluster via the inverse ledger.
RationalFunction express_in_cluster(const Seed& s, const RationalFunction& ambient_f);

/// All listed valuations of the chart expansions are nonnegative. `ws[i]`
/// belongs to chart i. Throws when f is not in the intersection.
bool valuation_membership(const std::vector<std::vector<LatticeVector>>& ws, const MSAPresentation& p,
                          const RationalFunction& f);

enum class ConeReading {
  /// Chart cones are in chart coordinates, converted through the basis.
  ChartCoordinates,
  /// Chart cones are read in reference coordinates as written.
  Literal,
};

/// Strong convexity, round trips, unimodular bases, datum validity and
/// admissibility, the ray check, and the declared height-one condition.
ValidationReport validate_presentation(const MSAPresentation& p, ConeReading reading = ConeReading::ChartCoordinates);

}  // namespace mutalg
