#pragma once

#include <optional>
#include <string>

#include "mutalg/cone.hpp"
#include "mutalg/laurent.hpp"
#include "mutalg/lattice.hpp"
#include "mutalg/report.hpp"

namespace mutalg {

enum class Irreducibility {
  CertifiedIrreducible,
  CertifiedReducible,
  DeclaredIrreducible,
  Unknown,
};

const char* irreducibility_name(Irreducibility s);

struct IrreducibilityCertificate {
  Irreducibility status;
  std::string method;
};

/// Decides irreducibility of a Laurent polynomial whose support lies on a
/// lattice segment (a univariate polynomial after a monomial change of
/// variables). Other supports give Unknown. Throws on zero or monomial input.
IrreducibilityCertificate certify_irreducible(const LaurentPolynomial& g);

/// Univariate test over Q; coefficients[i] multiplies t^i, both ends nonzero.
IrreducibilityCertificate certify_univariate(const std::vector<Rational>& coefficients);

/// A pair (u, h = g^k) defining x^m -> x^m h^{-<u,m>}.
///
/// Construction does not enforce the invariants; datum_validate reports them.
struct MutationDatum {
  LatticeVector u;
  LaurentPolynomial g;
  long k = 1;
  LaurentPolynomial h;
  IrreducibilityCertificate irreducibility;

  static MutationDatum make(LatticeVector u, LaurentPolynomial g, long k = 1,
                            bool declared_irreducible = false);
};

/// Primitivity of u, support of g orthogonal to u, h = g^k, admissibility
/// u not in `target`, and the irreducibility status of g.
ValidationReport datum_validate(const MutationDatum& d, const Cone& target);

}  // namespace mutalg
