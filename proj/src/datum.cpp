#include "mutalg/datum.hpp"

#include "mutalg/error.hpp"
#include "mutalg/expr.hpp"

namespace mutalg {

MutationDatum MutationDatum::make(LatticeVector u, LaurentPolynomial g, long k, bool declared_irreducible) {
  if (g.is_zero()) throw Error("mutation datum with g = 0");
  if (k < 1) throw Error("mutation datum exponent k must be positive");
  if (u.rank() != g.arity()) throw Error("mutation datum: u and g live in lattices of different rank");
  IrreducibilityCertificate cert{Irreducibility::Unknown, "monomials are units"};
  if (!g.is_monomial()) cert = certify_irreducible(g);
  if (cert.status == Irreducibility::Unknown && declared_irreducible && !g.is_monomial()) {
    cert = {Irreducibility::DeclaredIrreducible, "declared by input data (" + cert.method + ")"};
  }
  LaurentPolynomial h = g.pow(k);
  return MutationDatum{std::move(u), std::move(g), k, std::move(h), std::move(cert)};
}

ValidationReport datum_validate(const MutationDatum& d, const Cone& target) {
  ValidationReport report;

  if (d.u.is_zero()) {
    report.add("u_primitive", Verdict::Fail, "u is the zero vector");
  } else if (is_primitive(d.u)) {
    report.add("u_primitive", Verdict::Pass, to_string(d.u));
  } else {
    report.add("u_primitive", Verdict::Fail, to_string(d.u) + " is not primitive");
  }

  std::string offender;
  for (const auto& [e, c] : d.g.terms()) {
    if (pairing(d.u, e) != 0) {
      offender = to_string(LatticeVector(e));
      break;
    }
  }
  if (offender.empty()) {
    report.add("g_in_u_perp", Verdict::Pass, "support of g pairs to 0 with u");
  } else {
    report.add("g_in_u_perp", Verdict::Fail, "exponent " + offender + " pairs nonzero with u");
  }

  if (d.k >= 1 && d.h == d.g.pow(d.k)) {
    report.add("h_is_g_pow_k", Verdict::Pass, "k = " + std::to_string(d.k));
  } else {
    report.add("h_is_g_pow_k", Verdict::Fail, "h differs from g^" + std::to_string(d.k));
  }

  if (target.rank() != d.u.rank()) {
    report.add("admissible", Verdict::Fail, "target cone has the wrong rank");
  } else if (cone_contains(target, d.u)) {
    report.add("admissible", Verdict::Fail, "u lies in the target cone");
  } else {
    report.add("admissible", Verdict::Pass, "u is outside the target cone");
  }

  if (d.g.is_monomial()) {
    report.add("g_irreducible", Verdict::Fail, "g = " + format_expr(d.g) + " is a unit");
  } else {
    switch (d.irreducibility.status) {
      case Irreducibility::CertifiedIrreducible:
        report.add("g_irreducible", Verdict::Pass, d.irreducibility.method);
        break;
      case Irreducibility::CertifiedReducible:
        report.add("g_irreducible", Verdict::Fail, d.irreducibility.method);
        break;
      case Irreducibility::DeclaredIrreducible:
      case Irreducibility::Unknown:
        report.add("g_irreducible", Verdict::Unchecked,
                   std::string(irreducibility_name(d.irreducibility.status)) + ": " + d.irreducibility.method);
        break;
    }
  }
  return report;
}

}  // namespace mutalg
