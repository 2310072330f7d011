#include "mutalg/charts.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mutalg/error.hpp"
#include "mutalg/expr.hpp"
#include "mutalg/substitute.hpp"

namespace mutalg {

const Chart& MSAPresentation::chart(std::size_t index) const {
  if (index == 0) return reference;
  if (index > charts.size()) throw Error("chart index " + std::to_string(index) + " out of range");
  return charts[index - 1];
}

const ChartCertificate* Membership::failure() const {
  for (const auto& c : charts) {
    if (!c.member) return &c;
  }
  return nullptr;
}

namespace {

// Reference exponent m becomes chart exponent m * inv (row vector).
LaurentPolynomial change_monomials(const LaurentPolynomial& f, const IntMatrix& inv, const VariableContext& target) {
  LaurentPolynomial out(target);
  for (const auto& [e, c] : f.terms()) {
    Exponent img(inv.cols(), 0);
    for (std::size_t l = 0; l < e.size(); ++l) {
      if (e[l] == 0) continue;
      for (std::size_t j = 0; j < inv.cols(); ++j) img[j] += e[l] * inv(l, j);
    }
    out.add_term(img, c);
  }
  return out;
}

RationalFunction change_monomials(const RationalFunction& f, const IntMatrix& inv, const VariableContext& target) {
  return RationalFunction::normalize(change_monomials(f.numerator(), inv, target),
                                     change_monomials(f.denominator(), inv, target));
}

std::vector<LatticeVector> primitive_rays(const Cone& c) {
  std::set<LatticeVector> rays;
  for (const auto& g : c.generators()) {
    if (!g.is_zero()) rays.insert(primitive_part(g));
  }
  return {rays.begin(), rays.end()};
}

std::string format_rays(const std::vector<LatticeVector>& rays) {
  std::string out = "{";
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (i) out += ", ";
    out += to_string(rays[i]);
  }
  return out + "}";
}

bool round_trip(const Chart& c, const VariableContext& ref, std::string& detail) {
  auto ref_coords = coordinate_images(ref);
  for (std::size_t l = 0; l < ref.size(); ++l) {
    if (!(substitute(c.from_reference[l], c.to_reference, ref) == ref_coords[l])) {
      detail = "reference coordinate " + ref.name(l) + " does not return to itself";
      return false;
    }
  }
  auto chart_coords = coordinate_images(c.ctx);
  for (std::size_t i = 0; i < c.ctx.size(); ++i) {
    if (!(substitute(c.to_reference[i], c.from_reference, c.ctx) == chart_coords[i])) {
      detail = "chart coordinate " + c.ctx.name(i) + " does not return to itself";
      return false;
    }
  }
  detail = "both composites are the identity";
  return true;
}

}  // namespace

std::pair<std::vector<RationalFunction>, std::vector<RationalFunction>> transition_from_datum(
    const MutationDatum& d, const VariableContext& ctx) {
  if (d.u.rank() != ctx.size() || !(d.h.context() == ctx)) throw Error("datum does not live in this context");
  if (d.h.is_zero()) throw Error("datum with h = 0");
  RationalFunction h(d.h);
  auto coords = coordinate_images(ctx);
  std::vector<RationalFunction> forward, inverse;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    forward.push_back(coords[i] * h.pow(-d.u[i]));
    inverse.push_back(coords[i] * h.pow(d.u[i]));
  }
  return {std::move(forward), std::move(inverse)};
}

Chart reference_chart(const VariableContext& ctx, Cone cone, std::string name) {
  if (cone.rank() != ctx.size()) throw Error("reference cone has the wrong rank");
  auto coords = coordinate_images(ctx);
  return Chart{std::move(name), ctx, std::move(cone), coords, coords};
}

Chart mutation_chart(const VariableContext& reference, const std::string& name, const VariableContext& vars,
                     Cone cone, const MutationDatum& d, const IntMatrix& basis) {
  std::size_t n = reference.size();
  if (vars.size() != n || basis.rows() != n || basis.cols() != n) {
    throw Error("chart '" + name + "' must have as many coordinates as the reference");
  }
  if (cone.rank() != n) throw Error("chart '" + name + "' cone has the wrong rank");
  auto inv = unimodular_inverse(basis);
  if (!inv) throw Error("chart '" + name + "' basis is not unimodular");
  auto [forward, inverse] = transition_from_datum(d, reference);
  Chart c{name, vars, std::move(cone), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    LaurentPolynomial mono = LaurentPolynomial::monomial(reference, basis.row(i));
    c.to_reference.push_back(substitute(mono, forward, reference));
  }
  for (std::size_t l = 0; l < n; ++l) c.from_reference.push_back(change_monomials(inverse[l], *inv, vars));
  return c;
}

SeedDatum seed_to_datum(const Seed& s, std::size_t k) {
  auto col = s.matrix().column_of(k);
  if (!col) throw Error("vertex '" + s.labels().at(k) + "' is frozen");
  std::size_t n = s.size();
  Exponent v(n, 0);
  long g = 0;
  IntMatrix basis = IntMatrix::identity(n);
  basis(k, k) = -1;
  for (std::size_t j = 0; j < n; ++j) {
    long b = s.matrix().b(j, *col);
    v[j] = b;
    g = std::gcd(g, b);
    if (b < 0) basis(k, j) += -b;
  }
  if (g != 1) {
    throw Error("column of vertex '" + s.labels().at(k) + "' is not primitive, so 1 + x^v is not irreducible");
  }
  VariableContext ctx = s.cluster_context();
  LaurentPolynomial h = LaurentPolynomial::constant(ctx, 1) + LaurentPolynomial::monomial(ctx, v);
  return {MutationDatum::make(LatticeVector::unit(n, k), h), basis};
}

Cone cone_in_reference(const Cone& chart_cone, const IntMatrix& basis) {
  auto inv = unimodular_inverse(basis);
  if (!inv) throw Error("basis is not unimodular");
  std::vector<LatticeVector> gens;
  for (const auto& r : chart_cone.generators()) {
    LatticeVector out(r.rank());
    for (std::size_t i = 0; i < r.rank(); ++i) {
      for (std::size_t j = 0; j < r.rank(); ++j) out[i] += (*inv)(i, j) * r[j];
    }
    gens.push_back(out);
  }
  return Cone(chart_cone.rank(), std::move(gens));
}

ValidationReport validate_mutation(const MutationDatum& d, const Cone& sigma1, const Cone& sigma2) {
  ValidationReport report = datum_validate(d, sigma2);
  if (sigma1.rank() != d.u.rank() || sigma2.rank() != d.u.rank()) {
    report.add("divisor_rays", Verdict::SurrogateFail, "cone ranks differ from the datum");
    return report;
  }
  std::set<LatticeVector> moved;
  for (const auto& rho : primitive_rays(sigma1)) {
    long v = monomial_valuation(rho, d.h);
    LatticeVector t = rho - v * d.u;
    if (t.is_zero()) {
      report.add("divisor_rays", Verdict::SurrogateFail, "ray " + to_string(rho) + " collapses to 0");
      return report;
    }
    moved.insert(primitive_part(t));
  }
  std::vector<LatticeVector> image(moved.begin(), moved.end());
  std::vector<LatticeVector> target = primitive_rays(sigma2);
  std::string detail = "transformed " + format_rays(image) + ", target " + format_rays(target);
  report.add("divisor_rays", image == target ? Verdict::SurrogatePass : Verdict::SurrogateFail, detail);
  return report;
}

RationalFunction chart_express(const MSAPresentation& p, std::size_t index, const RationalFunction& f) {
  const Chart& c = p.chart(index);
  if (!(f.context() == p.reference.ctx)) throw Error("expression is not in reference coordinates");
  if (index == 0) return f;
  return substitute(f, c.from_reference, c.ctx);
}

ChartCertificate chart_membership(const MSAPresentation& p, std::size_t index, const RationalFunction& f) {
  const Chart& c = p.chart(index);
  ChartCertificate cert{index, c.name, false, {}, std::nullopt};
  RationalFunction g = chart_express(p, index, f);
  auto lp = g.as_laurent();
  if (!lp) {
    cert.detail = "not Laurent: denominator " + format_expr(g.denominator());
    return cert;
  }
  for (const auto& [e, coeff] : lp->terms()) {
    if (!dual_contains(c.cone, e)) {
      cert.detail = "exponent " + to_string(LatticeVector(e)) + " lies outside the dual cone";
      cert.expansion = *lp;
      return cert;
    }
  }
  cert.member = true;
  cert.detail = format_expr(*lp);
  cert.expansion = std::move(*lp);
  return cert;
}

Membership msa_membership(const MSAPresentation& p, const RationalFunction& f) {
  Membership out;
  out.member = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.charts.push_back(chart_membership(p, i, f));
    out.member = out.member && out.charts.back().member;
  }
  return out;
}

MSAPresentation upper_presentation(const Seed& s, const std::vector<bool>& noninvertible) {
  std::size_t n = s.size();
  if (noninvertible.size() != n) throw Error("one invertibility flag per vertex is required");
  std::vector<std::size_t> cone_idx;
  for (std::size_t j = 0; j < n; ++j) {
    if (!noninvertible[j]) continue;
    if (!s.is_frozen(j)) throw Error("only frozen vertices can be non-invertible");
    cone_idx.push_back(j);
  }
  VariableContext ctx = s.cluster_context();
  MSAPresentation p;
  p.reference = reference_chart(ctx, Cone::coordinate(n, cone_idx), "seed");
  for (std::size_t k : s.matrix().mutable_vertices) {
    std::size_t col = *s.matrix().column_of(k);
    Exponent v(n, 0);
    IntMatrix basis = IntMatrix::identity(n);
    basis(k, k) = -1;
    for (std::size_t j = 0; j < n; ++j) {
      long b = s.matrix().b(j, col);
      v[j] = b;
      if (b < 0) basis(k, j) += -b;
    }
    LaurentPolynomial h = LaurentPolynomial::constant(ctx, 1) + LaurentPolynomial::monomial(ctx, v);
    MutationDatum d = MutationDatum::make(LatticeVector::unit(n, k), h);
    std::vector<std::string> names = s.names();
    names[k] = s.base_names()[k] + "_" + std::to_string(s.mutation_counts()[k] + 1);
    p.charts.push_back(mutation_chart(ctx, "mu_" + s.labels()[k], VariableContext(names),
                                      Cone::coordinate(n, cone_idx), d, basis));
    p.transitions.push_back({std::move(d), std::move(basis)});
  }
  return p;
}

Membership upper_membership(const Seed& s, const RationalFunction& f, const std::vector<bool>& noninvertible) {
  if (!is_maximal_rank(s)) {
    throw Error("seed is not of maximal rank; the adjacent-chart intersection only bounds the upper cluster algebra");
  }
  return msa_membership(upper_presentation(s, noninvertible), f);
}

RationalFunction express_in_cluster(const Seed& s, const RationalFunction& ambient_f) {
  if (!(ambient_f.context() == s.ambient())) throw Error("expression is not in the ambient variables");
  if (!s.is_initial()) throw Error("ambient expressions can only be rewritten in the initial cluster");
  if (!s.inverse_ledger()) throw Error("seed has no inverse ledger for its ambient variables");
  return substitute(ambient_f, *s.inverse_ledger(), s.initial_context());
}

bool valuation_membership(const std::vector<std::vector<LatticeVector>>& ws, const MSAPresentation& p,
                          const RationalFunction& f) {
  if (ws.size() > p.size()) throw Error("more valuation lists than charts");
  Membership m = msa_membership(p, f);
  if (!m.member) throw Error("element is not in the intersection (fails chart '" + m.failure()->chart_name + "')");
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (const auto& w : ws[i]) {
      if (monomial_valuation(w, *m.charts[i].expansion) < 0) return false;
    }
  }
  return true;
}

ValidationReport validate_presentation(const MSAPresentation& p, ConeReading reading) {
  ValidationReport report;
  auto convex = [&](const std::string& prefix, const Cone& c) {
    bool ok = is_strongly_convex(c);
    report.add(prefix + "strongly_convex", ok ? Verdict::Pass : Verdict::Fail);
  };
  convex(p.reference.name + ".", p.reference.cone);
  if (p.transitions.size() != p.charts.size()) throw Error("every chart needs a transition");
  for (std::size_t i = 0; i < p.charts.size(); ++i) {
    const Chart& c = p.charts[i];
    const ChartTransition& t = p.transitions[i];
    std::string prefix = c.name + ".";
    convex(prefix, c.cone);
    bool unimodular = unimodular_inverse(t.basis).has_value();
    report.add(prefix + "basis_unimodular", unimodular ? Verdict::Pass : Verdict::Fail);
    std::string detail;
    bool rt = round_trip(c, p.reference.ctx, detail);
    report.add(prefix + "round_trip", rt ? Verdict::Pass : Verdict::Fail, detail);
    if (!unimodular) continue;
    Cone sigma2 = reading == ConeReading::ChartCoordinates ? cone_in_reference(c.cone, t.basis) : c.cone;
    report.append(validate_mutation(t.datum, p.reference.cone, sigma2), prefix);
  }
  report.add("height_one", Verdict::Unchecked,
             p.height_one_declared ? "declared in the input; not verified" : "not declared; not verified");
  return report;
}

}  // namespace mutalg
