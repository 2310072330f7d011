#include "mutalg/lifting.hpp"

#include <limits>

#include "mutalg/error.hpp"
#include "mutalg/substitute.hpp"

namespace mutalg {

BlowupConfig BlowupConfig::standard(std::size_t n) {
  if (n < 2) throw Error("blow-up dimension must be at least 2");
  BlowupConfig cfg{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> q(n, 0);
    q[i] = 1;
    cfg.points.push_back(q);
  }
  cfg.points.emplace_back(n, Rational(-1));
  cfg.points.emplace_back(n, Rational(0));
  return cfg;
}

Seed build_base_seed(std::size_t n) {
  if (n < 2) throw Error("base seed needs n >= 2");
  std::vector<std::string> labels, names, zs;
  Quiver q;
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    names.push_back("x" + std::to_string(i));
    zs.push_back("z" + std::to_string(i));
    q.frozen.push_back(i == n);
  }
  for (std::size_t i = 1; i < n; ++i) q.arrows.push_back({i, i - 1, 1});
  VariableContext ambient(zs);
  std::vector<RationalFunction> ledger;
  LaurentPolynomial prev = LaurentPolynomial::constant(ambient, 1);
  LaurentPolynomial cur = LaurentPolynomial::variable(ambient, 0);
  ledger.emplace_back(cur);
  for (std::size_t k = 1; k < n; ++k) {
    LaurentPolynomial next = LaurentPolynomial::variable(ambient, k) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
    ledger.emplace_back(cur);
  }
  return Seed(labels, quiver_to_matrix(q), names, ambient, ledger);
}

long multiplicity_at_point(const LaurentPolynomial& p, const std::vector<Rational>& q) {
  if (p.is_zero()) throw Error("multiplicity of the zero polynomial");
  if (!p.is_polynomial()) throw Error("multiplicity needs a polynomial");
  if (q.size() != p.arity()) throw Error("point has the wrong dimension");
  const VariableContext& ctx = p.context();
  std::vector<RationalFunction> shift;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    shift.emplace_back(LaurentPolynomial::variable(ctx, i) + LaurentPolynomial::constant(ctx, q[i]));
  }
  LaurentPolynomial shifted = *substitute(p, shift, ctx).as_laurent();
  long best = std::numeric_limits<long>::max();
  for (const auto& [e, c] : shifted.terms()) {
    long d = 0;
    for (long x : e) d += x;
    best = std::min(best, d);
  }
  return best;
}

long valuation_E0(const LaurentPolynomial& p) {
  if (p.is_zero()) throw Error("valuation of the zero polynomial");
  return -p.total_degree();
}

IntMatrix nu_matrix(const BlowupConfig& cfg) {
  Seed base = build_base_seed(cfg.n);
  if (cfg.points.size() != cfg.n + 2) throw Error("blow-up needs n + 2 points");
  IntMatrix nu(cfg.n + 3, cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    LaurentPolynomial x = *base.ledger()[i].as_laurent();
    nu(0, i) = -valuation_E0(x);
    for (std::size_t j = 0; j < cfg.points.size(); ++j) nu(j + 1, i) = -multiplicity_at_point(x, cfg.points[j]);
  }
  return nu;
}

LiftedSeed lifted_seed(const BlowupConfig& cfg) {
  Seed base = build_base_seed(cfg.n);
  IntMatrix nu = nu_matrix(cfg);
  const IntMatrix& b = base.matrix().b;
  IntMatrix lb = stack_rows(b, -(nu * b));

  std::size_t n = cfg.n;
  std::vector<std::string> labels, names;
  Grading grading;
  grading.rank = n + 3;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    names.push_back("x" + std::to_string(i + 1));
    grading.degrees[names.back()] = nu.column(i);
  }
  for (std::size_t j = 0; j < n + 3; ++j) {
    labels.push_back(std::to_string(n + 1 + j));
    names.push_back("E" + std::to_string(j));
    Degree unit(n + 3, 0);
    unit[j] = 1;
    grading.degrees[names.back()] = unit;
  }
  Seed lifted(labels, ExchangeMatrix{lb, base.matrix().mutable_vertices}, names);
  if (!grading_is_compatible(lifted, grading).compatible()) {
    throw Error("lifted grading is not compatible with the lifted exchange matrix");
  }
  return LiftedSeed{std::move(base), std::move(nu), std::move(lb), std::move(lifted), std::move(grading)};
}

}  // namespace mutalg
