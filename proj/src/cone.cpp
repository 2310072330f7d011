#include "mutalg/cone.hpp"

#include <algorithm>
#include <set>

#include "mutalg/error.hpp"

namespace mutalg {

Cone::Cone(std::size_t rank, std::vector<LatticeVector> generators) : rank_(rank) {
  for (LatticeVector& g : generators) {
    if (g.rank() != rank) throw Error("cone generator has the wrong rank");
    if (g.is_zero()) throw Error("cone generators must be nonzero");
    generators_.push_back(std::move(g));
  }
}

Cone Cone::coordinate(std::size_t rank, const std::vector<std::size_t>& indices) {
  std::vector<LatticeVector> gens;
  for (std::size_t i : indices) gens.push_back(LatticeVector::unit(rank, i));
  return Cone(rank, std::move(gens));
}

namespace {

// Scale so the first nonzero coefficient has absolute value 1; inequalities
// keep their direction.
void canonicalize(LinearConstraint& c) {
  auto it = std::find_if(c.coeffs.begin(), c.coeffs.end(), [](const Rational& q) { return q != 0; });
  if (it == c.coeffs.end()) return;
  Rational scale = 1 / abs(*it);
  if (c.equality && *it < 0) scale = -scale;
  for (Rational& q : c.coeffs) q *= scale;
  c.constant *= scale;
}

bool all_zero(const LinearConstraint& c) {
  return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& q) { return q == 0; });
}

struct ConstraintLess {
  bool operator()(const LinearConstraint& a, const LinearConstraint& b) const {
    if (a.equality != b.equality) return a.equality < b.equality;
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
    return a.constant < b.constant;
  }
};

}  // namespace

bool is_feasible(std::vector<LinearConstraint> constraints, std::size_t variables) {
  for (const LinearConstraint& c : constraints) {
    if (c.coeffs.size() != variables) throw Error("constraint has the wrong number of variables");
  }

  // Gaussian elimination of the equalities.
  while (true) {
    auto eq = std::find_if(constraints.begin(), constraints.end(),
                           [](const LinearConstraint& c) { return c.equality; });
    if (eq == constraints.end()) break;
    LinearConstraint pivot = *eq;
    constraints.erase(eq);
    auto nz = std::find_if(pivot.coeffs.begin(), pivot.coeffs.end(), [](const Rational& q) { return q != 0; });
    if (nz == pivot.coeffs.end()) {
      if (pivot.constant != 0) return false;
      continue;
    }
    std::size_t j = static_cast<std::size_t>(nz - pivot.coeffs.begin());
    for (LinearConstraint& c : constraints) {
      if (c.coeffs[j] == 0) continue;
      Rational factor = c.coeffs[j] / pivot.coeffs[j];
      for (std::size_t l = 0; l < variables; ++l) c.coeffs[l] -= factor * pivot.coeffs[l];
      c.constant -= factor * pivot.constant;
    }
  }

  // Fourier-Motzkin on the remaining inequalities.
  std::set<LinearConstraint, ConstraintLess> current;
  for (LinearConstraint& c : constraints) {
    if (all_zero(c)) {
      if (c.constant < 0) return false;
      continue;
    }
    canonicalize(c);
    current.insert(std::move(c));
  }
  for (std::size_t j = 0; j < variables; ++j) {
    std::vector<LinearConstraint> pos, neg;
    std::set<LinearConstraint, ConstraintLess> next;
    for (const LinearConstraint& c : current) {
      if (c.coeffs[j] > 0) {
        pos.push_back(c);
      } else if (c.coeffs[j] < 0) {
        neg.push_back(c);
      } else {
        next.insert(c);
      }
    }
    for (const LinearConstraint& p : pos) {
      for (const LinearConstraint& n : neg) {
        LinearConstraint combined{std::vector<Rational>(variables), 0, false};
        Rational wp = -n.coeffs[j];
        Rational wn = p.coeffs[j];
        for (std::size_t l = 0; l < variables; ++l) combined.coeffs[l] = wp * p.coeffs[l] + wn * n.coeffs[l];
        combined.coeffs[j] = 0;
        combined.constant = wp * p.constant + wn * n.constant;
        if (all_zero(combined)) {
          if (combined.constant < 0) return false;
          continue;
        }
        canonicalize(combined);
        next.insert(std::move(combined));
      }
    }
    current = std::move(next);
  }
  return true;
}

bool cone_contains(const Cone& cone, const LatticeVector& v) {
  if (cone.rank() != v.rank()) throw Error("cone and vector have different ranks");
  const auto& gens = cone.generators();
  const std::size_t n = gens.size();
  std::vector<LinearConstraint> constraints;
  for (std::size_t i = 0; i < cone.rank(); ++i) {
    LinearConstraint row{std::vector<Rational>(n), Rational(-v[i]), true};
    for (std::size_t j = 0; j < n; ++j) row.coeffs[j] = gens[j][i];
    constraints.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < n; ++j) {
    LinearConstraint nonneg{std::vector<Rational>(n), 0, false};
    nonneg.coeffs[j] = 1;
    constraints.push_back(std::move(nonneg));
  }
  return is_feasible(std::move(constraints), n);
}

bool is_strongly_convex(const Cone& cone) {
  // A line exists iff some nonzero lambda >= 0 has sum_j lambda_j g_j = 0.
  const auto& gens = cone.generators();
  const std::size_t n = gens.size();
  if (n == 0) return true;
  std::vector<LinearConstraint> constraints;
  for (std::size_t i = 0; i < cone.rank(); ++i) {
    LinearConstraint row{std::vector<Rational>(n), 0, true};
    for (std::size_t j = 0; j < n; ++j) row.coeffs[j] = gens[j][i];
    constraints.push_back(std::move(row));
  }
  LinearConstraint total{std::vector<Rational>(n, Rational(1)), -1, true};
  constraints.push_back(std::move(total));
  for (std::size_t j = 0; j < n; ++j) {
    LinearConstraint nonneg{std::vector<Rational>(n), 0, false};
    nonneg.coeffs[j] = 1;
    constraints.push_back(std::move(nonneg));
  }
  return !is_feasible(std::move(constraints), n);
}

bool dual_contains(const Cone& cone, const LatticeVector& m) { return dual_contains(cone, m.entries()); }

bool dual_contains(const Cone& cone, const Exponent& m) {
  if (cone.rank() != m.size()) throw Error("cone and vector have different ranks");
  return std::all_of(cone.generators().begin(), cone.generators().end(),
                     [&](const LatticeVector& g) { return pairing(g, m) >= 0; });
}

}  // namespace mutalg
