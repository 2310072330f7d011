#include "mutalg/graded.hpp"

#include "mutalg/error.hpp"

namespace mutalg {

const Degree& Grading::of(const std::string& name) const {
  auto it = degrees.find(name);
  if (it == degrees.end()) throw Error("variable '" + name + "' has no degree");
  if (it->second.size() != rank) throw Error("degree of '" + name + "' has the wrong length");
  return it->second;
}

namespace {

Degree weighted(const Exponent& e, const VariableContext& ctx, const Grading& g) {
  Degree d(g.rank, 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    const Degree& di = g.of(ctx.name(i));
    for (std::size_t r = 0; r < g.rank; ++r) d[r] += e[i] * di[r];
  }
  return d;
}

Degree accumulate(const Seed& s, const Grading& g, std::size_t k, bool positive) {
  auto c = s.matrix().column_of(k);
  if (!c) throw Error("vertex '" + s.labels().at(k) + "' is frozen");
  auto names = s.names();
  Degree d(g.rank, 0);
  for (std::size_t j = 0; j < s.size(); ++j) {
    long b = s.matrix().b(j, *c);
    long w = positive ? std::max(0L, b) : std::max(0L, -b);
    if (w == 0) continue;
    const Degree& dj = g.of(names[j]);
    for (std::size_t r = 0; r < g.rank; ++r) d[r] += w * dj[r];
  }
  return d;
}

}  // namespace

DegreeResult degree_of(const LaurentPolynomial& f, const Grading& g) {
  if (f.is_zero()) throw Error("the zero polynomial has no degree");
  DegreeResult out;
  const Exponent* first = nullptr;
  Degree common;
  for (const auto& [e, c] : f.terms()) {
    Degree d = weighted(e, f.context(), g);
    if (!first) {
      first = &e;
      common = std::move(d);
    } else if (d != common) {
      out.witnesses = {*first, e};
      return out;
    }
  }
  out.degree = std::move(common);
  return out;
}

DegreeResult degree_of(const RationalFunction& f, const Grading& g) {
  DegreeResult num = degree_of(f.numerator(), g);
  if (!num.homogeneous()) return num;
  DegreeResult den = degree_of(f.denominator(), g);
  if (!den.homogeneous()) return den;
  for (std::size_t r = 0; r < g.rank; ++r) (*num.degree)[r] -= (*den.degree)[r];
  return num;
}

bool CompatibilityReport::compatible() const {
  for (const auto& v : vertices) {
    if (!v.compatible()) return false;
  }
  return true;
}

CompatibilityReport grading_is_compatible(const Seed& s, const Grading& g) {
  CompatibilityReport out;
  for (std::size_t k : s.matrix().mutable_vertices) {
    out.vertices.push_back({k, accumulate(s, g, k, true), accumulate(s, g, k, false)});
  }
  return out;
}

Degree mutated_degree(const Seed& s, const Grading& g, std::size_t k) {
  Degree plus = accumulate(s, g, k, true);
  Degree minus = accumulate(s, g, k, false);
  if (plus != minus) {
    throw Error("grading is not compatible at vertex '" + s.labels().at(k) + "': " + format_degree(plus) +
                " vs " + format_degree(minus));
  }
  const Degree& dk = g.of(s.names()[k]);
  for (std::size_t r = 0; r < g.rank; ++r) plus[r] -= dk[r];
  return plus;
}

std::pair<Seed, Grading> graded_mutate(const Seed& s, const Grading& g, std::size_t k) {
  Degree d = mutated_degree(s, g, k);
  Seed next = seed_mutate(s, k);
  Grading h = g;
  h.degrees[next.names()[k]] = std::move(d);
  return {std::move(next), std::move(h)};
}

std::string format_degree(const Degree& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

}  // namespace mutalg
