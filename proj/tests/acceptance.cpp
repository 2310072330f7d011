// One line per acceptance criterion; exit status 1 when any line is FAIL.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "mutalg/charts.hpp"
#include "mutalg/charts_io.hpp"
#include "mutalg/corpus.hpp"
#include "mutalg/error.hpp"
#include "mutalg/expr.hpp"
#include "mutalg/graded.hpp"
#include "mutalg/lifting.hpp"
#include "mutalg/seed_io.hpp"
#include "properties.hpp"

using namespace mutalg;
using json = nlohmann::json;

namespace {

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 for none
  std::function<std::string()> body;  // returns "" on success, else the reason
};

const json& input(const std::string& id, const std::string& name) {
  static const auto cases = load_corpus();
  for (const auto& c : cases) {
    if (c.id == id) return c.doc.at("inputs").at(name);
  }
  throw Error("missing corpus case " + id);
}

std::string expect_eq(const RationalFunction& got, const std::string& want_text, const std::string& what) {
  RationalFunction want = parse_expr(want_text, got.context());
  if (got == want) return "";
  return what + ": computed " + format_expr(got) + ", expected " + want_text;
}

Seed rank2(long a, long b) {
  ExchangeMatrix m;
  m.b = IntMatrix{{0, -b}, {a, 0}};
  m.mutable_vertices = {0, 1};
  return Seed({"1", "2"}, m, {"x1", "x2"});
}

std::string sl3_identity() {
  SeedDocument d = seed_from_json(input("sl3", "seed"));
  Seed m = seed_mutate(d.seed, d.seed.vertex("2"));
  return expect_eq(m.ledger()[1], "c", "mu_2");
}

std::string cubic_ix() {
  SeedDocument d = seed_from_json(input("cubic_ix", "seed"));
  const Seed& s = d.seed;
  std::size_t v6 = s.vertex("6"), v7 = s.vertex("7");
  RationalFunction t9 = seed_mutate(s, v6).ledger()[v6];
  RationalFunction t10 = seed_mutate(s, v7).ledger()[v7];
  const VariableContext& c = s.ambient();
  if (c.size() != 9) return "ambient context has " + std::to_string(c.size()) + " variables";
  std::string e;
  if (!(e = expect_eq(t9, "(T5*T11 + T1*T2*T7*T8)/T6", "mu_6")).empty()) return e;
  RationalFunction rel9 = parse_expr("T6", c) * t9 - parse_expr("T1*T2*T7*T8 + T5*T11", c);
  if (!rel9.is_zero()) return "T6 T9 relation leaves " + format_expr(rel9);
  if (!(e = expect_eq(t10, "(T1*T4*T8^2 + T3*T6*T11)/T7", "mu_7")).empty()) return e;
  RationalFunction rel10 = parse_expr("T7", c) * t10 - parse_expr("T1*T4*T8^2 + T3*T6*T11", c);
  if (!rel10.is_zero()) return "T7 T10 relation leaves " + format_expr(rel10);
  Seed both = mutate_sequence(s, {v6, v7});
  RationalFunction want = t9 * t10 - parse_expr("T1*T2*T3*T8*T11", c);
  if (!(both.ledger()[v7] == want)) return "mu_7 mu_6 vertex 7 is " + format_expr(both.ledger()[v7]);
  return "";
}

std::string rank2_relations() {
  for (auto [a, b] : {std::pair{1L, 1L}, {2L, 1L}, {2L, 3L}}) {
    Seed s = rank2(a, b);
    const VariableContext& c = s.ambient();
    std::string sa = std::to_string(a), sb = std::to_string(b);
    RationalFunction x3 = seed_mutate(s, 0).ledger()[0];
    RationalFunction x4 = seed_mutate(s, 1).ledger()[1];
    std::string tag = "(" + sa + "," + sb + ") ";
    std::string e;
    if (!(e = expect_eq(x3, "(1 + x2^" + sa + ")/x1", tag + "mu_1")).empty()) return e;
    if (!(e = expect_eq(x4, "(1 + x1^" + sb + ")/x2", tag + "mu_2")).empty()) return e;
    // phi = (x1, x2, x3, x4) substituted into both defining relations.
    RationalFunction r1 = parse_expr("x1", c) * x3 - parse_expr("1 + x2^" + sa, c);
    RationalFunction r2 = parse_expr("x2", c) * x4 - parse_expr("1 + x1^" + sb, c);
    if (!r1.is_zero() || !r2.is_zero()) return tag + "phi does not satisfy the relations";
  }
  return "";
}

std::string pentagon() {
  Seed s = rank2(1, 1);
  Seed cur = s;
  std::vector<RationalFunction> seen;
  auto note = [&](const RationalFunction& f) {
    for (const auto& g : seen) {
      if (g == f) return;
    }
    seen.push_back(f);
  };
  for (const auto& f : s.ledger()) note(f);
  for (int i = 0; i < 10; ++i) {
    cur = seed_mutate(cur, static_cast<std::size_t>(i % 2));
    for (const auto& f : cur.ledger()) note(f);
    if (i == 4 && !(cur.ledger()[0] == s.ledger()[1] && cur.ledger()[1] == s.ledger()[0])) {
      return "no vertex swap after 5 mutations";
    }
  }
  if (!(cur.ledger() == s.ledger()) || !(cur.matrix().b == s.matrix().b)) return "seed not restored after 10";
  if (seen.size() != 5) return std::to_string(seen.size()) + " distinct cluster variables";
  return "";
}

std::string hirzebruch_table() {
  MSAPresentation p = presentation_from_json(input("hirzebruch_blowup", "charts"));
  std::vector<Rational> l{Rational(2), Rational(3)};
  const std::vector<std::pair<std::string, bool>> table{
      {"1", true}, {"x", true}, {"1/x", true}, {"y", true}, {"z", true}, {"1/y", false}, {"(x + 2)/y", false},
      {"(x + 3)/y", false}, {"y^(-2)*(x + 2)^2*(x + 3)^2", true}, {"y^(-2)*(x + 2)^2*(x + 3)", false},
      {"y*z", true}, {"x^(-3)*y^(-1)*(x + 2)*(x + 3)*(x - 1) + y^2", true}};
  for (const auto& [text, member] : table) {
    RationalFunction f = parse_query(p, text);
    bool got = msa_membership(p, f).member;
    if (got != member || divisibility_oracle(f, l) != member) return "table row " + text;
  }
  std::mt19937_64 rng(kDefaultPrngSeed);
  std::uniform_int_distribution<long> co(-4, 4), ny(-2, 2), nx(-2, 2), coin(0, 1);
  const VariableContext& c = p.reference.ctx;
  auto q = LaurentPolynomial::constant(c, 1) * parse_laurent("(x + 2)*(x + 3)", c);
  std::size_t members = 0;
  for (int t = 0; t < 200; ++t) {
    LaurentPolynomial f(c);
    for (int k = 0; k < 3; ++k) {
      long n = ny(rng);
      LaurentPolynomial cn = LaurentPolynomial::monomial(c, {nx(rng), 0}, co(rng)) +
                             LaurentPolynomial::monomial(c, {nx(rng), 0}, co(rng));
      if (n < 0 && coin(rng)) cn = cn * q.pow(-n);
      f += cn * LaurentPolynomial::monomial(c, {0, n});
    }
    bool got = msa_membership(p, f).member;
    bool want = divisibility_oracle(f, l);
    members += want;
    if (got != want) return "random case " + to_string(f);
  }
  if (members == 0 || members == 200) return "random cases do not exercise both outcomes";
  return "";
}

std::string schubert_table() {
  SeedDocument d = seed_from_json(input("schubert_intersections", "seed"));
  const std::vector<std::string> witnesses{"a", "b", "a*c - b", "c", "1/a", "1/b", "1/(a*c - b)"};
  // Rows: neither inverted, b inverted, ac - b inverted, both inverted.
  const std::vector<std::pair<std::vector<bool>, std::vector<int>>> rows{
      {{true, false, true}, {1, 1, 1, 1, 0, 0, 0}},
      {{true, false, false}, {1, 1, 1, 1, 0, 1, 0}},
      {{false, false, true}, {1, 1, 1, 1, 0, 0, 1}},
      {{false, false, false}, {1, 1, 1, 1, 0, 1, 1}}};
  for (const auto& [ni, want] : rows) {
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      bool got = upper_membership(d.seed, parse_seed_query(d.seed, witnesses[i]), ni).member;
      if (got != (want[i] == 1)) return "entry for " + witnesses[i];
    }
  }
  return "";
}

std::string lifting() {
  LiftedSeed two = lifted_seed(BlowupConfig::standard(2));
  if (!(two.nu == IntMatrix{{1, 2}, {0, 0}, {-1, 0}, {0, -1}, {-1, 0}})) return "nu for n=2:\n" + format_matrix(two.nu);
  for (std::size_t n = 2; n <= 5; ++n) {
    LiftedSeed ls = lifted_seed(BlowupConfig::standard(n));
    const IntMatrix& b = ls.base.matrix().b;
    IntMatrix minus_nu_b = -(ls.nu * b);
    for (std::size_t r = 0; r < ls.lifted_b.rows(); ++r) {
      for (std::size_t col = 0; col < b.cols(); ++col) {
        long want = r < b.rows() ? b(r, col) : minus_nu_b(r - b.rows(), col);
        if (ls.lifted_b(r, col) != want) return "lifted matrix entry for n=" + std::to_string(n);
      }
    }
    if (!grading_is_compatible(ls.lifted, ls.grading).compatible()) return "incompatible for n=" + std::to_string(n);
  }
  return "";
}

std::string property_suites() {
  using namespace properties;
  std::ostringstream why;
  for (const auto& [name, o] : std::vector<std::pair<std::string, Outcome>>{
           {"involution", mutation_involution(kDefaultPrngSeed)},
           {"preservation", structure_preservation(kDefaultPrngSeed)},
           {"laurent", laurent_regression(kDefaultPrngSeed)},
           {"bridge", datum_bridge(kDefaultPrngSeed)},
           {"valuation", valuation_additivity(kDefaultPrngSeed)},
           {"multiplicity", multiplicity_additivity(kDefaultPrngSeed)},
           {"closure", membership_closure(kDefaultPrngSeed)},
           {"graded", graded_compatibility(kDefaultPrngSeed)}}) {
    if (!o.ok) why << name << ": " << o.detail << "; ";
  }
  return why.str();
}

std::string validation_reports() {
  std::vector<std::pair<std::string, MSAPresentation>> ps;
  ps.emplace_back("hirzebruch", presentation_from_json(input("hirzebruch_blowup", "charts")));
  for (const char* id : {"sl3", "sl4", "cubic_ix", "cubic_viii"}) {
    SeedDocument d = seed_from_json(input("msa_validation", id));
    ps.emplace_back(id, upper_presentation(d.seed, d.noninvertible));
  }
  for (auto [a, b] : {std::pair{1L, 1L}, {2L, 1L}}) {
    Seed s = rank2(a, b);
    ps.emplace_back("rank2", upper_presentation(s, {false, false}));
  }
  std::size_t surrogate = 0;
  for (const auto& [name, p] : ps) {
    for (ConeReading reading : {ConeReading::ChartCoordinates, ConeReading::Literal}) {
      ValidationReport r = validate_presentation(p, reading);
      for (const auto& c : p.charts) {
        for (const char* check : {"u_primitive", "g_in_u_perp", "h_is_g_pow_k", "admissible", "g_irreducible"}) {
          const Check* k = r.find(c.name + "." + check);
          if (!k || k->verdict != Verdict::Pass) return name + " " + c.name + "." + check;
        }
        const Check* rays = r.find(c.name + ".divisor_rays");
        if (!rays || (rays->verdict != Verdict::SurrogatePass && rays->verdict != Verdict::SurrogateFail)) {
          return name + " " + c.name + ".divisor_rays not reported as a surrogate";
        }
        ++surrogate;
      }
      const Check* h = r.find("height_one");
      if (!h || h->verdict != Verdict::Unchecked) return name + " height_one is not UNCHECKED";
    }
  }
  return surrogate > 0 ? "" : "no surrogate outcomes";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "SL3 mutation at vertex 2 gives c", 0.1, sl3_identity},
      {2, "cubic (ix) exchange identities", 1.0, cubic_ix},
      {3, "rank-2 relations for (1,1), (2,1), (2,3)", 1.0, rank2_relations},
      {4, "pentagon: restored after 10 mutations, 5 variables", 0.5, pentagon},
      {5, "Hirzebruch blow-up table and 200 random cases vs oracle", 5.0, hirzebruch_table},
      {6, "SL3 four-ring membership matrix", 1.0, schubert_table},
      {7, "lifting: nu for n=2, block matrix, compatibility n=2..5", 2.0, lifting},
      {8, "property suites", 60.0, property_suites},
      {9, "validation reports: datum checks, surrogates, height one unchecked", 0.0, validation_reports},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.body();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && c.limit_seconds > 0 && secs >= c.limit_seconds) why = "too slow";
    bool ok = why.empty();
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << "  (" << std::fixed
              << std::setprecision(3) << secs << " s";
    if (c.limit_seconds > 0) std::cout << ", limit " << std::setprecision(1) << c.limit_seconds << " s";
    std::cout << ")";
    if (!ok) std::cout << "  -- " << why;
    std::cout << '\n';
  }
  return all ? 0 : 1;
}
