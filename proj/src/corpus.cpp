#include "mutalg/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <random>
#include <thread>

#include "mutalg/charts.hpp"
#include "mutalg/charts_io.hpp"
#include "mutalg/error.hpp"
#include "mutalg/expr.hpp"
#include "mutalg/graded.hpp"
#include "mutalg/lifting.hpp"
#include "mutalg/poly.hpp"
#include "mutalg/seed_io.hpp"
#include "mutalg/substitute.hpp"

namespace mutalg {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_corpus();
}

using nlohmann::json;

bool CaseReport::ok() const {
  return std::none_of(results.begin(), results.end(), [](const AssertionResult& r) { return r.verdict == Verdict::Fail; });
}

bool CorpusReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseReport& c) { return c.ok(); });
}

std::size_t CorpusReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& c : cases) {
    for (const auto& r : c.results) n += r.verdict == v;
  }
  return n;
}

std::string CorpusReport::to_text() const {
  std::string out;
  for (const auto& c : cases) {
    out += "== " + c.id + "\n";
    for (const auto& r : c.results) {
      out += std::string(verdict_name(r.verdict)) + "  " + r.case_id + "#" + std::to_string(r.index) + " " + r.op;
      if (!r.label.empty()) out += " " + r.label;
      out += "  [" + r.provenance + "]";
      if (!r.detail.empty()) out += "  " + r.detail;
      out += "\n";
      if (r.verdict == Verdict::Fail) {
        out += "      expected: " + r.expected + "\n      computed: " + r.computed + "\n";
      }
    }
  }
  out += "summary: " + std::to_string(count(Verdict::Pass)) + " PASS, " + std::to_string(count(Verdict::Fail)) +
         " FAIL, " + std::to_string(count(Verdict::Unchecked)) + " UNCHECKED, " +
         std::to_string(count(Verdict::SurrogatePass)) + " SURROGATE-PASS, " +
         std::to_string(count(Verdict::SurrogateFail)) + " SURROGATE-FAIL\n";
  return out;
}

std::string CorpusReport::to_jsonl() const {
  std::string out;
  for (const auto& c : cases) {
    for (const auto& r : c.results) {
      json j = {{"case", r.case_id},         {"index", r.index},       {"op", r.op},
                {"label", r.label},          {"verdict", verdict_name(r.verdict)},
                {"provenance", r.provenance}, {"anchor", r.anchor},     {"expected", r.expected},
                {"computed", r.computed},    {"detail", r.detail}};
      out += j.dump() + "\n";
    }
  }
  return out;
}

CorpusCase parse_case(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("corpus file '" + origin + "' is not valid JSON: " + e.what());
  }
  if (!doc.contains("id") || !doc.contains("assertions")) throw Error("corpus file '" + origin + "' lacks id or assertions");
  CorpusCase c;
  c.id = doc.at("id").get<std::string>();
  c.title = doc.value("title", "");
  c.tags = doc.value("tags", std::vector<std::string>{});
  for (const auto& a : doc.at("assertions")) {
    if (!a.contains("provenance") || !a.contains("anchor")) {
      throw Error("corpus case '" + c.id + "' has an assertion without provenance or anchor");
    }
    std::string prov = a.at("provenance").get<std::string>();
    if (prov != "reference" && prov != "derived" && prov != "trivial") {
      throw Error("corpus case '" + c.id + "' has unknown provenance '" + prov + "'");
    }
    if (a.at("anchor").get<std::string>().empty()) throw Error("corpus case '" + c.id + "' has an empty anchor");
  }
  c.doc = std::move(doc);
  return c;
}

std::vector<CorpusCase> load_corpus_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<CorpusCase> out;
  if (!fs::is_directory(dir)) throw Error("corpus directory '" + dir + "' does not exist");
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".json") out.push_back(parse_case(read_text_file(e.path().string()), e.path().string()));
  }
  std::sort(out.begin(), out.end(), [](const CorpusCase& a, const CorpusCase& b) { return a.id < b.id; });
  return out;
}

std::vector<CorpusCase> load_corpus() {
  if (const char* dir = std::getenv("MUTALG_CORPUS_DIR"); dir && *dir) return load_corpus_dir(dir);
  std::vector<CorpusCase> out;
  for (const auto& [name, text] : detail::embedded_corpus()) out.push_back(parse_case(std::string(text), std::string(name)));
  std::sort(out.begin(), out.end(), [](const CorpusCase& a, const CorpusCase& b) { return a.id < b.id; });
  return out;
}

bool divisibility_oracle(const RationalFunction& f, const std::vector<Rational>& lambdas) {
  const VariableContext& ctx = f.context();
  if (ctx.size() != 2) throw Error("the divisibility oracle works over (x, y)");
  auto lp = f.as_laurent();
  if (!lp) return false;
  std::map<long, LaurentPolynomial> by_y;
  for (const auto& [e, c] : lp->terms()) {
    auto it = by_y.try_emplace(e[1], ctx).first;
    it->second.add_term({e[0], 0}, c);
  }
  LaurentPolynomial base = LaurentPolynomial::constant(ctx, 1);
  for (const Rational& l : lambdas) {
    base = base * (LaurentPolynomial::variable(ctx, 0) + LaurentPolynomial::constant(ctx, l));
  }
  for (const auto& [n, c] : by_y) {
    if (n >= 0) continue;
    LaurentPolynomial shifted = c.shifted({-c.min_exponent()[0], 0});
    if (!exact_divide(shifted, base.pow(-n))) return false;
  }
  return true;
}

namespace {

std::string render_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows.dump();
}

IntMatrix matrix_from(const json& j) {
  std::vector<std::vector<long>> rows;
  for (const auto& r : j) rows.push_back(r.get<std::vector<long>>());
  return IntMatrix::from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

class CaseRunner {
 public:
  CaseRunner(const CorpusCase& c, const RunOptions& opts) : case_(c), opts_(opts) {}

  CaseReport run() {
    auto start = std::chrono::steady_clock::now();
    CaseReport report{case_.id, {}, 0};
    try {
      load_inputs();
      load_bindings();
    } catch (const std::exception& e) {
      AssertionResult r;
      r.case_id = case_.id;
      r.op = "load";
      r.provenance = "trivial";
      r.detail = std::string("case failed to load: ") + e.what();
      report.results.push_back(r);
      return report;
    }
    const json& as = case_.doc.at("assertions");
    for (std::size_t i = 0; i < as.size(); ++i) run_assertion(i, as[i], report.results);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

 private:
  const CorpusCase& case_;
  RunOptions opts_;
  std::map<std::string, SeedDocument> seeds_;
  std::map<std::string, MSAPresentation> charts_;
  // Per input: binding names and values over that input's expression context.
  std::map<std::string, std::vector<std::pair<std::string, RationalFunction>>> bindings_;

  void load_inputs() {
    const json inputs = case_.doc.value("inputs", json::object());
    for (const auto& [name, doc] : inputs.items()) {
      if (doc.contains("vertices")) {
        seeds_.emplace(name, seed_from_json(doc));
      } else if (doc.contains("reference")) {
        charts_.emplace(name, presentation_from_json(doc));
      } else {
        throw Error("input '" + name + "' is neither a seed nor a chart system");
      }
    }
  }

  const SeedDocument& seed(const json& a) const {
    std::string name = a.value("input", "seed");
    auto it = seeds_.find(name);
    if (it == seeds_.end()) throw Error("no seed input named '" + name + "'");
    return it->second;
  }

  const MSAPresentation& charts(const json& a) const {
    std::string name = a.value("input", "charts");
    auto it = charts_.find(name);
    if (it == charts_.end()) throw Error("no chart input named '" + name + "'");
    return it->second;
  }

  std::string input_name(const json& a) const {
    if (a.contains("input")) return a.at("input").get<std::string>();
    return seeds_.count("seed") ? "seed" : "charts";
  }

  std::vector<std::size_t> sequence(const Seed& s, const json& a) const {
    std::vector<std::size_t> out;
    for (const auto& v : a.value("sequence", json::array())) {
      out.push_back(resolve_vertex(s, v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>())));
    }
    return out;
  }

  static std::string label(const json& v) { return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>()); }

  // Parses over the input's expression context with its bindings in scope.
  RationalFunction parse_in(const std::string& input, const std::string& text) const {
    VariableContext base;
    std::vector<std::string> names;
    std::vector<RationalFunction> images;
    if (auto it = seeds_.find(input); it != seeds_.end()) {
      base = it->second.seed.ambient();
      images = coordinate_images(base);
    } else if (auto ct = charts_.find(input); ct != charts_.end()) {
      base = ct->second.reference.ctx;
      images = coordinate_images(base);
      for (const auto& [k, v] : ct->second.aliases) {
        names.push_back(k);
        images.push_back(v);
      }
    } else {
      throw Error("no input named '" + input + "'");
    }
    if (auto bt = bindings_.find(input); bt != bindings_.end()) {
      for (const auto& [k, v] : bt->second) {
        names.push_back(k);
        images.push_back(v);
      }
    }
    if (names.empty()) return parse_expr(text, base);
    return substitute(parse_expr(text, base.extended(names)), images, base);
  }

  void load_bindings() {
    for (const auto& b : case_.doc.value("bindings", json::array())) {
      std::string input = input_name(b);
      std::string name = b.at("name").get<std::string>();
      RationalFunction value = [&] {
        if (b.contains("expr")) return parse_in(input, b.at("expr").get<std::string>());
        const SeedDocument& sd = seed(b);
        Seed s = mutate_sequence(sd.seed, sequence(sd.seed, b));
        return s.ledger()[resolve_vertex(s, label(b.at("vertex")))];
      }();
      bindings_[input].emplace_back(name, value);
    }
  }

  void run_assertion(std::size_t index, const json& a, std::vector<AssertionResult>& out) {
    AssertionResult r;
    r.case_id = case_.id;
    r.index = index;
    r.op = a.value("op", "");
    r.label = a.value("label", "");
    r.provenance = a.value("provenance", "");
    r.anchor = a.value("anchor", "");
    if (a.contains("expected")) r.expected = a.at("expected").is_string() ? a.at("expected").get<std::string>() : a.at("expected").dump();
    try {
      if (r.op == "validate") {
        validate(a, r, out);
        return;
      }
      bool ok = dispatch(a, r);
      r.verdict = ok ? Verdict::Pass : Verdict::Fail;
    } catch (const std::exception& e) {
      r.verdict = Verdict::Fail;
      r.computed = std::string("error: ") + e.what();
    }
    out.push_back(std::move(r));
  }

  static bool expect_bool(const json& a, bool computed, AssertionResult& r) {
    r.computed = computed ? "true" : "false";
    return computed == a.at("expected").get<bool>();
  }

  bool dispatch(const json& a, AssertionResult& r) {
    const std::string& op = r.op;
    if (op == "mutate") {
      const SeedDocument& sd = seed(a);
      Seed s = mutate_sequence(sd.seed, sequence(sd.seed, a));
      const RationalFunction& got = s.ledger()[resolve_vertex(s, label(a.at("vertex")))];
      r.computed = format_expr(got);
      return got == parse_in(input_name(a), a.at("expected").get<std::string>());
    }
    if (op == "identity") {
      std::string in = input_name(a);
      RationalFunction lhs = parse_in(in, a.at("lhs").get<std::string>());
      RationalFunction rhs = parse_in(in, a.at("rhs").get<std::string>());
      r.expected = a.at("lhs").get<std::string>() + " == " + a.at("rhs").get<std::string>();
      r.computed = format_expr(lhs - rhs) + " == 0";
      return lhs == rhs;
    }
    if (op == "exchange_binomials") {
      const Seed& s = seed(a).seed;
      auto [plus, minus] = exchange_binomials(s, resolve_vertex(s, label(a.at("vertex"))));
      r.computed = json::array({format_expr(plus), format_expr(minus)}).dump();
      VariableContext ctx = s.cluster_context();
      return plus == parse_laurent(a.at("expected")[0].get<std::string>(), ctx) &&
             minus == parse_laurent(a.at("expected")[1].get<std::string>(), ctx);
    }
    if (op == "matrix") {
      const SeedDocument& sd = seed(a);
      Seed s = mutate_sequence(sd.seed, sequence(sd.seed, a));
      r.computed = render_matrix(s.matrix().b);
      return s.matrix().b == matrix_from(a.at("expected"));
    }
    if (op == "laurent") {
      const SeedDocument& sd = seed(a);
      auto ks = sequence(sd.seed, a);
      Seed s = sd.seed;
      std::size_t checked = 0;
      bool all = true;
      auto check = [&](const Seed& t) {
        for (const auto& f : t.ledger()) {
          ++checked;
          if (!f.as_laurent()) all = false;
        }
      };
      check(s);
      for (std::size_t k : ks) {
        s = seed_mutate(s, k);
        check(s);
      }
      r.detail = std::to_string(checked) + " ledger entries checked";
      return expect_bool(a, all, r);
    }
    if (op == "predicate") {
      const SeedDocument& sd = seed(a);
      Seed s = mutate_sequence(sd.seed, sequence(sd.seed, a));
      std::string prop = a.at("property").get<std::string>();
      bool v;
      if (prop == "maximal_rank") {
        v = is_maximal_rank(s);
      } else if (prop == "primitive") {
        v = is_primitive_seed(s);
      } else if (prop == "skew_symmetrizable") {
        auto d = is_skew_symmetrizable(s.matrix().principal_part());
        v = d.has_value();
        if (d) r.detail = "D = " + json(*d).dump();
      } else if (prop == "degenerate") {
        v = is_degenerate_direction(s, resolve_vertex(s, label(a.at("vertex"))));
      } else {
        throw Error("unknown property '" + prop + "'");
      }
      return expect_bool(a, v, r);
    }
    if (op == "skew_witness") {
      auto d = is_skew_symmetrizable(matrix_from(a.at("matrix")));
      r.computed = d ? json(*d).dump() : "null";
      if (a.at("expected").is_null()) return !d;
      return d && *d == a.at("expected").get<std::vector<long>>();
    }
    if (op == "ledger_permutation") {
      const SeedDocument& sd = seed(a);
      Seed s = mutate_sequence(sd.seed, sequence(sd.seed, a));
      bool same = true;
      std::string got;
      for (const auto& [from, to] : a.at("permutation").items()) {
        std::size_t i = resolve_vertex(s, from), j = resolve_vertex(sd.seed, to.get<std::string>());
        got += from + " -> " + format_expr(s.ledger()[i]) + "; ";
        if (!(s.ledger()[i] == sd.seed.ledger()[j])) same = false;
      }
      r.detail = got;
      return expect_bool(a, same, r);
    }
    if (op == "distinct_variables") {
      const SeedDocument& sd = seed(a);
      auto ks = sequence(sd.seed, a);
      std::vector<RationalFunction> seen;
      auto note = [&](const Seed& t) {
        for (std::size_t v : t.matrix().mutable_vertices) {
          if (std::find(seen.begin(), seen.end(), t.ledger()[v]) == seen.end()) seen.push_back(t.ledger()[v]);
        }
      };
      Seed s = sd.seed;
      note(s);
      for (std::size_t k : ks) {
        s = seed_mutate(s, k);
        note(s);
      }
      r.computed = std::to_string(seen.size());
      return static_cast<long>(seen.size()) == a.at("expected").get<long>();
    }
    if (op == "datum") {
      const Seed& s = seed(a).seed;
      SeedDatum d = seed_to_datum(s, resolve_vertex(s, label(a.at("vertex"))));
      std::size_t k = resolve_vertex(s, label(a.at("vertex")));
      const json& e = a.at("expected");
      json got = {{"u", d.datum.u.entries()}, {"h", format_expr(d.datum.h)}, {"basis_row", d.basis.row(k)}};
      r.computed = got.dump();
      return d.datum.u.entries() == e.at("u").get<std::vector<long>>() &&
             d.datum.h == parse_laurent(e.at("h").get<std::string>(), s.cluster_context()) &&
             d.basis.row(k) == e.at("basis_row").get<std::vector<long>>();
    }
    if (op == "datum_bridge") {
      const Seed& s = seed(a).seed;
      std::size_t k = resolve_vertex(s, label(a.at("vertex")));
      SeedDatum d = seed_to_datum(s, k);
      VariableContext ctx = s.cluster_context();
      auto [forward, inverse] = transition_from_datum(d.datum, ctx);
      RationalFunction pulled = substitute(LaurentPolynomial::monomial(ctx, d.basis.row(k)), forward, ctx);
      auto [plus, minus] = exchange_binomials(s, k);
      RationalFunction exchange = RationalFunction(plus + minus) / RationalFunction(LaurentPolynomial::variable(ctx, k));
      r.computed = format_expr(pulled);
      r.detail = "exchange relation gives " + format_expr(exchange);
      return expect_bool(a, pulled == exchange, r);
    }
    if (op == "chart_express") {
      const MSAPresentation& p = charts(a);
      std::size_t idx = chart_index(p, a.at("chart").get<std::string>());
      RationalFunction got = chart_express(p, idx, parse_in(input_name(a), a.at("expr").get<std::string>()));
      r.computed = format_expr(got);
      return got == parse_expr(a.at("expected").get<std::string>(), p.chart(idx).ctx);
    }
    if (op == "msa_member") {
      const MSAPresentation& p = charts(a);
      Membership m = msa_membership(p, parse_in(input_name(a), a.at("expr").get<std::string>()));
      if (auto f = m.failure()) r.detail = "fails " + f->chart_name + ": " + f->detail;
      return expect_bool(a, m.member, r);
    }
    if (op == "distinct_data") {
      const MSAPresentation& p = charts(a);
      bool distinct = true;
      for (std::size_t i = 0; i < p.transitions.size(); ++i) {
        for (std::size_t j = i + 1; j < p.transitions.size(); ++j) {
          if (p.transitions[i].datum.g == p.transitions[j].datum.g) distinct = false;
        }
      }
      return expect_bool(a, distinct, r);
    }
    if (op == "oracle_agreement") return oracle_agreement(a, r);
    if (op == "upper_member") {
      const SeedDocument& sd = seed(a);
      std::vector<bool> ni = noninvertible(sd, a);
      RationalFunction f = express_in_cluster(sd.seed, parse_in(input_name(a), a.at("expr").get<std::string>()));
      Membership m = upper_membership(sd.seed, f, ni);
      if (auto fl = m.failure()) r.detail = "fails " + fl->chart_name + ": " + fl->detail;
      return expect_bool(a, m.member, r);
    }
    if (op == "upper_matrix") {
      const SeedDocument& sd = seed(a);
      std::vector<RationalFunction> ws;
      for (const auto& w : a.at("witnesses")) {
        ws.push_back(express_in_cluster(sd.seed, parse_in(input_name(a), w.get<std::string>())));
      }
      json got = json::array(), want = json::array();
      for (const auto& row : a.at("rows")) {
        std::vector<bool> ni = noninvertible(sd, row);
        json line = json::array();
        for (const auto& w : ws) line.push_back(upper_membership(sd.seed, w, ni).member ? 1 : 0);
        got.push_back(line);
        want.push_back(row.at("expected"));
      }
      r.expected = want.dump();
      r.computed = got.dump();
      return got == want;
    }
    if (op == "grading_compatible") {
      const SeedDocument& sd = seed(a);
      if (!sd.grading) throw Error("seed has no grading");
      CompatibilityReport rep = grading_is_compatible(sd.seed, *sd.grading);
      for (const auto& v : rep.vertices) {
        r.detail += sd.seed.labels()[v.vertex] + ": " + format_degree(v.plus) + " vs " + format_degree(v.minus) + "; ";
      }
      return expect_bool(a, rep.compatible(), r);
    }
    if (op == "mutated_degree") {
      const SeedDocument& sd = seed(a);
      if (!sd.grading) throw Error("seed has no grading");
      Degree d = mutated_degree(sd.seed, *sd.grading, resolve_vertex(sd.seed, label(a.at("vertex"))));
      r.computed = json(d).dump();
      return d == a.at("expected").get<std::vector<long>>();
    }
    if (op == "homogeneous") {
      const SeedDocument& sd = seed(a);
      if (!sd.grading) throw Error("seed has no grading");
      Seed s = sd.seed;
      Grading g = *sd.grading;
      bool all = true;
      for (std::size_t k : sequence(sd.seed, a)) {
        auto next = graded_mutate(s, g, k);
        s = std::move(next.first);
        g = std::move(next.second);
        for (std::size_t v = 0; v < s.size(); ++v) {
          DegreeResult ledger_deg = degree_of(s.ledger()[v], *sd.grading);
          if (!ledger_deg.homogeneous() || *ledger_deg.degree != g.of(s.names()[v])) all = false;
        }
      }
      r.detail = "ledger degrees agree with the mutated grading";
      return expect_bool(a, all, r);
    }
    if (op == "lift_nu") {
      IntMatrix nu = nu_matrix(BlowupConfig::standard(a.at("n").get<std::size_t>()));
      r.computed = render_matrix(nu);
      return nu == matrix_from(a.at("expected"));
    }
    if (op == "lift_matrix") {
      LiftedSeed l = lifted_seed(BlowupConfig::standard(a.at("n").get<std::size_t>()));
      const IntMatrix& b = l.base.matrix().b;
      IntMatrix expect_blocks = stack_rows(b, -(l.nu * b));
      r.computed = render_matrix(l.lifted_b);
      r.detail = l.lifted_b == expect_blocks ? "blocks are (B; -nu B)" : "block structure differs";
      return l.lifted_b == expect_blocks && l.lifted_b == matrix_from(a.at("expected"));
    }
    if (op == "lift_ledger") {
      Seed base = build_base_seed(a.at("n").get<std::size_t>());
      const RationalFunction& got = base.ledger()[resolve_vertex(base, label(a.at("vertex")))];
      r.computed = format_expr(got);
      return got == parse_expr(a.at("expected").get<std::string>(), base.ambient());
    }
    if (op == "lift_compatible") {
      bool all = true;
      std::string detail;
      for (const auto& n : a.at("n")) {
        try {
          LiftedSeed l = lifted_seed(BlowupConfig::standard(n.get<std::size_t>()));
          for (std::size_t k : l.lifted.matrix().mutable_vertices) {
            auto next = graded_mutate(l.lifted, l.grading, k);
            if (!grading_is_compatible(next.first, next.second).compatible()) all = false;
          }
          detail += "n=" + std::to_string(n.get<long>()) + " ok; ";
        } catch (const Error& e) {
          all = false;
          detail += "n=" + std::to_string(n.get<long>()) + ": " + e.what() + "; ";
        }
      }
      r.detail = detail;
      return expect_bool(a, all, r);
    }
    throw Error("unknown op '" + op + "'");
  }

  static std::size_t chart_index(const MSAPresentation& p, const std::string& name) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p.chart(i).name == name) return i;
    }
    throw Error("no chart named '" + name + "'");
  }

  static std::vector<bool> noninvertible(const SeedDocument& sd, const json& a) {
    if (!a.contains("noninvertible")) return sd.noninvertible;
    std::vector<bool> ni(sd.seed.size(), false);
    for (const auto& v : a.at("noninvertible")) ni[resolve_vertex(sd.seed, label(v))] = true;
    return ni;
  }

  bool oracle_agreement(const json& a, AssertionResult& r) {
    const MSAPresentation& p = charts(a);
    std::vector<Rational> lambdas;
    for (const auto& l : a.at("lambdas")) lambdas.emplace_back(l.get<long>());
    std::vector<RationalFunction> cases;
    for (const auto& w : a.value("witnesses", json::array())) cases.push_back(parse_in(input_name(a), w.get<std::string>()));
    std::size_t fixed = cases.size();
    std::mt19937_64 rng(opts_.prng_seed);
    const VariableContext& ctx = p.reference.ctx;
    std::size_t random = a.value("random", 0);
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    for (std::size_t i = 0; i < random; ++i) {
      LaurentPolynomial f(ctx);
      long terms = pick(1, 2);
      for (long t = 0; t < terms; ++t) {
        LaurentPolynomial q = LaurentPolynomial::monomial(ctx, {pick(-2, 2), pick(-2, 2)}, Rational(pick(1, 3)));
        for (const Rational& l : lambdas) {
          q = q * (LaurentPolynomial::variable(ctx, 0) + LaurentPolynomial::constant(ctx, l)).pow(pick(0, 2));
        }
        q = q * (LaurentPolynomial::variable(ctx, 0) + LaurentPolynomial::constant(ctx, 5)).pow(pick(0, 1));
        f += q;
      }
      if (f.is_zero()) f = LaurentPolynomial::constant(ctx, 1);
      cases.emplace_back(f);
    }
    std::size_t members = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      bool got = msa_membership(p, cases[i]).member;
      bool want = divisibility_oracle(cases[i], lambdas);
      members += want;
      if (got != want) {
        r.computed = "disagreement on " + format_expr(cases[i]) + ": charts say " + (got ? "member" : "non-member");
        return false;
      }
    }
    r.computed = "true";
    r.detail = std::to_string(fixed) + " fixed + " + std::to_string(random) + " random cases agree (" +
               std::to_string(members) + " members)";
    return a.at("expected").get<bool>();
  }

  void validate(const json& a, AssertionResult& base, std::vector<AssertionResult>& out) {
    ValidationReport rep;
    std::string in = input_name(a);
    ConeReading reading = a.value("reading", "chart") == "literal" ? ConeReading::Literal : ConeReading::ChartCoordinates;
    if (charts_.count(in)) {
      rep = validate_presentation(charts_.at(in), reading);
    } else {
      const SeedDocument& sd = seed(a);
      std::vector<bool> ni = noninvertible(sd, a);
      rep = validate_presentation(upper_presentation(sd.seed, ni), reading);
    }
    const json expected = a.value("expected", json::object());
    for (const Check& c : rep.checks) {
      AssertionResult r = base;
      r.label = c.name;
      r.computed = verdict_name(c.verdict);
      r.detail = c.detail;
      if (expected.contains(c.name)) {
        r.expected = expected.at(c.name).get<std::string>();
      } else {
        r.expected = c.verdict == Verdict::Fail ? "no FAIL" : r.computed;
      }
      if (c.name == "height_one") {
        r.verdict = Verdict::Unchecked;
      } else {
        bool surrogate = c.verdict == Verdict::SurrogatePass || c.verdict == Verdict::SurrogateFail;
        r.verdict = r.expected != r.computed ? Verdict::Fail : surrogate ? c.verdict : Verdict::Pass;
      }
      out.push_back(std::move(r));
    }
  }
};

}  // namespace

CaseReport run_case(const CorpusCase& c, const RunOptions& opts) { return CaseRunner(c, opts).run(); }

CaseReport run_case(const std::string& id, const RunOptions& opts) {
  for (const auto& c : load_corpus()) {
    if (c.id == id) return run_case(c, opts);
  }
  throw Error("unknown corpus case '" + id + "'");
}

CorpusReport run_all(const std::vector<CorpusCase>& cases, const std::optional<std::string>& filter,
                     const RunOptions& opts) {
  std::vector<const CorpusCase*> chosen;
  for (const auto& c : cases) {
    if (!filter || filter->empty() || *filter == "all" || c.id == *filter ||
        std::find(c.tags.begin(), c.tags.end(), *filter) != c.tags.end()) {
      chosen.push_back(&c);
    }
  }
  CorpusReport report;
  report.cases.resize(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) report.cases[i] = run_case(*chosen[i], opts);
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(chosen.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

CorpusReport run_all(const std::optional<std::string>& filter, const RunOptions& opts) {
  return run_all(load_corpus(), filter, opts);
}

}  // namespace mutalg
