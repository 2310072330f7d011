#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "mutalg/charts.hpp"
#include "mutalg/charts_io.hpp"
#include "mutalg/corpus.hpp"
#include "mutalg/error.hpp"
#include "mutalg/expr.hpp"
#include "mutalg/graded.hpp"
#include "mutalg/lifting.hpp"
#include "mutalg/seed_io.hpp"

namespace mutalg {
namespace {

using nlohmann::json;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

std::vector<bool> invertibility(const SeedDocument& doc, const std::vector<std::string>& invertible) {
  std::vector<bool> ni = doc.noninvertible;
  for (const auto& key : invertible) {
    std::size_t v = resolve_vertex(doc.seed, key);
    if (!doc.seed.is_frozen(v)) throw Error("vertex '" + key + "' is mutable, not frozen");
    ni[v] = false;
  }
  return ni;
}

void print_seed(const Seed& s, std::ostream& out) {
  out << "matrix (rows: vertices, columns: mutable vertices)\n" << format_matrix(s.matrix().b);
  out << "ledger\n";
  auto names = s.names();
  std::size_t width = 0;
  for (const auto& l : s.labels()) width = std::max(width, l.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << "  " << s.labels()[i] << std::string(width - s.labels()[i].size(), ' ') << "  " << names[i]
        << (s.is_frozen(i) ? " (frozen)" : "") << " = " << format_expr(s.ledger()[i]) << '\n';
  }
}

int report_membership(const Membership& m, const std::string& query, bool machine, std::ostream& out) {
  if (machine) {
    json charts = json::array();
    for (const auto& c : m.charts) {
      charts.push_back({{"chart", c.chart_name}, {"member", c.member}, {"detail", c.detail}});
    }
    out << json{{"query", query}, {"member", m.member}, {"charts", charts}}.dump() << '\n';
  } else {
    for (const auto& c : m.charts) {
      out << (c.member ? "PASS " : "FAIL ") << c.chart_name << ": " << c.detail << '\n';
    }
    if (m.member) {
      out << "member\n";
    } else {
      out << "not a member; fails chart " << m.failure()->chart_name << '\n';
    }
  }
  return m.member ? 0 : 1;
}

int report_validation(const ValidationReport& rep, bool machine, std::ostream& out) {
  if (machine) {
    for (const auto& c : rep.checks) {
      out << json{{"check", c.name}, {"verdict", verdict_name(c.verdict)}, {"detail", c.detail}}.dump() << '\n';
    }
  } else {
    out << rep.to_text();
  }
  return rep.ok() ? 0 : 1;
}

bool is_chart_document(const json& doc) { return doc.is_object() && doc.contains("reference"); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cluster seed mutation, chart membership and lifting"};
  app.name("mutalg");
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  };

  std::string file, expr, sequence, upper, frozen_inv, reading = "chart";
  std::size_t n = 0;
  unsigned jobs = 1;
  std::uint64_t prng_seed = kDefaultPrngSeed;
  std::string case_id = "all";

  auto* mutate = app.add_subcommand("mutate", "Mutate a seed along a sequence of vertices");
  mutate->add_option("seed", file, "seed file")->required();
  mutate->add_option("--sequence", sequence, "comma-separated vertex labels or names");
  add_format(mutate);

  auto* member = app.add_subcommand("member", "Membership in a chart intersection");
  member->add_option("charts", file, "chart file");
  member->add_option("--expr", expr, "query expression")->required();
  member->add_option("--upper", upper, "seed file; test membership in its upper cluster algebra");
  member->add_option("--frozen-invertible", frozen_inv, "frozen vertices to invert (with --upper)");
  add_format(member);

  auto* upper_member = app.add_subcommand("upper-member", "Membership in the upper cluster algebra of a seed");
  upper_member->add_option("seed", file, "seed file")->required();
  upper_member->add_option("--expr", expr, "query expression")->required();
  upper_member->add_option("--frozen-invertible", frozen_inv, "frozen vertices to invert");
  add_format(upper_member);

  auto* lift = app.add_subcommand("lift", "Minimal monomial lifting for the blow-up of P^n");
  lift->add_option("--n", n, "dimension")->required();

  auto* grade = app.add_subcommand("grade-check", "Compatibility of a seed grading");
  grade->add_option("seed", file, "seed file with a grading")->required();

  auto* validate = app.add_subcommand("validate", "Validation report of a chart system or seed presentation");
  validate->add_option("file", file, "chart or seed file")->required();
  validate->add_option("--reading", reading, "cone reading")->check(CLI::IsMember({"chart", "literal"}));
  validate->add_option("--frozen-invertible", frozen_inv, "frozen vertices to invert (seed files)");
  add_format(validate);

  auto* verify = app.add_subcommand("verify", "Re-run the example corpus");
  verify->add_option("case", case_id, "case id, tag, or all");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--prng-seed", prng_seed, "seed for randomized assertions");
  add_format(verify);

  std::vector<const char*> argv{"mutalg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  bool machine = format == "machine";

  try {
    if (*mutate) {
      SeedDocument doc = load_seed_file(file);
      Seed s = doc.seed;
      for (const auto& key : split_list(sequence)) s = seed_mutate(s, resolve_vertex(s, key));
      if (machine) {
        out << seed_to_json(s).dump() << '\n';
      } else {
        print_seed(s, out);
      }
      return 0;
    }
    if (*member || *upper_member) {
      if (*upper_member) upper = file;
      if (!upper.empty()) {
        SeedDocument doc = load_seed_file(upper);
        RationalFunction f = parse_seed_query(doc.seed, expr);
        auto ni = invertibility(doc, split_list(frozen_inv));
        return report_membership(upper_membership(doc.seed, f, ni), expr, machine, out);
      }
      if (file.empty()) throw Error("member needs a chart file or --upper SEED");
      if (!frozen_inv.empty()) throw Error("--frozen-invertible applies to --upper only");
      MSAPresentation p = load_chart_file(file);
      return report_membership(msa_membership(p, parse_query(p, expr)), expr, machine, out);
    }
    if (*lift) {
      LiftedSeed ls = lifted_seed(BlowupConfig::standard(n));
      out << "nu (rows E0..E" << n + 2 << ", columns x1..x" << n << ")\n" << format_matrix(ls.nu);
      out << "lifted exchange matrix\n" << format_matrix(ls.lifted_b);
      out << "degrees\n";
      for (const auto& name : ls.lifted.names()) out << "  " << name << "  " << format_degree(ls.grading.of(name)) << '\n';
      bool ok = grading_is_compatible(ls.lifted, ls.grading).compatible();
      out << "compatibility " << (ok ? "PASS" : "FAIL") << '\n';
      return ok ? 0 : 1;
    }
    if (*grade) {
      SeedDocument doc = load_seed_file(file);
      if (!doc.grading) throw Error("seed file has no grading");
      CompatibilityReport rep = grading_is_compatible(doc.seed, *doc.grading);
      for (const auto& v : rep.vertices) {
        out << (v.compatible() ? "PASS " : "FAIL ") << doc.seed.labels()[v.vertex] << ": " << format_degree(v.plus)
            << (v.compatible() ? " = " : " != ") << format_degree(v.minus) << '\n';
      }
      out << "compatibility " << (rep.compatible() ? "PASS" : "FAIL") << '\n';
      return rep.compatible() ? 0 : 1;
    }
    if (*validate) {
      ConeReading r = reading == "literal" ? ConeReading::Literal : ConeReading::ChartCoordinates;
      json doc = json::parse(read_text_file(file));
      if (is_chart_document(doc)) {
        if (!frozen_inv.empty()) throw Error("--frozen-invertible applies to seed files only");
        return report_validation(validate_presentation(presentation_from_json(doc), r), machine, out);
      }
      SeedDocument sd = seed_from_json(doc);
      auto ni = invertibility(sd, split_list(frozen_inv));
      return report_validation(validate_presentation(upper_presentation(sd.seed, ni), r), machine, out);
    }
    if (*verify) {
      auto cases = load_corpus();
      if (case_id != "all") {
        bool known = std::any_of(cases.begin(), cases.end(), [&](const CorpusCase& c) {
          return c.id == case_id || std::find(c.tags.begin(), c.tags.end(), case_id) != c.tags.end();
        });
        if (!known) throw Error("unknown corpus case or tag '" + case_id + "'");
      }
      CorpusReport rep = run_all(cases, case_id, RunOptions{prng_seed, jobs});
      out << (machine ? rep.to_jsonl() : rep.to_text());
      return rep.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace mutalg
