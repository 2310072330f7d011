#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mutalg/rational_function.hpp"
#include "mutalg/report.hpp"

namespace mutalg {

inline constexpr std::uint64_t kDefaultPrngSeed = 20240917;

struct CorpusCase {
  std::string id;
  std::string title;
  std::vector<std::string> tags;
  nlohmann::json doc;
};

struct AssertionResult {
  std::string case_id;
  std::size_t index = 0;
  std::string op;
  std::string label;
  Verdict verdict = Verdict::Fail;
  std::string provenance;
  std::string anchor;
  std::string expected;
  std::string computed;
  std::string detail;
};

struct CaseReport {
  std::string id;
  std::vector<AssertionResult> results;
  double seconds = 0;
  bool ok() const;
};

struct CorpusReport {
  std::vector<CaseReport> cases;
  bool ok() const;
  std::size_t count(Verdict v) const;
  std::string to_text() const;
  /// One JSON object per line, one line per assertion result.
  std::string to_jsonl() const;
};

struct RunOptions {
  std::uint64_t prng_seed = kDefaultPrngSeed;
  unsigned jobs = 1;
};

/// Cases from $MUTALG_CORPUS_DIR when set, else the embedded copies; sorted by id.
std::vector<CorpusCase> load_corpus();
std::vector<CorpusCase> load_corpus_dir(const std::string& dir);
CorpusCase parse_case(const std::string& text, const std::string& origin);

CaseReport run_case(const CorpusCase& c, const RunOptions& opts = {});
/// Throws Error for an unknown id.
CaseReport run_case(const std::string& id, const RunOptions& opts = {});
/// Cases whose id or one of whose tags equals `filter` (all when empty).
CorpusReport run_all(const std::vector<CorpusCase>& cases, const std::optional<std::string>& filter,
                     const RunOptions& opts = {});
CorpusReport run_all(const std::optional<std::string>& filter, const RunOptions& opts = {});

/// Independent membership test for K[x^{+-1}, y, z]/(yz - prod (x + l)):
/// f = sum c_n(x) y^n is a member iff prod (x + l)^{|n|} divides c_n for n < 0.
/// f is over the context (x, y).
bool divisibility_oracle(const RationalFunction& f, const std::vector<Rational>& lambdas);

}  // namespace mutalg
