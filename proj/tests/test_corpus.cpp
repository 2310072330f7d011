#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "mutalg/corpus.hpp"
#include "mutalg/error.hpp"
#include "support.hpp"

using namespace mutalg;
using json = nlohmann::json;

TEST(Corpus, InventoryIsSortedAndComplete) {
  auto cases = load_corpus();
  std::vector<std::string> ids;
  for (const auto& c : cases) ids.push_back(c.id);
  std::vector<std::string> expected{"cubic_ix",       "cubic_viii",        "hirzebruch_blowup",
                                    "lifting_p2",     "lifting_p3",        "msa_validation",
                                    "rank2",          "rank2_a2_pentagon", "schubert_intersections",
                                    "sl3",            "sl4"};
  EXPECT_EQ(ids, expected);
}

TEST(Corpus, EveryAssertionIsAnchored) {
  for (const auto& c : load_corpus()) {
    for (const auto& a : c.doc.at("assertions")) {
      EXPECT_FALSE(a.at("anchor").get<std::string>().empty()) << c.id;
    }
  }
}

TEST(Corpus, FullRunPassesWithOnlyHeightOneUnchecked) {
  CorpusReport r = run_all(std::nullopt);
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(r.count(Verdict::Fail), 0u);
  for (const auto& c : r.cases) {
    for (const auto& a : c.results) {
      if (a.verdict == Verdict::Unchecked) {
        EXPECT_EQ(a.label, "height_one") << c.id;
      }
    }
  }
  EXPECT_GT(r.count(Verdict::SurrogatePass), 0u);
  EXPECT_GT(r.count(Verdict::SurrogateFail), 0u);
}

TEST(Corpus, FilterByTag) {
  CorpusReport r = run_all(std::string("lifting"));
  ASSERT_EQ(r.cases.size(), 2u);
  EXPECT_EQ(r.cases[0].id, "lifting_p2");
  EXPECT_EQ(r.cases[1].id, "lifting_p3");
  EXPECT_EQ(run_all(std::string("sl3")).cases.size(), 1u);
}

TEST(Corpus, DeterministicAcrossJobCounts) {
  std::string one = run_all(std::nullopt, RunOptions{kDefaultPrngSeed, 1}).to_jsonl();
  std::string four = run_all(std::nullopt, RunOptions{kDefaultPrngSeed, 4}).to_jsonl();
  EXPECT_EQ(one, four);
  for (std::size_t start = 0, end; (end = one.find('\n', start)) != std::string::npos; start = end + 1) {
    EXPECT_TRUE(json::accept(one.substr(start, end - start)));
  }
}

TEST(Corpus, CorruptedExpectationFailsWithBothValues) {
  CorpusCase c;
  for (const auto& k : load_corpus()) {
    if (k.id == "sl3") c = k;
  }
  for (auto& a : c.doc["assertions"]) {
    if (a["op"] == "mutate") a["expected"] = "b";
  }
  CaseReport r = run_case(c);
  EXPECT_FALSE(r.ok());
  CorpusReport all{{r}};
  std::string text = all.to_text();
  EXPECT_NE(text.find("expected: b"), std::string::npos) << text;
  EXPECT_NE(text.find("computed: c"), std::string::npos) << text;
}

TEST(Corpus, Errors) {
  EXPECT_THROW(run_case(std::string("nosuchcase")), Error);
  EXPECT_THROW(parse_case("{", "x"), Error);
  EXPECT_THROW(parse_case(R"({"id": "a", "assertions": [{"op": "matrix"}]})", "x"), Error);
  EXPECT_THROW(parse_case(R"({"id": "a", "assertions": [{"op": "matrix", "provenance": "guess", "anchor": "b"}]})", "x"),
               Error);
}

TEST(Corpus, UnknownOpIsAFailureNotACrash) {
  CorpusCase c = parse_case(
      R"({"id": "t", "inputs": {}, "assertions": [{"op": "frobnicate", "provenance": "trivial", "anchor": "t"}]})", "t");
  CaseReport r = run_case(c);
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].verdict, Verdict::Fail);
}

TEST(Corpus, DirectoryOverride) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "mutalg_corpus_override";
  fs::create_directories(dir);
  std::ofstream(dir / "only.json") << R"({"id": "only", "tags": ["x"], "inputs": {},
    "assertions": [{"op": "skew_witness", "matrix": [[0, 2], [-1, 0]], "expected": [1, 2],
                    "provenance": "derived", "anchor": "d b"}]})";
  setenv("MUTALG_CORPUS_DIR", dir.c_str(), 1);
  auto cases = load_corpus();
  unsetenv("MUTALG_CORPUS_DIR");
  ASSERT_EQ(cases.size(), 1u);
  EXPECT_EQ(cases[0].id, "only");
  EXPECT_TRUE(run_case(cases[0]).ok());
  fs::remove_all(dir);
  EXPECT_THROW(load_corpus_dir((dir / "missing").string()), Error);
}

TEST(Oracle, Divisibility) {
  auto c = testing_support::ctx({"x", "y"});
  std::vector<Rational> l{Rational(2), Rational(3)};
  EXPECT_TRUE(divisibility_oracle(testing_support::rf("(x + 2)*(x + 3)/y + y^3 + x^(-4)", c), l));
  EXPECT_FALSE(divisibility_oracle(testing_support::rf("(x + 2)/y", c), l));
  EXPECT_FALSE(divisibility_oracle(testing_support::rf("(x + 2)^2*(x + 3)/y^2", c), l));
  EXPECT_FALSE(divisibility_oracle(testing_support::rf("1/(x + 1)", c), l));
}
