#pragma once

#include <string>
#include <vector>

namespace mutalg {

enum class Verdict {
  Pass,
  Fail,
  /// Not decided by any algorithm here; carried as declared metadata.
  Unchecked,
  /// Outcome of a finitely checkable stand-in for a geometric condition.
  SurrogatePass,
  SurrogateFail,
};

const char* verdict_name(Verdict v);

struct Check {
  std::string name;
  Verdict verdict;
  std::string detail;
};

/// Named checks; only Fail makes a report invalid.
struct ValidationReport {
  std::vector<Check> checks;

  void add(std::string name, Verdict verdict, std::string detail = {});
  void append(const ValidationReport& other, const std::string& prefix = {});
  bool ok() const;
  const Check* find(const std::string& name) const;
  std::string to_text() const;
};

}  // namespace mutalg
