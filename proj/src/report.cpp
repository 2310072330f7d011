#include "mutalg/report.hpp"

#include <algorithm>

namespace mutalg {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Unchecked: return "UNCHECKED";
    case Verdict::SurrogatePass: return "SURROGATE-PASS";
    case Verdict::SurrogateFail: return "SURROGATE-FAIL";
  }
  return "FAIL";
}

void ValidationReport::add(std::string name, Verdict verdict, std::string detail) {
  checks.push_back({std::move(name), verdict, std::move(detail)});
}

void ValidationReport::append(const ValidationReport& other, const std::string& prefix) {
  for (const Check& c : other.checks) checks.push_back({prefix + c.name, c.verdict, c.detail});
}

bool ValidationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.verdict == Verdict::Fail; });
}

const Check* ValidationReport::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

std::string ValidationReport::to_text() const {
  std::string out;
  for (const Check& c : checks) {
    out += std::string(verdict_name(c.verdict)) + "  " + c.name;
    if (!c.detail.empty()) out += "  (" + c.detail + ")";
    out += '\n';
  }
  return out;
}

}  // namespace mutalg
