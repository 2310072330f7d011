#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mutalg/graded.hpp"
#include "mutalg/seed.hpp"

namespace mutalg {

/// A seed file: the seed plus its optional grading and non-invertible frozens.
struct SeedDocument {
  Seed seed;
  std::optional<Grading> grading;
  /// Per vertex; true for frozen vertices that are not inverted.
  std::vector<bool> noninvertible;
};

/// Reads the seed schema. Throws Error with a description of the first problem.
SeedDocument seed_from_json(const nlohmann::json& doc);
SeedDocument load_seed_file(const std::string& path);

/// Resolves a vertex given by label or by current variable name.
std::size_t resolve_vertex(const Seed& s, const std::string& key);

/// Parses a query over the ambient variables (rewritten through the inverse
/// ledger) or, failing that, over the seed's cluster variables.
RationalFunction parse_seed_query(const Seed& s, const std::string& text);

nlohmann::json seed_to_json(const Seed& s);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace mutalg
