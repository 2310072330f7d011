#pragma once

#include <string>

#include <json.hpp>

#include "mutalg/charts.hpp"

namespace mutalg {

/// Reads the chart-system schema. Chart cones are in chart coordinates; the
/// optional "basis" rows attach chart coordinates to reference monomials and
/// default to the identity.
MSAPresentation presentation_from_json(const nlohmann::json& doc);
MSAPresentation load_chart_file(const std::string& path);

/// Parses a query in reference coordinates, expanding the presentation's aliases.
RationalFunction parse_query(const MSAPresentation& p, const std::string& text);

Cone cone_from_json(const nlohmann::json& gens, std::size_t rank);

}  // namespace mutalg
