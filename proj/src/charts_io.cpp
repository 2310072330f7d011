#include "mutalg/charts_io.hpp"

#include <set>

#include "mutalg/error.hpp"
#include "mutalg/expr.hpp"
#include "mutalg/seed_io.hpp"
#include "mutalg/substitute.hpp"

namespace mutalg {

using nlohmann::json;

Cone cone_from_json(const json& gens, std::size_t rank) {
  std::vector<LatticeVector> out;
  if (gens.is_null()) return Cone(rank);
  for (const auto& g : gens) {
    auto v = g.get<std::vector<long>>();
    if (v.size() != rank) throw Error("cone generator has length " + std::to_string(v.size()) + ", expected " + std::to_string(rank));
    out.emplace_back(std::move(v));
  }
  return Cone(rank, std::move(out));
}

namespace {

MSAPresentation parse(const json& doc) {
  if (!doc.is_object()) throw Error("chart document must be a JSON object");
  const json& ref = doc.at("reference");
  VariableContext rctx(ref.at("vars").get<std::vector<std::string>>());
  std::size_t n = rctx.size();
  MSAPresentation p;
  p.reference = reference_chart(rctx, cone_from_json(ref.value("cone", json()), n), ref.value("name", "reference"));
  p.height_one_declared = doc.value("height_one_declared", false);

  std::set<std::string> seen{p.reference.name};
  std::size_t idx = 0;
  for (const json& c : doc.value("charts", json::array())) {
    ++idx;
    std::string name = c.value("name", "chart" + std::to_string(idx));
    if (!seen.insert(name).second) throw Error("duplicate chart name '" + name + "'");
    VariableContext vars(c.at("vars").get<std::vector<std::string>>());
    const json& d = c.at("datum");
    auto u = d.at("u").get<std::vector<long>>();
    if (u.size() != n) throw Error("chart '" + name + "': u must have length " + std::to_string(n));
    LaurentPolynomial g = parse_laurent(d.at("g").get<std::string>(), rctx);
    MutationDatum datum = MutationDatum::make(LatticeVector(u), g, d.value("k", 1L), d.value("declared_irreducible", false));
    IntMatrix basis = IntMatrix::identity(n);
    if (c.contains("basis")) {
      std::vector<std::vector<long>> rows;
      for (const auto& r : c.at("basis")) rows.push_back(r.get<std::vector<long>>());
      if (rows.size() != n) throw Error("chart '" + name + "': basis must be square of size " + std::to_string(n));
      basis = IntMatrix::from_rows(rows, n);
    }
    p.charts.push_back(mutation_chart(rctx, name, vars, cone_from_json(c.value("cone", json()), n), datum, basis));
    p.transitions.push_back({std::move(datum), std::move(basis)});
  }

  if (doc.contains("aliases")) {
    for (const auto& [k, v] : doc.at("aliases").items()) {
      if (rctx.index_of(k)) throw Error("alias '" + k + "' shadows a reference coordinate");
      p.aliases.emplace(k, parse_expr(v.get<std::string>(), rctx));
    }
  }
  return p;
}

}  // namespace

MSAPresentation presentation_from_json(const json& doc) {
  try {
    return parse(doc);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed chart document: ") + e.what());
  }
}

MSAPresentation load_chart_file(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw Error("'" + path + "' is not valid JSON: " + e.what());
  }
  return presentation_from_json(doc);
}

RationalFunction parse_query(const MSAPresentation& p, const std::string& text) {
  const VariableContext& rctx = p.reference.ctx;
  if (p.aliases.empty()) return parse_expr(text, rctx);
  std::vector<std::string> extra;
  for (const auto& [k, v] : p.aliases) extra.push_back(k);
  VariableContext ext = rctx.extended(extra);
  RationalFunction f = parse_expr(text, ext);
  std::vector<RationalFunction> images = coordinate_images(rctx);
  for (const auto& [k, v] : p.aliases) images.push_back(v);
  return substitute(f, images, rctx);
}

}  // namespace mutalg
