#include "mutalg/seed_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mutalg/error.hpp"
#include "mutalg/expr.hpp"
#include "mutalg/substitute.hpp"

namespace mutalg {

using nlohmann::json;

namespace {

std::string label_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw Error("vertex labels must be strings or integers");
}

std::vector<std::vector<long>> int_rows(const json& m, const char* what) {
  if (!m.is_array()) throw Error(std::string(what) + " must be an array of rows");
  std::vector<std::vector<long>> rows;
  for (const auto& r : m) rows.push_back(r.get<std::vector<long>>());
  return rows;
}

SeedDocument parse(const json& doc) {
  if (!doc.is_object()) throw Error("seed document must be a JSON object");
  std::vector<std::string> labels;
  for (const auto& v : doc.at("vertices")) labels.push_back(label_of(v));
  std::size_t n = labels.size();
  if (n == 0) throw Error("seed needs at least one vertex");
  auto index = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw Error("unknown vertex '" + l + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };

  std::vector<bool> frozen(n, false);
  if (doc.contains("frozen")) {
    for (const auto& v : doc.at("frozen")) frozen[index(label_of(v))] = true;
  }

  ExchangeMatrix b;
  if (doc.contains("quiver") == doc.contains("matrix")) throw Error("seed needs exactly one of 'matrix' and 'quiver'");
  if (doc.contains("quiver")) {
    Quiver q{frozen, {}};
    for (const auto& a : doc.at("quiver")) {
      if (!a.is_array() || a.size() < 2 || a.size() > 3) throw Error("arrows are [source, target] or [source, target, multiplicity]");
      long mult = a.size() == 3 ? a[2].get<long>() : 1;
      q.arrows.push_back({index(label_of(a[0])), index(label_of(a[1])), mult});
    }
    b = quiver_to_matrix(q);
  } else {
    auto rows = int_rows(doc.at("matrix"), "matrix");
    if (rows.size() != n) throw Error("matrix needs one row per vertex");
    for (std::size_t v = 0; v < n; ++v) {
      if (!frozen[v]) b.mutable_vertices.push_back(v);
    }
    std::size_t cols = rows.front().size();
    if (cols != n && cols != b.mutable_vertices.size()) {
      throw Error("matrix must have one column per vertex or one per mutable vertex");
    }
    IntMatrix full = IntMatrix::from_rows(rows, cols);
    b.b = IntMatrix(n, b.mutable_vertices.size());
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < b.mutable_vertices.size(); ++c) {
        b.b(r, c) = full(r, cols == n ? b.mutable_vertices[c] : c);
      }
    }
  }

  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = is_identifier(labels[i]) ? labels[i] : "x" + labels[i];
  if (doc.contains("names")) {
    const json& nm = doc.at("names");
    if (nm.is_array()) {
      if (nm.size() != n) throw Error("'names' needs one entry per vertex");
      for (std::size_t i = 0; i < n; ++i) names[i] = nm[i].get<std::string>();
    } else {
      for (const auto& [k, v] : nm.items()) names[index(k)] = v.get<std::string>();
    }
  }
  VariableContext cluster(names);

  VariableContext ambient = cluster;
  if (doc.contains("ambient")) ambient = VariableContext(doc.at("ambient").get<std::vector<std::string>>());

  std::vector<RationalFunction> ledger;
  if (doc.contains("ledger")) {
    std::vector<std::optional<RationalFunction>> entries(n);
    for (const auto& [k, v] : doc.at("ledger").items()) {
      std::size_t i;
      auto by_name = std::find(names.begin(), names.end(), k);
      i = by_name != names.end() ? static_cast<std::size_t>(by_name - names.begin()) : index(k);
      try {
        entries[i] = parse_expr(v.get<std::string>(), ambient);
      } catch (const ParseError& e) {
        throw Error("ledger entry '" + k + "': " + e.what());
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!entries[i]) {
        auto a = ambient.index_of(names[i]);
        if (!a) throw Error("ledger has no entry for vertex '" + labels[i] + "'");
        entries[i] = RationalFunction(LaurentPolynomial::variable(ambient, *a));
      }
      ledger.push_back(*entries[i]);
    }
  } else {
    if (!(ambient == cluster)) throw Error("a seed with an 'ambient' context needs a 'ledger'");
    ledger = coordinate_images(cluster);
  }

  Seed seed(labels, b, names, ambient, ledger);

  if (doc.contains("inverse_ledger")) {
    std::vector<std::optional<RationalFunction>> images(ambient.size());
    for (const auto& [k, v] : doc.at("inverse_ledger").items()) {
      auto a = ambient.index_of(k);
      if (!a) throw Error("inverse ledger names unknown ambient variable '" + k + "'");
      images[*a] = parse_expr(v.get<std::string>(), cluster);
    }
    std::vector<RationalFunction> all;
    for (std::size_t a = 0; a < images.size(); ++a) {
      if (!images[a]) throw Error("inverse ledger has no entry for '" + ambient.name(a) + "'");
      all.push_back(*images[a]);
    }
    seed.set_inverse_ledger(std::move(all));
  }

  std::optional<Grading> grading;
  if (doc.contains("grading")) {
    const json& g = doc.at("grading");
    if (g.contains("torsion") && !g.at("torsion").empty()) {
      throw Error("gradings with torsion are not supported; only free groups Z^r are accepted");
    }
    Grading gr;
    gr.rank = g.at("rank").get<std::size_t>();
    for (const auto& [k, v] : g.at("degrees").items()) {
      auto d = v.get<std::vector<long>>();
      if (d.size() != gr.rank) throw Error("degree of '" + k + "' must have length " + std::to_string(gr.rank));
      gr.degrees[k] = d;
    }
    for (const auto& nm : names) gr.of(nm);
    grading = std::move(gr);
  }

  std::vector<bool> noninvertible(n, false);
  if (doc.contains("cone")) {
    for (const auto& v : doc.at("cone").at("noninvertible")) {
      std::size_t i = index(label_of(v));
      if (!frozen[i]) throw Error("vertex '" + labels[i] + "' is mutable and cannot be non-invertible");
      noninvertible[i] = true;
    }
  }
  return SeedDocument{std::move(seed), std::move(grading), std::move(noninvertible)};
}

}  // namespace

SeedDocument seed_from_json(const json& doc) {
  try {
    return parse(doc);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed seed document: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SeedDocument load_seed_file(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw Error("'" + path + "' is not valid JSON: " + e.what());
  }
  return seed_from_json(doc);
}

std::size_t resolve_vertex(const Seed& s, const std::string& key) {
  const auto& labels = s.labels();
  auto it = std::find(labels.begin(), labels.end(), key);
  if (it != labels.end()) return static_cast<std::size_t>(it - labels.begin());
  auto names = s.names();
  auto nt = std::find(names.begin(), names.end(), key);
  if (nt != names.end()) return static_cast<std::size_t>(nt - names.begin());
  throw Error("unknown vertex '" + key + "'");
}

RationalFunction parse_seed_query(const Seed& s, const std::string& text) {
  if (s.inverse_ledger() && s.is_initial()) {
    try {
      return substitute(parse_expr(text, s.ambient()), *s.inverse_ledger(), s.initial_context());
    } catch (const ParseError&) {
      if (s.ambient() == s.initial_context()) throw;
    }
  }
  return parse_expr(text, s.cluster_context());
}

json seed_to_json(const Seed& s) {
  json out;
  out["vertices"] = s.labels();
  json frozen = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.is_frozen(i)) frozen.push_back(s.labels()[i]);
  }
  out["frozen"] = frozen;
  json rows = json::array();
  for (std::size_t r = 0; r < s.matrix().b.rows(); ++r) rows.push_back(s.matrix().b.row(r));
  out["matrix"] = rows;
  out["names"] = s.names();
  out["ambient"] = s.ambient().names();
  json ledger = json::object();
  auto names = s.names();
  for (std::size_t i = 0; i < s.size(); ++i) ledger[names[i]] = format_expr(s.ledger()[i]);
  out["ledger"] = ledger;
  return out;
}

}  // namespace mutalg
