#include "pdnet/io.hpp"

#include <map>

#include "json.hpp"
#include "pdnet/errors.hpp"

namespace pdnet::io {

using nlohmann::json;

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError(what, 0); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) schema_error(std::string("expected an object holding '") + key + "'");
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(std::string("missing key '") + key + "'");
  return *it;
}

std::size_t count_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    schema_error(std::string("'") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

GaussianRational scalar(const json& v, const std::string& where) {
  if (v.is_number_integer()) return GaussianRational(v.get<std::int64_t>());
  if (!v.is_string()) schema_error(where + ": expected a string scalar");
  try {
    return GaussianRational::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what(), e.position());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Matrix matrix_from_json(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t rows = count_field(doc, "n_rows");
  const std::size_t cols = count_field(doc, "n_cols");
  const json& entries = field(doc, "entries");
  if (!entries.is_array() || entries.size() != rows) schema_error("'entries' must hold n_rows rows");
  std::vector<GaussianRational> flat;
  flat.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = entries[r];
    if (!row.is_array() || row.size() != cols) {
      schema_error("entries[" + std::to_string(r) + "] must hold n_cols entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      flat.push_back(scalar(row[c], "entries[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
  }
  return Matrix(rows, cols, std::move(flat));
}

std::string matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return dump(json{{"n_rows", m.rows()}, {"n_cols", m.cols()}, {"entries", std::move(rows)}});
}

namespace {

JacobiFactor factor_from(const json& j, const char* value_key, const std::string& where) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) schema_error(where + ": 'kind' must be a string");
  JacobiFactor f;
  try {
    f.kind = kind_from_name(kind.get<std::string>());
  } catch (const ParseError&) {
    schema_error(where + ": unknown kind '" + kind.get<std::string>() + "'");
  }
  f.level = count_field(j, "level");
  f.param = scalar(field(j, value_key), where);
  return f;
}

json factor_to(FactorKind kind, std::size_t level, const GaussianRational& value, const char* value_key) {
  return json{{"kind", kind_name(kind)}, {"level", level}, {value_key, value.to_string()}};
}

}  // namespace

FactorSequence factors_from_json(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_array()) schema_error("factor sequence must be a JSON array");
  FactorSequence out;
  for (std::size_t k = 0; k < doc.size(); ++k) out.push_back(factor_from(doc[k], "param", "factor " + std::to_string(k)));
  return out;
}

std::string factors_to_json(const FactorSequence& factors) {
  json out = json::array();
  for (const JacobiFactor& f : factors) out.push_back(factor_to(f.kind, f.level, f.param, "param"));
  return dump(out);
}

PlanarNetwork network_from_json(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t n = count_field(doc, "n");
  const json& chips = field(doc, "chips");
  if (!chips.is_array()) schema_error("'chips' must be an array");
  std::vector<Chip> out;
  for (std::size_t k = 0; k < chips.size(); ++k) {
    out.push_back(chip_from_factor(factor_from(chips[k], "weight", "chip " + std::to_string(k))));
  }
  try {
    return PlanarNetwork(n, std::move(out));
  } catch (const LevelRangeError& e) {
    schema_error(e.what());
  }
}

std::string network_to_json(const PlanarNetwork& net) {
  json chips = json::array();
  for (const Chip& c : net.chips()) chips.push_back(factor_to(c.kind, c.level, c.weight, "weight"));
  return dump(json{{"n", net.levels()}, {"chips", std::move(chips)}});
}

DoubleWiringDiagram diagram_from_json(std::string_view text) {
  const json doc = parse_document(text);
  DoubleWiringDiagram d;
  d.n = count_field(doc, "n");
  const json& crossings = field(doc, "crossings");
  if (!crossings.is_array()) schema_error("'crossings' must be an array");
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    const json& color = field(crossings[k], "color");
    if (!color.is_string()) schema_error("crossing " + std::to_string(k) + ": 'color' must be a string");
    Crossing x;
    try {
      x.color = color_from_name(color.get<std::string>());
    } catch (const ParseError&) {
      schema_error("crossing " + std::to_string(k) + ": unknown color '" + color.get<std::string>() + "'");
    }
    x.row = count_field(crossings[k], "row");
    d.crossings.push_back(x);
  }
  return d;
}

std::string diagram_to_json(const DoubleWiringDiagram& d) {
  json crossings = json::array();
  for (const Crossing& x : d.crossings) crossings.push_back(json{{"color", color_name(x.color)}, {"row", x.row}});
  return dump(json{{"n", d.n}, {"crossings", std::move(crossings)}});
}

Seed seed_from_json(std::string_view text) {
  const json doc = parse_document(text);
  const json& vertices = field(doc, "vertices");
  if (!vertices.is_array()) schema_error("'vertices' must be an array");
  std::map<std::string, std::size_t> index;
  std::vector<bool> flags;
  Seed s;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const json& v = vertices[k];
    const json& id = field(v, "id");
    const json& mut = field(v, "mutable");
    if (!id.is_string()) schema_error("vertex " + std::to_string(k) + ": 'id' must be a string");
    if (!mut.is_boolean()) schema_error("vertex " + std::to_string(k) + ": 'mutable' must be a boolean");
    if (!index.emplace(id.get<std::string>(), k).second) schema_error("duplicate vertex id '" + id.get<std::string>() + "'");
    flags.push_back(mut.get<bool>());
    const auto label = v.find("label");
    s.labels.push_back(label != v.end() && label->is_string() ? label->get<std::string>() : id.get<std::string>());
    s.values.push_back(scalar(field(v, "value"), "vertex " + std::to_string(k)));
  }
  s.quiver = Quiver(std::move(flags));
  const json& arrows = field(doc, "arrows");
  if (!arrows.is_array()) schema_error("'arrows' must be an array");
  for (const json& a : arrows) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string()) {
      schema_error("each arrow must be a [source, target] pair of ids");
    }
    const auto from = index.find(a[0].get<std::string>());
    const auto to = index.find(a[1].get<std::string>());
    if (from == index.end() || to == index.end()) schema_error("arrow refers to an unknown vertex id");
    if (from->second == to->second) schema_error("arrow is a loop");
    if (s.quiver.arrows(to->second, from->second) > 0) schema_error("arrows form a 2-cycle");
    s.quiver.add_arrows(from->second, to->second);
  }
  return s;
}

std::string seed_to_json(const Seed& s) {
  json vertices = json::array();
  for (std::size_t k = 0; k < s.quiver.size(); ++k) {
    vertices.push_back(json{{"id", "v" + std::to_string(k)},
                            {"label", k < s.labels.size() ? s.labels[k] : "v" + std::to_string(k)},
                            {"mutable", s.quiver.is_mutable(k)},
                            {"value", s.values.at(k).to_string()}});
  }
  json arrows = json::array();
  for (const auto& [from, to] : s.quiver.arrow_list()) {
    arrows.push_back(json::array({"v" + std::to_string(from), "v" + std::to_string(to)}));
  }
  return dump(json{{"vertices", std::move(vertices)}, {"arrows", std::move(arrows)}});
}

}  // namespace pdnet::io
