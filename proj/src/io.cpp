#include "homotopelab/io.hpp"

#include <fstream>

namespace homotopelab {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::parse_error, what); }

void require_kind(const json& doc, const char* kind) {
  if (!doc.is_object()) fail("document must be a JSON object");
  if (doc.value("format", "") != format_version) fail(std::string("expected format \"") + format_version + "\"");
  if (doc.value("kind", "") != kind) fail(std::string("expected kind \"") + kind + "\"");
}

Scalar scalar_from_json(const json& v, const FieldSpec& field) {
  if (v.is_string()) return Scalar::parse(field, v.get<std::string>());
  if (v.is_number_integer()) return Scalar::from_int(field, v.get<long long>());
  fail("scalar must be a string like \"-3/2\" or an integer");
}

bool is_natural(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
}

std::size_t index_from_json(const json& v, std::size_t bound) {
  if (!is_natural(v)) fail("index must be a natural number");
  const auto i = v.get<std::size_t>();
  if (i >= bound) fail("index " + std::to_string(i) + " out of range");
  return i;
}

FieldSpec field_from_json(const json& doc) {
  if (!doc.contains("field") || !doc["field"].is_string()) fail("missing \"field\"");
  return FieldSpec::parse(doc["field"].get<std::string>());
}

json entries_to_json(const Trilinear& t) {
  json out = json::array();
  for (const auto& [idx, c] : t.entries()) out.push_back({idx[0], idx[1], idx[2], c.to_string()});
  return out;
}

void entries_from_json(const json& doc, const char* key, Trilinear& t) {
  if (!doc.contains(key)) return;
  const auto& list = doc[key];
  if (!list.is_array()) fail(std::string("\"") + key + "\" must be an array");
  const auto& d = t.dims();
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != 4) fail("entries are [i, j, k, value]");
    t.add(index_from_json(e[0], d[0]), index_from_json(e[1], d[1]), index_from_json(e[2], d[2]),
          scalar_from_json(e[3], t.field()));
  }
}

}  // namespace

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

json algebra_to_json(const Algebra& A) {
  json doc = {{"format", format_version},
              {"kind", "algebra"},
              {"field", A.field().to_string()},
              {"dim", A.dim()},
              {"labels", A.labels()}};
  if (A.unit()) doc["unit"] = vector_to_json(*A.unit());
  doc["constants"] = entries_to_json(A.structure());
  return doc;
}

Algebra algebra_from_json(const json& doc) {
  require_kind(doc, "algebra");
  const FieldSpec field = field_from_json(doc);
  if (!doc.contains("dim") || !is_natural(doc["dim"])) fail("missing \"dim\"");
  const auto n = doc["dim"].get<std::size_t>();
  Trilinear t(field, {n, n, n});
  entries_from_json(doc, "constants", t);
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) fail("\"labels\" must be an array of strings");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) fail("\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  std::optional<Element> unit;
  if (doc.contains("unit") && !doc["unit"].is_null()) {
    const auto& u = doc["unit"];
    if (!u.is_array() || u.size() != n) fail("\"unit\" must list dim coordinates");
    Element e;
    for (const auto& c : u) e.push_back(scalar_from_json(c, field));
    unit = std::move(e);
  }
  return Algebra(std::move(t), std::move(unit), std::move(labels));
}

json tensor_to_json(const Trilinear& t) {
  return {{"format", format_version},
          {"kind", "tensor"},
          {"field", t.field().to_string()},
          {"dims", t.dims()},
          {"entries", entries_to_json(t)}};
}

Trilinear tensor_from_json(const json& doc) {
  require_kind(doc, "tensor");
  const FieldSpec field = field_from_json(doc);
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].size() != 3) fail("\"dims\" must have 3 entries");
  Trilinear::Index dims{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!is_natural(doc["dims"][i])) fail("\"dims\" entries must be natural numbers");
    dims[i] = doc["dims"][i].get<std::size_t>();
  }
  Trilinear t(field, dims);
  entries_from_json(doc, "entries", t);
  return t;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const json& doc, const FieldSpec& field) {
  const json& rows = doc.is_object() && doc.contains("rows") ? doc["rows"] : doc;
  if (!rows.is_array() || rows.empty() || !rows[0].is_array()) fail("matrix must be a nonempty array of rows");
  const std::size_t cols = rows[0].size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != cols) fail("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(rows[r][c], field);
  }
  return m;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path.string());
  out << doc.dump(1) << '\n';
}

}  // namespace homotopelab
