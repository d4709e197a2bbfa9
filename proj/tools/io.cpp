#include "io.hpp"

#include <fstream>
#include <sstream>

namespace transvect::io {

namespace {

Elem parse_elem(const Field& F, const json& x, const std::string& where) {
  if (!x.is_number_integer()) fail(ErrorCode::ParseError, where + ": field elements are integers");
  const auto v = x.get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= F.order())
    fail(ErrorCode::ParseError, where + ": element " + std::to_string(v) + " outside GF(" + F.name() + ")");
  return static_cast<Elem>(v);
}

std::vector<Elem> parse_entries(const Field& F, const json& xs, const std::string& where) {
  if (!xs.is_array()) fail(ErrorCode::ParseError, where + ": expected an array");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < xs.size(); ++i) out.push_back(parse_elem(F, xs[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, where + ": " + e.what());
  }
}

Vector parse_vector(const Field& F, const json& entries) { return Vector(F, parse_entries(F, entries, "vector")); }

Matrix parse_matrix(const Field& F, const json& rows) {
  if (!rows.is_array() || rows.empty()) fail(ErrorCode::ParseError, "matrix: expected a nonempty array of rows");
  std::vector<std::vector<Elem>> rs;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rs.push_back(parse_entries(F, rows[i], "matrix row " + std::to_string(i)));
    if (rs.back().size() != rs.front().size()) fail(ErrorCode::ParseError, "matrix: ragged rows");
  }
  return Matrix::from_rows(F, rs);
}

GeneratorFile parse_generators(const json& doc) {
  if (!doc.is_object() || !doc.contains("field") || !doc.contains("generators"))
    fail(ErrorCode::ParseError, "expected an object with \"field\" and \"generators\"");
  if (!doc["field"].is_string()) fail(ErrorCode::ParseError, "\"field\" must be a string like \"2^2\"");
  GeneratorFile out{Field::parse(doc["field"].get<std::string>()), {}};
  const json& gens = doc["generators"];
  if (!gens.is_array()) fail(ErrorCode::ParseError, "\"generators\" must be an array");
  std::size_t dim = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    const json& g = gens[i];
    Transvection t;
    try {
      if (g.contains("matrix")) {
        Matrix m = parse_matrix(out.field, g["matrix"]);
        if (!m.square()) fail(ErrorCode::ParseError, where + ": matrix must be square");
        t = Transvection::from_matrix(m);
      } else if (g.contains("v") && g.contains("phi")) {
        t = Transvection(Vector(out.field, parse_entries(out.field, g["v"], where + ".v")),
                         Covector(out.field, parse_entries(out.field, g["phi"], where + ".phi")));
      } else {
        fail(ErrorCode::ParseError, where + ": expected \"v\"/\"phi\" or \"matrix\"");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      fail(e.code(), where + ": " + e.what());
    }
    if (i == 0) dim = t.dimension();
    if (t.dimension() != dim) fail(ErrorCode::DimensionMismatch, where + ": dimension differs from generators[0]");
    out.generators.push_back(std::move(t));
  }
  if (out.generators.empty()) fail(ErrorCode::ParseError, "no generators");
  return out;
}

GeneratorFile read_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_generators(parse_json_text(ss.str(), path));
}

json to_json(std::span<const Elem> xs) {
  json a = json::array();
  for (Elem x : xs) a.push_back(x);
  return a;
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const Word& w) {
  json a = json::array();
  for (const auto& l : w) a.push_back(letter_code(l));
  return a;
}

json to_json(const CycleRecord& c) { return json{{"verts", c.vertices}, {"weight", c.weight}}; }

json generators_json(const GeneratorFile& file) {
  json gens = json::array();
  for (const auto& t : file.generators) gens.push_back(json{{"v", to_json(t.v().entries())}, {"phi", to_json(t.phi().entries())}});
  return json{{"field", file.field.name()}, {"generators", gens}};
}

json to_json(const ClassificationReport& r) {
  json eq = json::array();
  for (const auto& t : r.equivalent_tags) eq.push_back(to_string(t));
  json wit = json::object();
  if (r.symplectic_form) wit["symplectic_gram"] = to_json(r.symplectic_form->gram());
  if (r.unitary_form) wit["unitary_gram"] = to_json(r.unitary_form->gram());
  if (r.quadratic_form) {
    wit["quadratic_coeffs"] = to_json(r.quadratic_form->coefficients());
    wit["witt_sign"] = r.quadratic_form->witt_sign();
  }
  if (r.symmetric_set) {
    json b = json::array();
    for (const auto& v : *r.symmetric_set) b.push_back(to_json(v.entries()));
    wit["symmetric_set"] = b;
  }
  if (r.monomial) {
    json b = json::array();
    for (const auto& v : r.monomial->lines) b.push_back(to_json(v.entries()));
    wit["monomial_lines"] = b;
    wit["monomial_a"] = r.monomial->a;
  }
  if (r.non_symplectic_cycle) wit["non_symplectic_cycle"] = to_json(*r.non_symplectic_cycle);
  if (r.non_unitary_cycle) wit["non_unitary_cycle"] = to_json(*r.non_unitary_cycle);
  json out{{"tag", to_string(r.tag)},
           {"equivalent_tags", eq},
           {"dimension", r.dimension},
           {"field", r.field.name()},
           {"field_degree", r.field_degree},
           {"ambient_degree", r.ambient_degree},
           {"field_status", to_string(r.field_status)},
           {"subfield", r.subfield},
           {"dense_size", r.dense_size},
           {"witnesses", wit}};
  out["order_predicted"] = r.formula_order ? json(*r.formula_order) : json(nullptr);
  out["order_enumerated"] = r.enumerated_order ? json(*r.enumerated_order) : json(nullptr);
  out["notes"] = r.notes;
  return out;
}

json to_json(const Certificate& c) {
  json elems = json::array();
  for (const auto& t : c.elements) elems.push_back(json{{"v", to_json(t.v().entries())}, {"phi", to_json(t.phi().entries())}});
  json words = json::array();
  for (const auto& w : c.words) words.push_back(to_json(w));
  json props = json::array();
  for (const auto& w : c.field_witnesses) props.push_back(json{{"kind", "field_witness"}, {"cycle", to_json(w)}});
  if (c.non_symplectic_cycle) props.push_back(json{{"kind", "non_symplectic_cycle"}, {"cycle", to_json(*c.non_symplectic_cycle)}});
  if (c.non_unitary_cycle) props.push_back(json{{"kind", "non_unitary_cycle"}, {"cycle", to_json(*c.non_unitary_cycle)}});
  props.push_back(json{{"kind", "closure"}, {"connect_up_added", c.connect_up_added}, {"winkle_added", c.winkle_added}});
  return json{{"tag", to_string(c.tag)},
              {"field_degree", c.field_degree},
              {"size", c.elements.size()},
              {"elements", elems},
              {"words", words},
              {"properties", props},
              {"post_checks", c.post_checks},
              {"post_check_failures", c.post_check_failures}};
}

}  // namespace transvect::io
