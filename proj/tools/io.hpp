#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "transvect/classify.hpp"

namespace transvect::io {

using json = nlohmann::ordered_json;

struct GeneratorFile {
  Field field;
  std::vector<Transvection> generators;
};

// {"field": "p^f", "generators": [{"v": [...], "phi": [...]} | {"matrix": [[...]]}]}
GeneratorFile parse_generators(const json& doc);
GeneratorFile read_generators(const std::string& path);
json generators_json(const GeneratorFile& file);

json parse_json_text(const std::string& text, const std::string& where);
Matrix parse_matrix(const Field& field, const json& rows);
Vector parse_vector(const Field& field, const json& entries);

json to_json(std::span<const Elem> xs);
json to_json(const Matrix& m);
json to_json(const Word& w);
json to_json(const CycleRecord& c);
json to_json(const ClassificationReport& r);
json to_json(const Certificate& c);

}  // namespace transvect::io
