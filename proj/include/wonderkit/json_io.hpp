#pragma once

#include <json.hpp>
#include <string>

#include "wonderkit/linalg.hpp"
#include "wonderkit/rational.hpp"

namespace wk {

/// Insertion-ordered JSON keeps emitted field order deterministic.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const QVec& v);
Json to_json(const QMat& m);  // row-major array of arrays

/// Accepts "p/q" strings and JSON integers. `where` names the location for diagnostics.
Rational rational_from_json(const Json& j, const std::string& where);
QVec qvec_from_json(const Json& j, const std::string& where);
QMat qmat_from_json(const Json& j, const std::string& where);

/// Parses text, turning nlohmann parse errors into ParseError with byte offsets.
Json parse_json_text(const std::string& text, const std::string& source_name);
Json read_json_file(const std::string& path);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

const Json& require_field(const Json& j, const char* key, const std::string& where);

}  // namespace wk
