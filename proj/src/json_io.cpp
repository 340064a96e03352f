#include "wonderkit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "wonderkit/errors.hpp"

namespace wk {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QVec& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

Json to_json(const QMat& m) {
  Json arr = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) arr.push_back(to_json(m.row(r)));
  return arr;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
  throw ParseError(where + ": expected a rational string \"p/q\" or an integer");
}

QVec qvec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  QVec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

QMat qmat_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rows");
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < j.size(); ++i)
    rows.push_back(qvec_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ParseError(where + ": ragged rows");
  return QMat::from_rows(rows);
}

Json parse_json_text(const std::string& text, const std::string& source_name) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source_name + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const Json& require_field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

}  // namespace wk
