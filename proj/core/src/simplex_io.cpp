#include "simplexvol/errors.hpp"
#include "simplexvol/simplex.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace simplexvol {

SimplexSpec simplex_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ShapeError(std::string("malformed simplex JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() ||
      !doc.contains("squared_lengths") || !doc["squared_lengths"].is_array()) {
    throw ShapeError(R"(simplex JSON needs {"n": <int>, "squared_lengths": [...]})");
  }
  const int n = doc["n"].get<int>();
  const auto& entries = doc["squared_lengths"];

  // Integers and "p/q" strings select the exact path; any float falls back to doubles.
  bool exact = true;
  for (const auto& e : entries) {
    if (e.is_number_float()) {
      exact = false;
    } else if (!e.is_number_integer() && !e.is_string()) {
      throw ShapeError("squared_lengths entries must be numbers or \"p/q\" strings");
    }
  }
  if (exact) {
    std::vector<Rational> values;
    values.reserve(entries.size());
    for (const auto& e : entries) {
      values.push_back(e.is_string() ? parse_rational(e.get<std::string>())
                                     : Rational(Integer(std::to_string(e.get<long long>()))));
    }
    return SimplexSpec(n, std::move(values));
  }
  std::vector<double> values;
  values.reserve(entries.size());
  for (const auto& e : entries) {
    values.push_back(e.is_string() ? parse_rational(e.get<std::string>()).get_d() : e.get<double>());
  }
  return SimplexSpec(n, std::move(values));
}

SimplexSpec read_simplex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return simplex_from_json(buffer.str());
}

std::string simplex_to_json(const SimplexSpec& spec) {
  nlohmann::json doc;
  doc["n"] = spec.dimension();
  nlohmann::json entries = nlohmann::json::array();
  if (spec.has_exact()) {
    for (const Rational& v : spec.exact_squared_lengths()) {
      entries.push_back(to_string(v));
    }
  } else {
    for (double v : spec.squared_lengths()) {
      entries.push_back(v);
    }
  }
  doc["squared_lengths"] = std::move(entries);
  return doc.dump();
}

}  // namespace simplexvol
