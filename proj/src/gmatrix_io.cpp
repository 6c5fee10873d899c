#include "capelli/gmatrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace capelli {

namespace {

std::vector<int> int_row(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::domain_error(std::string("expected an integer array \"") + key +
                            "\"");
  std::vector<int> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer())
      throw std::domain_error(std::string("row \"") + key +
                              "\" holds a non-integer entry");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

GMatrix gmatrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::domain_error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw std::domain_error("expected an object with an integer \"n\"");
  GMatrix g;
  g.n = j["n"].get<int>();
  g.a = int_row(j, "a");
  g.b = int_row(j, "b");
  g.d = int_row(j, "d");
  return g;
}

GMatrix gmatrix_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return gmatrix_from_json(text.str());
}

std::string gmatrix_to_json(const GMatrix& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["a"] = g.a;
  j["b"] = g.b;
  j["d"] = g.d;
  return j.dump();
}

}  // namespace capelli
