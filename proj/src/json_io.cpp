#include "sharplat/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sharplat {

namespace {

std::vector<std::string> read_names(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::BadSchema, "document must be a JSON object");
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw Error(ErrorKind::BadSchema, "\"elements\" must be an array of strings");
  }
  std::vector<std::string> names;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw Error(ErrorKind::BadSchema, "\"elements\" must be an array of strings");
    names.push_back(e.get<std::string>());
  }
  return names;
}

std::vector<std::vector<bool>> read_leq(const Json& doc, std::size_t n) {
  if (!doc.contains("leq") || !doc["leq"].is_array() || doc["leq"].size() != n) {
    throw Error(ErrorKind::BadSchema, "\"leq\" must be an n x n array");
  }
  std::vector<std::vector<bool>> leq;
  for (const auto& row : doc["leq"]) {
    if (!row.is_array() || row.size() != n) throw Error(ErrorKind::BadSchema, "\"leq\" must be an n x n array");
    std::vector<bool> r;
    for (const auto& v : row) {
      if (v.is_boolean()) {
        r.push_back(v.get<bool>());
      } else if (v.is_number_integer() && (v.get<long long>() == 0 || v.get<long long>() == 1)) {
        r.push_back(v.get<long long>() == 1);
      } else {
        throw Error(ErrorKind::BadSchema, "\"leq\" entries must be 0 or 1");
      }
    }
    leq.push_back(std::move(r));
  }
  return leq;
}

}  // namespace

FinitePoset parse_poset(const Json& doc) {
  auto names = read_names(doc);
  auto leq = read_leq(doc, names.size());
  return FinitePoset::create(std::move(names), leq);
}

FiniteMultLattice parse_lattice(const Json& doc) {
  auto names = read_names(doc);
  const std::size_t n = names.size();
  auto leq = read_leq(doc, n);
  if (!doc.contains("mult") || !doc["mult"].is_array() || doc["mult"].size() != n) {
    throw Error(ErrorKind::BadSchema, "\"mult\" must be an n x n array");
  }
  std::vector<std::vector<std::size_t>> mult;
  for (const auto& row : doc["mult"]) {
    if (!row.is_array() || row.size() != n) throw Error(ErrorKind::BadSchema, "\"mult\" must be an n x n array");
    std::vector<std::size_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= static_cast<long long>(n)) {
        throw Error(ErrorKind::BadSchema, "\"mult\" entries must be element indices");
      }
      r.push_back(v.get<std::size_t>());
    }
    mult.push_back(std::move(r));
  }
  auto lattice = FiniteMultLattice::create(std::move(names), leq, mult);
  for (const auto& [key, value] : doc.items()) {
    if (key == "elements" || key == "leq" || key == "mult") continue;
    if (!value.is_string()) throw Error(ErrorKind::BadSchema, "unknown non-string field \"" + key + "\"");
    lattice = lattice.with_annotation(key, value.get<std::string>());
  }
  return lattice;
}

Json to_json(const FinitePoset& poset) {
  Json doc;
  doc["elements"] = poset.names();
  Json leq = Json::array();
  for (auto x : element_range(poset.size())) {
    Json row = Json::array();
    for (auto y : element_range(poset.size())) row.push_back(poset.leq(x, y) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  doc["leq"] = std::move(leq);
  return doc;
}

Json to_json(const FiniteMultLattice& lattice) {
  Json doc = to_json(lattice.poset());
  Json mult = Json::array();
  for (auto x : lattice.elements()) {
    Json row = Json::array();
    for (auto y : lattice.elements()) row.push_back(lattice.mul(x, y).index);
    mult.push_back(std::move(row));
  }
  doc["mult"] = std::move(mult);
  for (const auto& [key, value] : lattice.annotations()) doc[key] = value;
  return doc;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::BadSchema, path.string() + ": " + e.what());
  }
}

std::string dump(const Json& doc, bool pretty) { return doc.dump(pretty ? 2 : -1) + "\n"; }

}  // namespace sharplat
