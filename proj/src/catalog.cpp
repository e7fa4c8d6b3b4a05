#include "kq/catalog.hpp"

#include "kq/alexander.hpp"
#include "kq/error.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>

#ifndef KQ_DEFAULT_CATALOG
#define KQ_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace kq {

namespace {

struct Cache {
  std::mutex mu;
  std::string path;
  std::vector<CatalogEntry> entries;
};

Cache& cache() {
  static Cache c;
  return c;
}

const std::vector<CatalogEntry>& cached_entries() {
  Cache& c = cache();
  std::lock_guard lock(c.mu);
  const std::string path = catalog_path();
  if (c.path != path) {
    c.entries = load_catalog(path);
    c.path = path;
  }
  return c.entries;
}

std::string available_names() {
  std::string out;
  for (const auto& e : cached_entries()) out += (out.empty() ? "" : ", ") + e.name;
  return out;
}

} // namespace

std::string catalog_path() {
  if (const char* env = std::getenv("KQ_CATALOG"); env && *env) return env;
  return KQ_DEFAULT_CATALOG;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open knot catalog '" + path + "'");
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("knot catalog '" + path + "': " + e.what());
  }
  std::vector<CatalogEntry> out;
  try {
    for (const auto& [name, v] : j.at("knots").items())
      out.push_back({name, v.at("pd").get<std::string>(), v.at("determinant").get<long>(),
                     v.at("alexander").get<std::string>(), v.value("source", std::string{})});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("knot catalog '" + path + "': " + e.what());
  }
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : cached_entries()) names.push_back(e.name);
  return names;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : cached_entries())
    if (e.name == name) return e;
  throw ValidationError("unknown catalog knot '" + name + "'; available: " + available_names());
}

Diagram catalog_get(const std::string& name) {
  const CatalogEntry& e = catalog_entry(name);
  Diagram d = resolve_crossings(parse_pd(e.pd));
  const LaurentPoly delta = alexander_polynomial(d);
  const Integer det = knot_determinant(d);
  if (det != e.determinant)
    throw ValidationError("catalog knot '" + name + "': determinant " + det.get_str() + " does not match recorded " +
                          std::to_string(e.determinant));
  const LaurentPoly recorded = LaurentPoly::parse(e.alexander);
  if (!unit_equivalent(delta, recorded) && !unit_equivalent(laurent_mirror(delta), recorded))
    throw ValidationError("catalog knot '" + name + "': Alexander polynomial " + delta.to_string() +
                          " does not match recorded " + recorded.to_string());
  return d;
}

} // namespace kq
