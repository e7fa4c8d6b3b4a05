#pragma once

#include "kq/diagram.hpp"

#include <string>
#include <vector>

namespace kq {

struct CatalogEntry {
  std::string name;
  std::string pd;
  long determinant = 1;
  std::string alexander; // published Alexander polynomial, text form
  std::string source;
};

/// Path of the bundled knot table; the KQ_CATALOG environment variable overrides it.
std::string catalog_path();

/// Raw entries in file order. Throws ParseError on malformed files.
std::vector<CatalogEntry> load_catalog(const std::string& path = catalog_path());

/// Names in file order.
std::vector<std::string> catalog_names();

/// Loads, parses and validates one entry: Delta(1) = +-1, |Delta(-1)| equals
/// the recorded determinant, and Delta matches the recorded polynomial up to
/// units and mirror image. Throws ValidationError listing the available
/// names for unknown entries, and ValidationError if validation fails.
Diagram catalog_get(const std::string& name);

const CatalogEntry& catalog_entry(const std::string& name);

} // namespace kq
