#pragma once

#include <string>
#include <vector>

#include "resgraph/document.hpp"

namespace resgraph {

struct CatalogEntry {
  std::string name;
  std::string description;
};

/// Built-in example graphs, in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();

bool catalog_has(const std::string& name);

/// Builds a fresh document for a built-in graph; throws ParseError for
/// unknown names.
GraphDocument catalog_graph(const std::string& name);

}  // namespace resgraph
