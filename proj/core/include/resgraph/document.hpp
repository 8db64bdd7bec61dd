#pragma once

#include <memory>
#include <optional>
#include <string>

#include "resgraph/graph.hpp"
#include "resgraph/numeric.hpp"

namespace resgraph {

/// User-asserted analytic data the graph cannot determine. Never feeds into
/// combinatorial outputs; only into clearly labeled conditional reports.
struct AnalyticHints {
  std::optional<Int> pg;
  std::optional<bool> gorenstein;
};

/// A graph plus optional analytic hints, as carried by the JSON container.
struct GraphDocument {
  std::string schema_version = "1";
  std::shared_ptr<const DualGraph> graph;
  std::optional<AnalyticHints> analytic_hints;
};

}  // namespace resgraph
