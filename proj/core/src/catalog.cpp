#include "resgraph/catalog.hpp"

#include "resgraph/errors.hpp"

namespace resgraph {

namespace {

GraphDocument make(std::vector<VertexData> vertices, std::vector<EdgeData> edges) {
  GraphDocument doc;
  doc.graph = std::make_shared<const DualGraph>(std::move(vertices), std::move(edges));
  return doc;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"A1", "one (-2)-curve of genus 0: the ordinary double point"},
      {"E8", "eight (-2)-curves in the E8 tree"},
      {"simple-elliptic-deg1", "one (-1)-curve of genus 1"},
      {"laufer-chain",
       "genus-1 (-1)-curve with a chain of two (-2)-curves: two analytic "
       "structures share this graph"},
      {"genus2-deg2", "one (-2)-curve of genus 2"},
      {"cusp-triangle", "three (-3)-curves of genus 0, pairwise joined"},
      {"nonnegdef", "one 0-curve: fails negative definiteness, for error paths"},
  };
  return entries;
}

bool catalog_has(const std::string& name) {
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.name == name) return true;
  }
  return false;
}

GraphDocument catalog_graph(const std::string& name) {
  if (name == "A1") {
    return make({{"E", -2, 0}}, {});
  }
  if (name == "E8") {
    // Bourbaki ordering: chain E1-E3-E4-E5-E6-E7-E8 with E2 attached to E4
    return make({{"E1", -2, 0},
                 {"E2", -2, 0},
                 {"E3", -2, 0},
                 {"E4", -2, 0},
                 {"E5", -2, 0},
                 {"E6", -2, 0},
                 {"E7", -2, 0},
                 {"E8", -2, 0}},
                {{"E1", "E3", 1},
                 {"E3", "E4", 1},
                 {"E4", "E5", 1},
                 {"E5", "E6", 1},
                 {"E6", "E7", 1},
                 {"E7", "E8", 1},
                 {"E2", "E4", 1}});
  }
  if (name == "simple-elliptic-deg1") {
    return make({{"E", -1, 1}}, {});
  }
  if (name == "laufer-chain") {
    return make({{"E2", -1, 1}, {"E1", -2, 0}, {"E0", -2, 0}},
                {{"E2", "E1", 1}, {"E1", "E0", 1}});
  }
  if (name == "genus2-deg2") {
    return make({{"E", -2, 2}}, {});
  }
  if (name == "cusp-triangle") {
    // Triangle of genus-0 curves. Weights -3 keep the matrix negative
    // definite (all -2 in a closed cycle is only semidefinite).
    return make({{"E1", -3, 0}, {"E2", -3, 0}, {"E3", -3, 0}},
                {{"E1", "E2", 1}, {"E2", "E3", 1}, {"E1", "E3", 1}});
  }
  if (name == "nonnegdef") {
    return make({{"E", 0, 0}}, {});
  }
  throw ParseError("unknown catalog graph '" + name + "'");
}

}  // namespace resgraph
