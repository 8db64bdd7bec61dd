#pragma once

#include <memory>
#include <optional>
#include <string>

#include "resgraph/cycle.hpp"
#include "resgraph/graph.hpp"

namespace resgraph {

/// Where the point being blown up sits: on a single curve (free point) or
/// at an intersection point of two curves.
struct BlowupCenter {
  enum class Kind { FreePoint, IntersectionPoint };
  Kind kind = Kind::FreePoint;
  std::string a;
  std::string b;  // empty for a free point

  static BlowupCenter free_point(std::string vertex) {
    return {Kind::FreePoint, std::move(vertex), {}};
  }
  static BlowupCenter intersection_point(std::string first, std::string second) {
    return {Kind::IntersectionPoint, std::move(first), std::move(second)};
  }
};

/// One monoidal transform: the new graph (old vertices in order, then the
/// exceptional (-1)-vertex), plus enough data to pull cycles back.
class BlowupRecord {
 public:
  BlowupRecord(const DualGraph& old_graph, std::unique_ptr<const DualGraph> new_graph,
               BlowupCenter center, std::string new_vertex_id);

  const DualGraph& old_graph() const { return *old_; }
  const DualGraph& new_graph() const { return *new_; }
  const BlowupCenter& center() const { return center_; }
  const std::string& new_vertex_id() const { return new_id_; }
  std::size_t new_vertex_index() const { return new_->size() - 1; }

 private:
  const DualGraph* old_;
  std::unique_ptr<const DualGraph> new_;
  BlowupCenter center_;
  std::string new_id_;
};

/// Blows up the given center. Free point on E_i: weight of E_i drops by 1
/// and a unit edge to the new (-1)-vertex appears. Intersection point of
/// E_i, E_j: both weights drop by 1, one unit of the E_i-E_j multiplicity is
/// removed, and the new vertex joins both. The new vertex id is the first
/// unused "F1", "F2", ... The transform of a negative definite graph stays
/// negative definite (asserted).
BlowupRecord blow_up(const DualGraph& g, const BlowupCenter& center);

/// Total transform of a cycle: old coefficients are kept and the new vertex
/// receives the coefficient at the center (free point) or the sum of the two
/// center coefficients (intersection point). Satisfies pullback(D) . F = 0
/// and pullback(D) . pullback(D') = D . D'. Requires D effective.
Cycle pullback(const BlowupRecord& record, const Cycle& d);

/// Verifies K_new . pullback(E_i) = K_old . E_i for every vertex and
/// K_new . F = -1.
bool canonical_pullback_check(const BlowupRecord& record);

}  // namespace resgraph
