#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resgraph/numeric.hpp"

namespace resgraph {

/// One exceptional curve: stable string id, self-intersection number and
/// geometric genus of the curve.
struct VertexData {
  std::string id;
  long self_intersection = 0;
  long genus = 0;
};

/// Undirected edge between two distinct curves; multiplicity is the
/// intersection number of the pair (>= 1).
struct EdgeData {
  std::string a;
  std::string b;
  long multiplicity = 1;
};

/// Weighted dual graph of a resolution. Immutable after construction; all
/// derived data (intersection matrix, adjacency, negative definiteness,
/// canonical intersection numbers) is precomputed, so const access is
/// thread-safe.
///
/// Construction validates structure: non-empty vertex set, unique non-empty
/// ids, genus >= 0, edges between distinct existing vertices with
/// multiplicity >= 1, at most one edge record per pair, and connectivity.
/// Negative definiteness is *not* required here — it is recorded as a flag
/// so that deliberately bad graphs can be loaded for diagnostics — but every
/// lattice algorithm that needs it checks the flag first.
class DualGraph {
 public:
  DualGraph(std::vector<VertexData> vertices, std::vector<EdgeData> edges);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<VertexData>& vertices() const { return vertices_; }
  const VertexData& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<EdgeData>& edges() const { return edges_; }

  std::optional<std::size_t> find(std::string_view id) const;

  /// Index of a vertex id; throws DomainError when absent.
  std::size_t index_of(std::string_view id) const;

  /// Intersection matrix entry E_i . E_j (diagonal: self-intersection).
  const Int& intersection(std::size_t i, std::size_t j) const {
    return matrix_[i * vertices_.size() + j];
  }

  /// Adjacent vertices of i with edge multiplicities (diagonal excluded).
  const std::vector<std::pair<std::size_t, long>>& neighbors(std::size_t i) const {
    return adjacency_[i];
  }

  /// Sylvester test with exact integer minors: true iff the k-th leading
  /// principal minor has sign (-1)^k for every k.
  bool is_negative_definite() const { return negative_definite_; }

  /// K . E_i per vertex, from adjunction: -self_intersection + 2 genus - 2.
  const std::vector<Int>& canonical_intersections() const { return k_dot_; }

 private:
  std::vector<VertexData> vertices_;
  std::vector<EdgeData> edges_;
  std::vector<Int> matrix_;
  std::vector<std::vector<std::pair<std::size_t, long>>> adjacency_;
  std::vector<Int> k_dot_;
  bool negative_definite_ = false;
};

/// Throws DomainError unless the intersection matrix is negative definite.
void require_negative_definite(const DualGraph& g);

}  // namespace resgraph
