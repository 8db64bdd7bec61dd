#include "resgraph/graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "resgraph/errors.hpp"

namespace resgraph {

namespace {

// Fraction-free Bareiss elimination. After eliminating column k-1 the pivot
// at (k, k) equals the determinant of the leading (k+1) x (k+1) minor, so the
// Sylvester signs can be read off pivot by pivot.
bool sylvester_negative_definite(std::vector<Int> m, std::size_t n) {
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Int& pivot = m[k * n + k];
    const int want = (k % 2 == 0) ? -1 : 1;  // sign of det of (k+1)-minor
    if (sign(pivot) != want) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m[i * n + j] * pivot - m[i * n + k] * m[k * n + j];
        m[i * n + j] = div_exact(t, prev);
      }
    }
    prev = pivot;
  }
  return true;
}

}  // namespace

DualGraph::DualGraph(std::vector<VertexData> vertices, std::vector<EdgeData> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const std::size_t n = vertices_.size();
  if (n == 0) throw DomainError("graph must have at least one vertex");

  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexData& v = vertices_[i];
    if (v.id.empty()) throw DomainError("vertex id must be non-empty");
    if (v.genus < 0) throw DomainError("vertex '" + v.id + "' has negative genus");
    if (!index.emplace(v.id, i).second) {
      throw DomainError("duplicate vertex id '" + v.id + "'");
    }
  }

  matrix_.assign(n * n, Int(0));
  adjacency_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    matrix_[i * n + i] = vertices_[i].self_intersection;
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const EdgeData& e : edges_) {
    auto ia = index.find(e.a);
    auto ib = index.find(e.b);
    if (ia == index.end() || ib == index.end()) {
      throw DomainError("edge endpoint '" + (ia == index.end() ? e.a : e.b) +
                        "' is not a vertex");
    }
    std::size_t a = ia->second, b = ib->second;
    if (a == b) throw DomainError("self-loop on vertex '" + e.a + "' is not allowed");
    if (e.multiplicity < 1) {
      throw DomainError("edge " + e.a + "-" + e.b + " has multiplicity < 1");
    }
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw DomainError("duplicate edge record for pair " + e.a + "-" + e.b);
    }
    matrix_[a * n + b] = e.multiplicity;
    matrix_[b * n + a] = e.multiplicity;
    adjacency_[a].emplace_back(b, e.multiplicity);
    adjacency_[b].emplace_back(a, e.multiplicity);
  }

  // connectivity (the exceptional set of one singularity is connected)
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& [w, mult] : adjacency_[v]) {
      if (!reached[w]) {
        reached[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != n) throw DomainError("graph is disconnected");

  k_dot_.reserve(n);
  for (const VertexData& v : vertices_) {
    k_dot_.emplace_back(-v.self_intersection + 2 * v.genus - 2);
  }

  negative_definite_ = sylvester_negative_definite(matrix_, n);
}

std::optional<std::size_t> DualGraph::find(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t DualGraph::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw DomainError("unknown vertex id '" + std::string(id) + "'");
}

void require_negative_definite(const DualGraph& g) {
  if (!g.is_negative_definite()) {
    throw DomainError("intersection matrix is not negative definite");
  }
}

}  // namespace resgraph
