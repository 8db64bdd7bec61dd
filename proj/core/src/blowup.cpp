#include "resgraph/blowup.hpp"

#include <algorithm>

#include "resgraph/errors.hpp"

namespace resgraph {

BlowupRecord::BlowupRecord(const DualGraph& old_graph,
                           std::unique_ptr<const DualGraph> new_graph,
                           BlowupCenter center, std::string new_vertex_id)
    : old_(&old_graph),
      new_(std::move(new_graph)),
      center_(std::move(center)),
      new_id_(std::move(new_vertex_id)) {}

namespace {

std::string fresh_vertex_id(const DualGraph& g) {
  for (long k = 1;; ++k) {
    std::string candidate = "F" + std::to_string(k);
    if (!g.find(candidate)) return candidate;
  }
}

}  // namespace

BlowupRecord blow_up(const DualGraph& g, const BlowupCenter& center) {
  require_negative_definite(g);

  std::vector<VertexData> vertices = g.vertices();
  std::vector<EdgeData> edges = g.edges();
  const std::string new_id = fresh_vertex_id(g);

  if (center.kind == BlowupCenter::Kind::FreePoint) {
    const std::size_t v = g.index_of(center.a);
    vertices[v].self_intersection -= 1;
    edges.push_back({vertices[v].id, new_id, 1});
  } else {
    const std::size_t u = g.index_of(center.a);
    const std::size_t v = g.index_of(center.b);
    if (u == v) throw DomainError("intersection center needs two distinct curves");
    auto edge = std::find_if(edges.begin(), edges.end(), [&](const EdgeData& e) {
      return (e.a == center.a && e.b == center.b) || (e.a == center.b && e.b == center.a);
    });
    if (edge == edges.end()) {
      throw DomainError("curves '" + center.a + "' and '" + center.b +
                        "' do not intersect");
    }
    vertices[u].self_intersection -= 1;
    vertices[v].self_intersection -= 1;
    edge->multiplicity -= 1;
    if (edge->multiplicity == 0) edges.erase(edge);
    edges.push_back({center.a, new_id, 1});
    edges.push_back({center.b, new_id, 1});
  }
  vertices.push_back({new_id, -1, 0});

  auto transformed = std::make_unique<const DualGraph>(std::move(vertices), std::move(edges));
  if (!transformed->is_negative_definite()) {
    throw InternalCheckError("blow-up of a negative definite graph lost definiteness");
  }
  return BlowupRecord(g, std::move(transformed), center, new_id);
}

Cycle pullback(const BlowupRecord& record, const Cycle& d) {
  if (&d.graph() != &record.old_graph()) {
    throw DomainError("cycle does not live on the blown-up graph's source");
  }
  if (!d.is_effective()) throw DomainError("pullback requires an effective cycle");

  std::vector<Int> coeff(d.coefficients());
  Int f_coefficient;
  const BlowupCenter& center = record.center();
  if (center.kind == BlowupCenter::Kind::FreePoint) {
    f_coefficient = d[record.old_graph().index_of(center.a)];
  } else {
    f_coefficient = d[record.old_graph().index_of(center.a)] +
                    d[record.old_graph().index_of(center.b)];
  }
  coeff.push_back(std::move(f_coefficient));
  return Cycle(record.new_graph(), std::move(coeff));
}

bool canonical_pullback_check(const BlowupRecord& record) {
  const DualGraph& old_graph = record.old_graph();
  const auto& k_old = old_graph.canonical_intersections();

  const Cycle f = Cycle::unit(record.new_graph(), record.new_vertex_index());
  if (canonical_dot(f) != -1) return false;

  for (std::size_t i = 0; i < old_graph.size(); ++i) {
    const Cycle lifted = pullback(record, Cycle::unit(old_graph, i));
    if (canonical_dot(lifted) != k_old[i]) return false;
  }
  return true;
}

}  // namespace resgraph
