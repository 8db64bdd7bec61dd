#include "resgraph/elliptic.hpp"

#include <algorithm>

#include "resgraph/classify.hpp"
#include "resgraph/errors.hpp"

namespace resgraph {

namespace {

// Connected component of `mask` containing all of `seed`; empty when the
// seed is not covered by one component.
std::vector<bool> component_through(const DualGraph& g, const std::vector<bool>& mask,
                                    const std::vector<std::size_t>& seed) {
  for (const auto& component : connected_components(g, mask)) {
    std::vector<bool> cmask(g.size(), false);
    for (std::size_t i : component) cmask[i] = true;
    if (std::all_of(seed.begin(), seed.end(), [&](std::size_t i) { return cmask[i]; })) {
      return cmask;
    }
  }
  return {};
}

}  // namespace

EllipticSequence elliptic_sequence(const DualGraph& g, const SupportSet& b) {
  if (&b.graph() != &g) throw DomainError("support set belongs to a different graph");
  if (!is_elliptic(g)) throw DomainError("elliptic sequence requires an elliptic graph");
  const Cycle e_min = minimally_elliptic_cycle(g);
  const auto e_min_support = e_min.support();
  for (std::size_t i : e_min_support) {
    if (!b.contains(i)) {
      throw DomainError("support must contain the minimally elliptic cycle's support");
    }
  }

  EllipticSequence seq;
  SupportSet current = b;
  for (;;) {
    Cycle z = fundamental_cycle(g, current);
    seq.supports.push_back(current);
    seq.cycles.push_back(z);
    seq.partial_sums.push_back(seq.partial_sums.empty() ? z
                                                        : seq.partial_sums.back() + z);
    if (sign(intersect(z, e_min)) < 0) break;

    // next support: vertices of B_i orthogonal to Z_{B_i}, component through
    // supp(E_min)
    const auto products = intersection_products(z);
    std::vector<bool> zero_set(g.size(), false);
    for (std::size_t i = 0; i < g.size(); ++i) {
      zero_set[i] = current.contains(i) && sign(products[i]) == 0;
    }
    std::vector<bool> next = component_through(g, zero_set, e_min_support);
    if (next.empty()) {
      throw InternalCheckError("elliptic sequence lost the minimally elliptic support");
    }
    SupportSet next_support(g, std::move(next));
    if (next_support.count() >= current.count()) {
      throw InternalCheckError("elliptic sequence support did not shrink");
    }
    current = next_support;
  }
  return seq;
}

EllipticSequence elliptic_sequence(const DualGraph& g) {
  return elliptic_sequence(g, SupportSet::full(g));
}

TomariVerification verify_tomari(const DualGraph& g, const SupportSet& b,
                                 long bound_multiplier) {
  if (bound_multiplier < 1) throw DomainError("bound multiplier must be positive");
  const EllipticSequence seq = elliptic_sequence(g, b);

  TomariVerification result;
  result.expected = seq.partial_sums;

  const Cycle bound = seq.partial_sums.back().scaled(Int(bound_multiplier));
  CycleStream stream(g, bound);
  while (stream.advance()) {
    // cycles in the box are supported on B automatically (the bound is);
    // anti-nef on B first, then chi = 0
    const auto& p = stream.products();
    bool anti_nef = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (b.contains(i) && sign(p[i]) > 0) {
        anti_nef = false;
        break;
      }
    }
    if (!anti_nef) continue;
    Int numerator = stream.current_self_intersection() + stream.current_canonical_dot();
    if (sign(numerator) != 0) continue;
    result.found.push_back(stream.current());
  }

  auto key = [](const Cycle& c) { return c.coefficients(); };
  std::vector<std::vector<Int>> found_keys, expected_keys;
  for (const Cycle& c : result.found) found_keys.push_back(key(c));
  for (const Cycle& c : result.expected) expected_keys.push_back(key(c));
  std::sort(found_keys.begin(), found_keys.end());
  std::sort(expected_keys.begin(), expected_keys.end());
  result.ok = found_keys == expected_keys;
  return result;
}

Int pg_upper_bound(const DualGraph& g) {
  if (!is_elliptic(g)) throw DomainError("p_g bound requires an elliptic graph");
  if (!is_numerically_gorenstein(g)) {
    throw DomainError("p_g bound requires a numerically Gorenstein graph");
  }
  return Int(elliptic_sequence(g).length_m() + 1);
}

bool verify_canonical_identity(const DualGraph& g) {
  if (!is_elliptic(g)) throw DomainError("canonical identity requires an elliptic graph");
  if (!is_numerically_gorenstein(g)) {
    throw DomainError("canonical identity requires a numerically Gorenstein graph");
  }
  if (!is_minimal_resolution_graph(g)) {
    throw DomainError("canonical identity requires a minimal-resolution graph");
  }
  const EllipticSequence seq = elliptic_sequence(g);
  const Cycle sum = seq.partial_sums.back();
  return canonical_cycle(g) == QCycle(sum);
}

MaxellShapeReport maxell_shape_check(const DualGraph& g) {
  if (!is_elliptic(g)) throw DomainError("shape check requires an elliptic graph");
  if (!is_numerically_gorenstein(g)) {
    throw DomainError("shape check requires a numerically Gorenstein graph");
  }
  if (!is_minimal_resolution_graph(g)) {
    throw DomainError("shape check requires a minimal-resolution graph");
  }
  if (degree(g) != 1) throw DomainError("shape check requires degree 1");

  MaxellShapeReport report;
  const Cycle e_min = minimally_elliptic_cycle(g);
  report.m = elliptic_sequence(g).length_m();

  std::vector<bool> in_emin(g.size(), false);
  for (std::size_t i : e_min.support()) in_emin[i] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!in_emin[i]) rest.push_back(i);
  }

  if (rest.empty()) {
    report.ok = report.m == 0;
    report.diagnostic = report.ok
                            ? "empty chain; E = supp(E_min), m = 0"
                            : "no chain vertices but elliptic sequence has m = " +
                                  std::to_string(report.m);
    return report;
  }

  auto fail = [&](std::string why) {
    report.ok = false;
    report.diagnostic = std::move(why);
    return report;
  };

  for (std::size_t i : rest) {
    const VertexData& v = g.vertex(i);
    if (v.genus != 0 || v.self_intersection != -2) {
      return fail("vertex '" + v.id + "' outside supp(E_min) is not a genus-0 (-2)-curve");
    }
  }

  // the complement must be a simple chain with exactly one unit attachment
  // to supp(E_min)
  std::size_t attach_vertex = g.size();
  long attach_total = 0;
  std::vector<std::size_t> chain_degree(g.size(), 0);
  for (std::size_t i : rest) {
    for (const auto& [j, mult] : g.neighbors(i)) {
      if (in_emin[j]) {
        attach_total += mult;
        attach_vertex = i;
      } else {
        if (mult != 1) return fail("chain edges must have multiplicity 1");
        chain_degree[i] += static_cast<std::size_t>(mult);
      }
    }
  }
  if (attach_total != 1) {
    return fail("chain attaches to supp(E_min) with total intersection " +
                std::to_string(attach_total) + ", expected 1");
  }

  std::vector<bool> rest_mask(g.size(), false);
  for (std::size_t i : rest) rest_mask[i] = true;
  if (connected_components(g, rest_mask).size() != 1) {
    return fail("complement of supp(E_min) is not connected");
  }
  for (std::size_t i : rest) {
    if (chain_degree[i] > 2) return fail("complement of supp(E_min) branches");
  }

  // walk from the attached end to the free end
  std::vector<std::size_t> order{attach_vertex};
  std::vector<bool> used(g.size(), false);
  used[attach_vertex] = true;
  while (order.size() < rest.size()) {
    std::size_t tail = order.back();
    std::size_t next = g.size();
    for (const auto& [j, mult] : g.neighbors(tail)) {
      if (rest_mask[j] && !used[j]) {
        next = j;
        break;
      }
    }
    if (next == g.size()) return fail("complement of supp(E_min) is not a chain");
    used[next] = true;
    order.push_back(next);
  }
  std::size_t free_end = order.back();
  if (order.size() > 1 && chain_degree[free_end] != 1) {
    return fail("chain free end has unexpected degree");
  }

  if (report.m != rest.size()) {
    return fail("chain length " + std::to_string(rest.size()) +
                " does not match elliptic sequence m = " + std::to_string(report.m));
  }
  const Int head_product = intersect(e_min, Cycle::unit(g, attach_vertex));
  if (head_product != 1) {
    return fail("E_min . (chain head) = " + to_string(head_product) + ", expected 1");
  }

  for (std::size_t i : order) report.chain.push_back(g.vertex(i).id);
  report.ok = true;
  report.diagnostic = "chain (attached end first): ";
  for (std::size_t i = 0; i < report.chain.size(); ++i) {
    if (i) report.diagnostic += " - ";
    report.diagnostic += report.chain[i];
  }
  report.diagnostic += "; m = " + std::to_string(report.m);
  return report;
}

Cycle compute_B(const DualGraph& g, const Cycle& z) {
  if (&z.graph() != &g) throw DomainError("cycle belongs to a different graph");
  if (!is_elliptic(g)) throw DomainError("compute_B requires an elliptic graph");
  if (!z.is_effective()) throw DomainError("compute_B requires an effective cycle");
  if (!is_anti_nef(z, SupportSet::full(g))) {
    throw DomainError("compute_B requires an anti-nef cycle");
  }
  const Cycle e_min = minimally_elliptic_cycle(g);
  if (sign(intersect(z, e_min)) != 0) {
    throw DomainError("compute_B requires Z . E_min = 0");
  }

  const Cycle perp = d_perp(z);
  std::vector<bool> mask(g.size(), false);
  for (std::size_t i : perp.support()) mask[i] = true;
  std::vector<bool> component = component_through(g, mask, e_min.support());
  if (component.empty()) {
    throw InternalCheckError("Z-perp does not contain supp(E_min) in one component");
  }
  std::vector<Int> coeff(g.size(), Int(0));
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (component[i]) coeff[i] = 1;
  }
  return Cycle(g, std::move(coeff));
}

}  // namespace resgraph
