#include "resgraph/classify.hpp"

#include "resgraph/errors.hpp"

namespace resgraph {

bool is_rational(const DualGraph& g) {
  return euler_chi(fundamental_cycle(g)) == 1;
}

bool is_elliptic(const DualGraph& g) {
  return sign(euler_chi(fundamental_cycle(g))) == 0;
}

bool is_minimal_resolution_graph(const DualGraph& g) {
  for (const VertexData& v : g.vertices()) {
    if (v.genus == 0 && v.self_intersection == -1) return false;
  }
  return true;
}

ChiScanResult oracle_chi_nonnegative(const DualGraph& g, long bound_multiplier) {
  if (bound_multiplier < 1) throw DomainError("bound multiplier must be positive");
  const Cycle z = fundamental_cycle(g);
  const Int chi_z = euler_chi(z);
  const Cycle bound = z.scaled(Int(bound_multiplier));

  std::optional<Int> best;
  std::optional<Cycle> attaining;
  CycleStream stream(g, bound);
  while (stream.advance()) {
    Int numerator = stream.current_self_intersection() + stream.current_canonical_dot();
    Int chi = -div_exact(numerator, Int(2));
    if (!best || chi < *best) {
      best = chi;
      attaining = stream.current();
    }
  }
  if (!best) throw DomainError("fundamental cycle bound enumerates no cycles");

  if (sign(chi_z) == 0 && sign(*best) != 0) {
    throw InternalCheckError("elliptic graph with min chi != 0 within bound");
  }
  if (chi_z == 1 && *best != 1) {
    throw InternalCheckError("rational graph with min chi != 1 within bound");
  }
  return {*best, *attaining};
}

Cycle minimally_elliptic_cycle(const DualGraph& g) {
  if (!is_elliptic(g)) {
    throw DomainError("minimally elliptic cycle requires an elliptic graph");
  }
  const Cycle z = fundamental_cycle(g);

  // Coefficient-wise minimum of the chi = 0 cycles below Z_E. A unique
  // minimal element exists iff this vector is itself in the set.
  std::optional<std::vector<Int>> running_min;
  CycleStream stream(g, z);
  while (stream.advance()) {
    Int numerator = stream.current_self_intersection() + stream.current_canonical_dot();
    if (sign(numerator) != 0) continue;  // chi = 0 iff D^2 + K.D = 0
    const auto& c = stream.raw_coefficients();
    if (!running_min) {
      running_min.emplace(c.begin(), c.end());
    } else {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < (*running_min)[i]) (*running_min)[i] = c[i];
      }
    }
  }
  if (!running_min) {
    throw InternalCheckError("elliptic graph has no chi = 0 cycle below Z_E");
  }
  Cycle minimum(g, std::move(*running_min));
  if (!minimum.is_positive() || sign(euler_chi(minimum)) != 0) {
    throw InternalCheckError("chi = 0 cycles below Z_E have no unique minimum");
  }
  std::vector<bool> mask(g.size(), false);
  for (std::size_t i : minimum.support()) mask[i] = true;
  if (connected_components(g, mask).size() != 1) {
    throw InternalCheckError("minimally elliptic cycle has disconnected support");
  }
  return minimum;
}

bool is_minimally_elliptic(const DualGraph& g) {
  const Cycle e_min = minimally_elliptic_cycle(g);  // validates ellipticity
  return is_minimal_resolution_graph(g) && fundamental_cycle(g) == e_min;
}

ClassificationReport classify(const DualGraph& g) {
  require_negative_definite(g);
  const Cycle z = fundamental_cycle(g);
  ClassificationReport report{.chi_fundamental = euler_chi(z),
                              .minimally_elliptic_cycle = std::nullopt,
                              .is_minimally_elliptic = std::nullopt,
                              .degree_value = Int(0),
                              .canonical_cycle = canonical_cycle(g)};
  report.is_rational = report.chi_fundamental == 1;
  report.is_elliptic = sign(report.chi_fundamental) == 0;
  report.is_numerically_gorenstein = report.canonical_cycle.is_integral();
  report.degree_value = -intersect(z, z);
  report.is_minimal_resolution_graph = is_minimal_resolution_graph(g);
  if (report.is_elliptic) {
    report.minimally_elliptic_cycle = minimally_elliptic_cycle(g);
    report.is_minimally_elliptic =
        report.is_minimal_resolution_graph && z == *report.minimally_elliptic_cycle;
  }
  return report;
}

}  // namespace resgraph
