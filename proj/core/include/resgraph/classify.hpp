#pragma once

#include <optional>

#include "resgraph/cycle.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/lattice.hpp"

namespace resgraph {

/// Everything the graph alone decides about the singularity class.
struct ClassificationReport {
  bool is_rational = false;
  bool is_elliptic = false;
  Int chi_fundamental;
  std::optional<Cycle> minimally_elliptic_cycle;  // present iff elliptic
  std::optional<bool> is_minimally_elliptic;      // present iff elliptic
  bool is_numerically_gorenstein = false;
  Int degree_value;
  QCycle canonical_cycle;
  bool is_minimal_resolution_graph = false;

  /// "rational", "elliptic" or "neither".
  const char* label() const {
    return is_rational ? "rational" : is_elliptic ? "elliptic" : "neither";
  }
};

/// Artin: rational iff chi(Z_E) = 1.
bool is_rational(const DualGraph& g);

/// Wagreich: elliptic iff chi(Z_E) = 0.
bool is_elliptic(const DualGraph& g);

/// No vertex is a genus-0 curve with self-intersection -1.
bool is_minimal_resolution_graph(const DualGraph& g);

struct ChiScanResult {
  Int min_chi;
  Cycle attaining;  // first cycle in enumeration order attaining the minimum
};

/// Exhaustive minimum of chi over 0 < D <= bound_multiplier * Z_E. When the
/// graph is elliptic the minimum must be 0, when rational it must be 1; a
/// discrepancy is an InternalCheckError (it would falsify this library, not
/// the theory).
ChiScanResult oracle_chi_nonnegative(const DualGraph& g, long bound_multiplier);

/// The unique minimal positive cycle with chi = 0, found by enumerating
/// 0 < D <= Z_E (every chi = 0 cycle dominates it and Z_E is one of them).
/// Uniqueness of the minimum and connectedness of its support are asserted.
/// Requires an elliptic graph.
Cycle minimally_elliptic_cycle(const DualGraph& g);

/// True iff the graph is a minimal-resolution graph and the fundamental
/// cycle equals the minimally elliptic cycle. Requires an elliptic graph.
bool is_minimally_elliptic(const DualGraph& g);

/// Full combinatorial classification of a negative definite graph.
ClassificationReport classify(const DualGraph& g);

}  // namespace resgraph
