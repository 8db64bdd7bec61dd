#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "resgraph/cycle.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/lattice.hpp"

namespace resgraph {

/// The elliptic sequence on a support B: fundamental cycles Z_{B_0} >= ...
/// >= Z_{B_m} of the shrinking supports B_0 = B, B_{i+1} = the connected
/// component through supp(E_min) of the vertices orthogonal to Z_{B_i}.
struct EllipticSequence {
  std::vector<SupportSet> supports;  // B_0 .. B_m
  std::vector<Cycle> cycles;         // Z_{B_0} .. Z_{B_m}
  std::vector<Cycle> partial_sums;   // C_t = sum_{i<=t} Z_{B_i}

  std::size_t length_m() const { return cycles.size() - 1; }
};

/// Builds the sequence. Requires an elliptic graph and a support containing
/// supp(E_min); the iteration stops at the first Z_{B_i} with
/// Z_{B_i} . E_min < 0.
EllipticSequence elliptic_sequence(const DualGraph& g, const SupportSet& b);
EllipticSequence elliptic_sequence(const DualGraph& g);  // on the full graph

struct TomariVerification {
  bool ok = false;
  std::vector<Cycle> found;     // anti-nef chi = 0 cycles within the bound
  std::vector<Cycle> expected;  // the partial sums C_0 .. C_m
};

/// Checks Tomari's characterization by exhaustive enumeration: the cycles
/// 0 < C <= bound_multiplier * C_m supported on B that are anti-nef on B
/// with chi(C) = 0 must be exactly the partial sums of the sequence.
TomariVerification verify_tomari(const DualGraph& g, const SupportSet& b,
                                 long bound_multiplier);

/// m + 1 for the full-graph elliptic sequence; bounds the geometric genus of
/// a numerically Gorenstein elliptic singularity (Yau). Requires both
/// properties of the graph.
Int pg_upper_bound(const DualGraph& g);

/// Checks Z_K = sum of the elliptic-sequence cycles, exactly. Requires an
/// elliptic, numerically Gorenstein, minimal-resolution graph.
bool verify_canonical_identity(const DualGraph& g);

struct MaxellShapeReport {
  bool ok = false;
  std::vector<std::string> chain;  // attached end first, free end last
  std::size_t m = 0;               // elliptic sequence length
  std::string diagnostic;
};

/// Degree-1 shape test: the graph must split as supp(E_min) plus a chain of
/// genus-0 (-2)-curves attached to supp(E_min) at a single vertex with total
/// intersection 1, with chain length equal to m. The empty chain (m = 0) is
/// the degenerate case. Requires elliptic + numerically Gorenstein +
/// minimal-resolution + degree 1.
MaxellShapeReport maxell_shape_check(const DualGraph& g);

/// The maximal reduced connected cycle B with Z.B = 0 containing
/// supp(E_min): the connected component of Z-perp through supp(E_min).
/// Requires Z effective, anti-nef, with Z . E_min = 0.
Cycle compute_B(const DualGraph& g, const Cycle& z);

}  // namespace resgraph
