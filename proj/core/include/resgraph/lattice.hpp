#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "resgraph/cycle.hpp"
#include "resgraph/graph.hpp"

namespace resgraph {

/// Non-empty, connected set of vertices — the support a fundamental cycle
/// lives on. Construction validates both properties.
class SupportSet {
 public:
  SupportSet(const DualGraph& g, std::vector<bool> mask);

  static SupportSet full(const DualGraph& g);
  static SupportSet from_ids(const DualGraph& g, const std::vector<std::string>& ids);
  static SupportSet from_indices(const DualGraph& g, const std::vector<std::size_t>& indices);

  const DualGraph& graph() const { return *graph_; }
  bool contains(std::size_t i) const { return mask_[i]; }
  const std::vector<bool>& mask() const { return mask_; }
  std::vector<std::size_t> indices() const;
  std::size_t count() const { return count_; }
  bool is_full() const { return count_ == mask_.size(); }

  /// The reduced cycle with exactly this support.
  Cycle reduced_cycle() const;

  bool operator==(const SupportSet& other) const {
    return graph_ == &other.graph() && mask_ == other.mask();
  }

 private:
  const DualGraph* graph_;
  std::vector<bool> mask_;
  std::size_t count_;
};

/// Connected components of the subgraph induced by `mask`, each as a list of
/// vertex indices in canonical order.
std::vector<std::vector<std::size_t>> connected_components(const DualGraph& g,
                                                           const std::vector<bool>& mask);

/// True iff D . E_i <= 0 for every vertex of s. Requires D effective.
bool is_anti_nef(const Cycle& d, const SupportSet& s);

struct FundamentalCycleResult {
  Cycle cycle;
  std::size_t steps;  // additions performed by the Laufer iteration
};

/// Laufer's computation sequence: start with the reduced cycle on s and
/// repeatedly add the lowest-index vertex whose intersection product is
/// still positive. Negative definiteness (checked) guarantees termination,
/// and the result is the minimal anti-nef cycle with support exactly s.
FundamentalCycleResult fundamental_cycle_with_steps(const DualGraph& g, const SupportSet& s);
Cycle fundamental_cycle(const DualGraph& g, const SupportSet& s);
Cycle fundamental_cycle(const DualGraph& g);  // on the full vertex set

/// -Z_E^2 for the fundamental cycle of the full graph; a positive integer,
/// independent of the resolution.
Int degree(const DualGraph& g);

/// Streams every cycle D with 0 < D <= bound in ascending lexicographic
/// order (first vertex most significant). Memory stays proportional to one
/// cycle; intersection products D . E_i are maintained incrementally and
/// exposed for enumeration-based checks.
class CycleStream {
 public:
  CycleStream(const DualGraph& g, const Cycle& bound);

  /// Step to the next cycle; false once the range is exhausted.
  bool advance();

  const DualGraph& graph() const { return *graph_; }
  const std::vector<long>& raw_coefficients() const { return coeff_; }
  const std::vector<Int>& products() const { return products_; }
  Cycle current() const;

  /// D^2 and K.D of the current cycle.
  Int current_self_intersection() const;
  Int current_canonical_dot() const;

  /// Convenience: next cycle as a value, or nullopt at the end.
  std::optional<Cycle> next();

 private:
  void set_coefficient(std::size_t i, long value);

  const DualGraph* graph_;
  std::vector<long> bound_;
  std::vector<long> coeff_;
  std::vector<Int> products_;
};

/// Total number of cycles the stream over `bound` yields.
Int count_cycles_upto(const Cycle& bound);

/// Exhaustive independent route to the fundamental cycle: enumerate every
/// cycle up to bound_multiplier * Z_s, keep those with support exactly s
/// that are anti-nef on s, and return the unique coefficient-wise minimal
/// one. Uniqueness of the minimum is asserted. If no candidate exists
/// within the bound, an OracleBoundError reports that the bound must rise.
Cycle oracle_minimal_anti_nef(const DualGraph& g, const SupportSet& s,
                              long bound_multiplier);

}  // namespace resgraph
