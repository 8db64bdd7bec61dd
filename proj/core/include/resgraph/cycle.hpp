#pragma once

#include <string>
#include <utility>
#include <vector>

#include "resgraph/graph.hpp"
#include "resgraph/numeric.hpp"

namespace resgraph {

/// Integer divisor supported on the exceptional curves of one graph.
/// Coefficients are stored in the graph's canonical vertex order. A cycle is
/// bound to the graph object it was created on; mixing graphs is an error.
class Cycle {
 public:
  explicit Cycle(const DualGraph& g) : graph_(&g), coeff_(g.size(), Int(0)) {}
  Cycle(const DualGraph& g, std::vector<Int> coefficients);

  static Cycle unit(const DualGraph& g, std::size_t index);

  /// Build from (id, coefficient) pairs; missing ids default to 0.
  static Cycle from_ids(const DualGraph& g,
                        const std::vector<std::pair<std::string, Int>>& entries);

  const DualGraph& graph() const { return *graph_; }
  std::size_t size() const { return coeff_.size(); }
  const Int& operator[](std::size_t i) const { return coeff_[i]; }
  const std::vector<Int>& coefficients() const { return coeff_; }

  bool is_zero() const;
  bool is_effective() const;  // all coefficients >= 0
  bool is_positive() const;   // effective and nonzero
  bool is_reduced() const;    // all coefficients in {0, 1}
  std::vector<std::size_t> support() const;

  bool operator==(const Cycle& other) const;
  bool operator!=(const Cycle& other) const { return !(*this == other); }

  /// Coefficient-wise comparison (partial order).
  bool leq(const Cycle& other) const;

  Cycle operator+(const Cycle& other) const;
  Cycle operator-(const Cycle& other) const;
  Cycle scaled(const Int& factor) const;

 private:
  const DualGraph* graph_;
  std::vector<Int> coeff_;
};

/// Rational divisor; same layout as Cycle with exact rational coefficients.
class QCycle {
 public:
  explicit QCycle(const DualGraph& g) : graph_(&g), coeff_(g.size(), Rat(0)) {}
  QCycle(const DualGraph& g, std::vector<Rat> coefficients);
  explicit QCycle(const Cycle& c);

  const DualGraph& graph() const { return *graph_; }
  std::size_t size() const { return coeff_.size(); }
  const Rat& operator[](std::size_t i) const { return coeff_[i]; }
  const std::vector<Rat>& coefficients() const { return coeff_; }

  bool is_integral() const;

  /// Rounds down to an integer cycle; every coefficient must be integral.
  Cycle to_cycle() const;

  bool operator==(const QCycle& other) const;
  bool operator!=(const QCycle& other) const { return !(*this == other); }

 private:
  const DualGraph* graph_;
  std::vector<Rat> coeff_;
};

/// Intersection numbers D . E_i for every vertex, in graph order.
std::vector<Int> intersection_products(const Cycle& d);
std::vector<Rat> intersection_products(const QCycle& d);

/// Symmetric bilinear intersection form. Mismatched graphs -> DomainError.
Int intersect(const Cycle& d, const Cycle& f);
Rat intersect(const QCycle& d, const QCycle& f);
Rat intersect(const Cycle& d, const QCycle& f);
Rat intersect(const QCycle& d, const Cycle& f);

/// K . D via the precomputed adjunction numbers.
Int canonical_dot(const Cycle& d);
Rat canonical_dot(const QCycle& d);

/// chi(D) = -(D^2 + K.D)/2. Requires D effective; the numerator is always
/// even for integral cycles (checked).
Int euler_chi(const Cycle& d);

/// p_a(D) = 1 - chi(D). Requires D > 0.
Int arithmetic_genus(const Cycle& d);

/// The unique rational cycle with (K + Z_K) . E_i = 0 for every vertex,
/// by exact rational elimination. Requires a negative definite graph.
QCycle canonical_cycle(const DualGraph& g);

/// True iff every coefficient of the canonical cycle is an integer.
bool is_numerically_gorenstein(const DualGraph& g);

/// Reduced cycle on the vertices orthogonal to D (those with D . E_i = 0).
/// Requires D effective.
Cycle d_perp(const Cycle& d);

/// Render as "id=coeff id=coeff" over the support, or "0".
std::string to_string(const Cycle& c);
std::string to_string(const QCycle& c);

}  // namespace resgraph
