#pragma once

#include <optional>
#include <string>

#include "resgraph/cycle.hpp"
#include "resgraph/graph.hpp"

namespace resgraph {

/// Range {0, ..., p_g} of the cohomological invariant q guaranteed in the
/// elliptic case; p_g is user-supplied analytic data.
struct QRange {
  Int lo;
  Int hi;
  std::string basis;
};

/// What the graph decides about the normal reduction number.
struct ReductionReport {
  enum class Value { Unknown = 0, One = 1, Two = 2 };
  Value value = Value::Unknown;
  std::string basis;
  bool is_rational = false;
  bool is_elliptic = false;
};

/// 1 iff rational (Lipman, Cutkosky), 2 when elliptic; otherwise unknown —
/// no formula covers the remaining graphs.
ReductionReport normal_reduction_number(const DualGraph& g);

/// Colength of an ideal represented by Z from Kato's Riemann-Roch formula:
/// l = -(Z^2 + K.Z)/2 + pg - q. Requires Z effective anti-nef and
/// 0 <= q <= pg; raises InconsistentInputError when the formula yields
/// l < 1 (the supplied analytic data contradicts it).
Int kato_colength(const DualGraph& g, const Cycle& z, const Int& q, const Int& pg);

/// {0, ..., pg} for an elliptic graph; pg is validated against the p_g
/// upper bound when the graph is numerically Gorenstein.
QRange q_range_if_elliptic(const DualGraph& g, const Int& pg);

struct PgMaxIdealReport {
  bool is_pg_cycle = false;  // p_a(M) = 0
  Int pa;
  Int self_intersection;
  Int canonical_dot;
};

/// Numerical test for the maximal ideal being a p_g-ideal represented by M:
/// true iff p_a(M) = 0. Requires M effective, anti-nef, and M >= Z_E.
PgMaxIdealReport is_pg_maximal_ideal_cycle(const DualGraph& g, const Cycle& m);

struct FinalTheoremReport {
  bool satisfied = false;  // all four combinatorial conditions hold
  bool elliptic = false;
  bool numerically_gorenstein = false;
  bool degree_one = false;
  bool shape_ok = false;
  Int degree_value;
  std::string statement;
};

/// Combinatorial half of the Gorenstein / p_g-maximal-ideal
/// characterization: elliptic + numerically Gorenstein + degree 1 + chain
/// shape. The analytic half (maximal ellipticity, p_g = m + 1) cannot be
/// read off the graph and is reported as a conditional statement. Requires
/// a minimal-resolution graph.
FinalTheoremReport check_final_theorem_shape(const DualGraph& g);

struct TomariMpgReport {
  Int pa;
  Int minus_m_squared;
  bool pa_is_zero = false;
  bool gorenstein_asserted = false;
  std::string notes;
};

/// Numeric parts of Tomari's emb = mult + 1 criterion: reports p_a(M) and
/// -M^2 (which equals mult A only when O(-M) is globally generated — an
/// analytic hypothesis), plus the Gorenstein consequence mult A = 2 when
/// p_a(M) = 0 and the caller asserts Gorenstein. Requires M anti-nef with
/// M >= Z_E.
TomariMpgReport tomari_mpg_numeric_conditions(const DualGraph& g, const Cycle& m,
                                              bool user_asserts_gorenstein);

}  // namespace resgraph
