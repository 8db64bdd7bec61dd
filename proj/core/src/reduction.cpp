#include "resgraph/reduction.hpp"

#include "resgraph/classify.hpp"
#include "resgraph/elliptic.hpp"
#include "resgraph/errors.hpp"
#include "resgraph/lattice.hpp"

namespace resgraph {

ReductionReport normal_reduction_number(const DualGraph& g) {
  ReductionReport report;
  report.is_rational = is_rational(g);
  report.is_elliptic = is_elliptic(g);
  if (report.is_rational) {
    report.value = ReductionReport::Value::One;
    report.basis = "rational singularity iff normal reduction number 1 (Lipman, Cutkosky)";
  } else if (report.is_elliptic) {
    report.value = ReductionReport::Value::Two;
    report.basis = "elliptic singularity has normal reduction number 2";
  } else {
    report.value = ReductionReport::Value::Unknown;
    report.basis = "neither rational nor elliptic; no formula from the graph";
  }
  return report;
}

Int kato_colength(const DualGraph& g, const Cycle& z, const Int& q, const Int& pg) {
  if (&z.graph() != &g) throw DomainError("cycle belongs to a different graph");
  if (!z.is_effective()) throw DomainError("Kato formula requires an effective cycle");
  if (!is_anti_nef(z, SupportSet::full(g))) {
    throw DomainError("Kato formula requires an anti-nef cycle");
  }
  if (sign(q) < 0 || sign(pg) < 0) throw DomainError("q and pg must be non-negative");
  if (q > pg) throw DomainError("q must not exceed pg");

  Int numerator = intersect(z, z) + canonical_dot(z);
  if (!is_even(numerator)) {
    throw InternalCheckError("Z^2 + K.Z is odd for an integral cycle");
  }
  Int colength = -div_exact(numerator, Int(2)) + pg - q;
  if (colength < 1) {
    throw InconsistentInputError(
        "Kato's formula yields colength " + to_string(colength) +
        " < 1: the supplied analytic data contradicts the formula");
  }
  return colength;
}

QRange q_range_if_elliptic(const DualGraph& g, const Int& pg) {
  if (!is_elliptic(g)) throw DomainError("q range is only guaranteed for elliptic graphs");
  if (sign(pg) < 0) throw DomainError("pg must be non-negative");
  if (is_numerically_gorenstein(g)) {
    const Int bound = pg_upper_bound(g);
    if (pg > bound) {
      throw InconsistentInputError("pg = " + to_string(pg) +
                                   " exceeds the elliptic-sequence bound m + 1 = " +
                                   to_string(bound));
    }
  }
  return QRange{Int(0), pg,
                "elliptic case: q attains every value in {0, ..., pg}"};
}

PgMaxIdealReport is_pg_maximal_ideal_cycle(const DualGraph& g, const Cycle& m) {
  if (&m.graph() != &g) throw DomainError("cycle belongs to a different graph");
  if (!m.is_effective()) throw DomainError("maximal ideal cycle must be effective");
  if (!is_anti_nef(m, SupportSet::full(g))) {
    throw DomainError("maximal ideal cycle must be anti-nef");
  }
  if (!fundamental_cycle(g).leq(m)) {
    throw DomainError("maximal ideal cycle must dominate the fundamental cycle");
  }
  PgMaxIdealReport report;
  report.pa = arithmetic_genus(m);
  report.self_intersection = intersect(m, m);
  report.canonical_dot = canonical_dot(m);
  report.is_pg_cycle = sign(report.pa) == 0;
  return report;
}

FinalTheoremReport check_final_theorem_shape(const DualGraph& g) {
  if (!is_minimal_resolution_graph(g)) {
    throw DomainError("final-theorem shape test requires a minimal-resolution graph");
  }
  require_negative_definite(g);

  FinalTheoremReport report;
  report.elliptic = is_elliptic(g);
  report.numerically_gorenstein = is_numerically_gorenstein(g);
  report.degree_value = degree(g);
  report.degree_one = report.degree_value == 1;
  if (report.elliptic && report.numerically_gorenstein && report.degree_one) {
    report.shape_ok = maxell_shape_check(g).ok;
  }
  report.satisfied = report.elliptic && report.numerically_gorenstein &&
                     report.degree_one && report.shape_ok;
  report.statement =
      report.satisfied
          ? "candidate graph: if the analytic structure is maximally elliptic "
            "(p_g = m+1, not determined by the graph), then the ring is "
            "Gorenstein and the maximal ideal is a p_g-ideal"
          : "the graph fails the combinatorial conditions, so no analytic "
            "structure on it has a Gorenstein ring with p_g-maximal ideal";
  return report;
}

TomariMpgReport tomari_mpg_numeric_conditions(const DualGraph& g, const Cycle& m,
                                              bool user_asserts_gorenstein) {
  if (&m.graph() != &g) throw DomainError("cycle belongs to a different graph");
  if (!m.is_effective()) throw DomainError("cycle must be effective");
  if (!is_anti_nef(m, SupportSet::full(g))) throw DomainError("cycle must be anti-nef");
  if (!fundamental_cycle(g).leq(m)) {
    throw DomainError("cycle must dominate the fundamental cycle");
  }

  TomariMpgReport report;
  report.pa = arithmetic_genus(m);
  report.minus_m_squared = -intersect(m, m);
  report.pa_is_zero = sign(report.pa) == 0;
  report.gorenstein_asserted = user_asserts_gorenstein;
  report.notes = "-M^2 equals mult A only when O(-M) is globally generated "
                 "(analytic hypothesis)";
  if (report.pa_is_zero && user_asserts_gorenstein) {
    report.notes += "; p_a(M) = 0 with Gorenstein asserted forces mult A = 2";
  }
  return report;
}

}  // namespace resgraph
