#include <doctest.h>

#include <random>

#include "resgraph/catalog.hpp"
#include "resgraph/cycle.hpp"
#include "resgraph/errors.hpp"
#include "resgraph/graph.hpp"
#include "test_support.hpp"

using namespace resgraph;
using testsupport::cycle_of;
using testsupport::doc;

namespace {

const std::vector<std::string> kDefiniteCatalog = {
    "A1", "E8", "simple-elliptic-deg1", "laufer-chain", "genus2-deg2", "cusp-triangle"};

}  // namespace

TEST_CASE("graph construction rejects structural violations") {
  CHECK_THROWS_AS(DualGraph({}, {}), DomainError);
  CHECK_THROWS_AS(DualGraph({{"a", -2, 0}}, {{"a", "a", 1}}), DomainError);
  CHECK_THROWS_AS(DualGraph({{"a", -2, 0}, {"b", -2, 0}}, {{"a", "c", 1}}), DomainError);
  CHECK_THROWS_AS(DualGraph({{"a", -2, 0}, {"b", -2, 0}}, {{"a", "b", 0}}), DomainError);
  CHECK_THROWS_AS(DualGraph({{"a", -2, 0}, {"b", -2, 0}},
                            {{"a", "b", 1}, {"b", "a", 1}}),
                  DomainError);
  CHECK_THROWS_AS(DualGraph({{"a", -2, 0}, {"a", -2, 0}}, {}), DomainError);
  CHECK_THROWS_AS(DualGraph({{"a", -2, -1}}, {}), DomainError);
  CHECK_THROWS_AS(DualGraph({{"", -2, 0}}, {}), DomainError);
  // disconnected graphs are rejected at load time
  CHECK_THROWS_WITH_AS(DualGraph({{"a", -2, 0}, {"b", -2, 0}}, {}),
                       "graph is disconnected", DomainError);
}

TEST_CASE("negative definiteness by exact leading minors") {
  // every catalog graph except nonnegdef is negative definite
  for (const auto& entry : catalog_entries()) {
    auto d = doc(entry.name);
    CHECK(d.graph->is_negative_definite() == (entry.name != "nonnegdef"));
  }
  // single vertex with w = 0
  CHECK_FALSE(DualGraph({{"v", 0, 0}}, {}).is_negative_definite());
  // all -2 triangle is only negative semidefinite (row sums vanish)
  DualGraph semidefinite({{"a", -2, 0}, {"b", -2, 0}, {"c", -2, 0}},
                         {{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}});
  CHECK_FALSE(semidefinite.is_negative_definite());
  CHECK_THROWS_AS(require_negative_definite(semidefinite), DomainError);
}

TEST_CASE("intersection form on catalog graphs") {
  auto a1 = doc("A1");
  const Cycle e = Cycle::unit(*a1.graph, 0);
  CHECK(intersect(e, e) == -2);

  auto laufer = doc("laufer-chain");
  const DualGraph& g = *laufer.graph;
  const Cycle full = cycle_of(g, {1, 1, 1});
  CHECK(intersect(full, full) == -1);
  const Cycle m = cycle_of(g, {2, 2, 1});
  CHECK(intersect(m, m) == -2);

  // cycles on different graphs cannot be paired
  CHECK_THROWS_AS(intersect(e, full), DomainError);
}

TEST_CASE("intersect is symmetric and bilinear; definite on effective cycles") {
  std::mt19937_64 rng(42);
  for (const auto& name : kDefiniteCatalog) {
    auto d = doc(name);
    const DualGraph& g = *d.graph;
    for (int trial = 0; trial < 50; ++trial) {
      Cycle a = testsupport::random_effective_cycle(g, rng);
      Cycle b = testsupport::random_effective_cycle(g, rng);
      Cycle c = testsupport::random_effective_cycle(g, rng);
      CHECK(intersect(a, b) == intersect(b, a));
      CHECK(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
      if (!a.is_zero()) CHECK(sign(intersect(a, a)) < 0);
    }
  }
}

TEST_CASE("canonical intersection numbers from adjunction") {
  auto a1 = doc("A1");
  CHECK(a1.graph->canonical_intersections()[0] == 0);

  auto laufer = doc("laufer-chain");
  CHECK(laufer.graph->canonical_intersections()[0] == 1);  // E2: w=-1, g=1
  CHECK(laufer.graph->canonical_intersections()[1] == 0);
  CHECK(laufer.graph->canonical_intersections()[2] == 0);

  auto highpg = doc("genus2-deg2");
  CHECK(highpg.graph->canonical_intersections()[0] == 4);  // w=-2, g=2

  // chi(E_i) computed from K . E_i must equal 1 - g_i
  for (const auto& name : kDefiniteCatalog) {
    auto d = doc(name);
    for (std::size_t i = 0; i < d.graph->size(); ++i) {
      CHECK(euler_chi(Cycle::unit(*d.graph, i)) == 1 - d.graph->vertex(i).genus);
    }
  }
}

TEST_CASE("euler characteristic and arithmetic genus") {
  auto a1 = doc("A1");
  const Cycle e = Cycle::unit(*a1.graph, 0);
  CHECK(euler_chi(e) == 1);
  CHECK(arithmetic_genus(e) == 0);

  auto laufer = doc("laufer-chain");
  CHECK(euler_chi(cycle_of(*laufer.graph, {1, 1, 1})) == 0);

  auto highpg = doc("genus2-deg2");
  const Cycle he = Cycle::unit(*highpg.graph, 0);
  CHECK(euler_chi(he) == -1);
  CHECK(arithmetic_genus(he) == 2);

  CHECK_THROWS_AS(euler_chi(cycle_of(*a1.graph, {-1})), DomainError);
  CHECK_THROWS_AS(arithmetic_genus(Cycle(*a1.graph)), DomainError);
}

TEST_CASE("chi additivity identity on random cycles") {
  std::mt19937_64 rng(7);
  for (const auto& entry : catalog_entries()) {
    auto d = doc(entry.name);
    const DualGraph& g = *d.graph;
    for (int trial = 0; trial < 200; ++trial) {
      Cycle a = testsupport::random_effective_cycle(g, rng);
      Cycle b = testsupport::random_effective_cycle(g, rng);
      CHECK(euler_chi(a) + euler_chi(b) - intersect(a, b) == euler_chi(a + b));
    }
  }
}

TEST_CASE("closed-form chi equals recursive additivity oracle") {
  for (const auto& entry : catalog_entries()) {
    auto d = doc(entry.name);
    const DualGraph& g = *d.graph;
    const auto m = testsupport::small_matrix(g);
    const auto genus = testsupport::genera(g);
    std::vector<long> bounds(g.size(), 4);
    long checked = 0;
    testsupport::for_each_vector_upto(bounds, [&](const std::vector<long>& c) {
      std::vector<Int> coeff(c.begin(), c.end());
      Cycle cy(g, std::move(coeff));
      CHECK(euler_chi(cy) == testsupport::chi_additive(m, genus, c));
      ++checked;
    });
    Int expected = 1;
    for (std::size_t i = 0; i < g.size(); ++i) expected *= 5;
    CHECK(checked == expected - 1);
  }
}

TEST_CASE("D^2 + K.D is even for every integral cycle") {
  std::mt19937_64 rng(99);
  for (const auto& entry : catalog_entries()) {
    auto d = doc(entry.name);
    for (int trial = 0; trial < 300; ++trial) {
      Cycle a = testsupport::random_effective_cycle(*d.graph, rng, 9);
      CHECK(is_even(intersect(a, a) + canonical_dot(a)));
      // mixed-sign cycles too: the parity is a property of the form
      Cycle b = testsupport::random_integral_cycle(*d.graph, rng, 9);
      CHECK(is_even(intersect(b, b) + canonical_dot(b)));
    }
  }
}

TEST_CASE("mixed integral/rational intersection overloads agree") {
  auto laufer = doc("laufer-chain");
  const DualGraph& g = *laufer.graph;
  const Cycle d = cycle_of(g, {2, 1, 0});
  const QCycle q(g, {Rat(1, 2), Rat(0), Rat(3)});
  CHECK(intersect(d, q) == intersect(q, d));
  CHECK(intersect(d, QCycle(d)) == Rat(intersect(d, d)));
  // (2E2 + E1) . (E2/2 + 3E0) = (1/2)(2E2.E2 + E1.E2) + 3(E1.E0)
  CHECK(intersect(d, q) == Rat(-1, 2) + 3);
}

TEST_CASE("canonical cycle examples") {
  auto highpg = doc("genus2-deg2");
  QCycle zk = canonical_cycle(*highpg.graph);
  CHECK(zk == QCycle(cycle_of(*highpg.graph, {2})));

  auto laufer = doc("laufer-chain");
  CHECK(canonical_cycle(*laufer.graph) == QCycle(cycle_of(*laufer.graph, {3, 2, 1})));

  auto a1 = doc("A1");
  CHECK(canonical_cycle(*a1.graph) == QCycle(Cycle(*a1.graph)));

  CHECK_THROWS_AS(canonical_cycle(*doc("nonnegdef").graph), DomainError);
}

TEST_CASE("canonical cycle solves (K + Z_K) . E_i = 0 exactly") {
  for (const auto& name : kDefiniteCatalog) {
    auto d = doc(name);
    const DualGraph& g = *d.graph;
    const QCycle zk = canonical_cycle(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      Rat lhs = intersect(zk, Cycle::unit(g, i)) + Rat(g.canonical_intersections()[i]);
      CHECK(sign(lhs) == 0);
    }
  }
}

TEST_CASE("numerically Gorenstein flag") {
  CHECK(is_numerically_gorenstein(*doc("laufer-chain").graph));
  CHECK(is_numerically_gorenstein(*doc("A1").graph));
  // single (-3)-curve: Z_K = (1/3) E
  DualGraph w3({{"E", -3, 0}}, {});
  CHECK_FALSE(is_numerically_gorenstein(w3));
  QCycle zk = canonical_cycle(w3);
  CHECK(zk[0] == Rat(1, 3));
}

TEST_CASE("d_perp picks the orthogonal vertices") {
  auto laufer = doc("laufer-chain");
  const DualGraph& g = *laufer.graph;
  CHECK(d_perp(cycle_of(g, {1, 1, 1})) == cycle_of(g, {1, 1, 0}));
  CHECK(d_perp(cycle_of(g, {1, 0, 0})) == cycle_of(g, {0, 0, 1}));

  auto a1 = doc("A1");
  CHECK(d_perp(Cycle::unit(*a1.graph, 0)).is_zero());

  CHECK_THROWS_AS(d_perp(cycle_of(g, {-1, 0, 0})), DomainError);
}

TEST_CASE("edge multiplicities above one feed the form and the minors") {
  DualGraph g({{"a", -3, 0}, {"b", -3, 0}}, {{"a", "b", 2}});
  CHECK(g.is_negative_definite());
  CHECK(g.intersection(0, 1) == 2);
  const Cycle both = cycle_of(g, {1, 1});
  CHECK(intersect(both, both) == -2);
  CHECK(euler_chi(both) == 0);  // tangential pair behaves like a cusp

  // multiplicity 3 tips the pair over into indefiniteness
  DualGraph h({{"a", -3, 0}, {"b", -3, 0}}, {{"a", "b", 3}});
  CHECK_FALSE(h.is_negative_definite());
}

TEST_CASE("rational formatting is exact") {
  CHECK(format_rational(Rat(3)) == "3/1");
  CHECK(format_rational(Rat(-5, 10)) == "-1/2");
  CHECK(parse_rational("4/6") == Rat(2, 3));
  CHECK(parse_rational("7") == Rat(7));
  CHECK(parse_rational("-7/2") == Rat(-7, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}
