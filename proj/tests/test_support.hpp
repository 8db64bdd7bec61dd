#pragma once

// Shared helpers for the test suites: catalog shortcuts, deterministic
// random cycles, and small independent oracles (plain int64 arithmetic,
// no shared code path with the library's mpz implementations).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "resgraph/catalog.hpp"
#include "resgraph/cycle.hpp"
#include "resgraph/graph.hpp"

namespace testsupport {

using resgraph::Cycle;
using resgraph::DualGraph;
using resgraph::Int;

inline resgraph::GraphDocument doc(const std::string& name) {
  return resgraph::catalog_graph(name);
}

// int64 copy of the intersection matrix
inline std::vector<std::vector<long>> small_matrix(const DualGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = mpz_get_si(g.intersection(i, j).get_mpz_t());
    }
  }
  return m;
}

inline std::vector<long> genera(const DualGraph& g) {
  std::vector<long> out;
  for (const auto& v : g.vertices()) out.push_back(v.genus);
  return out;
}

inline long dot64(const std::vector<std::vector<long>>& m,
                       const std::vector<long>& a, const std::vector<long>& b) {
  long total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) total += a[i] * b[j] * m[i][j];
  }
  return total;
}

// chi by peeling single curves off with the additivity identity
// chi(D' + E_i) = chi(D') + chi(E_i) - D' . E_i, from the base cases
// chi(E_i) = 1 - g_i and chi(0) = 0. Independent of the closed form.
inline long chi_additive(const std::vector<std::vector<long>>& m,
                              const std::vector<long>& genus,
                              std::vector<long> c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > 0) {
      c[i] -= 1;
      long rest = chi_additive(m, genus, c);
      long prod = 0;
      for (std::size_t j = 0; j < c.size(); ++j) prod += c[j] * m[j][i];
      return rest + (1 - genus[i]) - prod;
    }
  }
  return 0;
}

// visits every nonzero coefficient vector 0 <= c <= bounds in ascending
// lexicographic order
template <typename Visit>
void for_each_vector_upto(const std::vector<long>& bounds, Visit&& visit) {
  std::vector<long> c(bounds.size(), 0);
  for (;;) {
    std::size_t i = c.size();
    while (i > 0 && c[i - 1] == bounds[i - 1]) {
      c[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    c[i - 1] += 1;
    visit(c);
  }
}

// exhaustive minimal anti-nef cycle with support exactly `mask`;
// nullopt when the set has no unique minimum
inline std::optional<std::vector<long>> brute_minimal_anti_nef(
    const std::vector<std::vector<long>>& m, const std::vector<bool>& mask,
    const std::vector<long>& bounds) {
  std::vector<std::vector<long>> candidates;
  for_each_vector_upto(bounds, [&](const std::vector<long>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (mask[i] ? c[i] == 0 : c[i] != 0) return;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!mask[i]) continue;
      long prod = 0;
      for (std::size_t j = 0; j < c.size(); ++j) prod += c[j] * m[j][i];
      if (prod > 0) return;
    }
    candidates.push_back(c);
  });
  if (candidates.empty()) return std::nullopt;
  std::vector<long> min = candidates.front();
  for (const auto& c : candidates) {
    for (std::size_t i = 0; i < c.size(); ++i) min[i] = std::min(min[i], c[i]);
  }
  for (const auto& c : candidates) {
    if (c == min) return min;
  }
  return std::nullopt;  // minimum not attained: not unique
}

inline Cycle random_effective_cycle(const DualGraph& g, std::mt19937_64& rng,
                                    long max_coefficient = 6) {
  std::uniform_int_distribution<long> dist(0, max_coefficient);
  std::vector<Int> c;
  c.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) c.emplace_back(dist(rng));
  return Cycle(g, std::move(c));
}

inline Cycle random_integral_cycle(const DualGraph& g, std::mt19937_64& rng,
                                   long spread = 6) {
  std::uniform_int_distribution<long> dist(-spread, spread);
  std::vector<Int> c;
  c.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) c.emplace_back(dist(rng));
  return Cycle(g, std::move(c));
}

// Random connected graph: a spanning tree, sometimes one extra edge or a
// doubled multiplicity, weights in [-5, -2], genera in [0, 2];
// rejection-sampled until negative definite.
inline DualGraph random_negative_definite_graph(std::mt19937_64& rng,
                                                std::size_t max_vertices = 7) {
  for (;;) {
    std::uniform_int_distribution<std::size_t> nv(2, max_vertices);
    const std::size_t n = nv(rng);
    std::vector<resgraph::VertexData> vertices;
    std::uniform_int_distribution<long> weight(-5, -2);
    std::uniform_int_distribution<long> genus(0, 2);
    for (std::size_t i = 0; i < n; ++i) {
      vertices.push_back({"v" + std::to_string(i), weight(rng), genus(rng)});
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<resgraph::EdgeData> edges;
    for (std::size_t i = 1; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> parent(0, i - 1);
      const std::size_t p = parent(rng);
      pairs.emplace_back(p, i);
      std::uniform_int_distribution<long> mult(1, 2);
      edges.push_back({"v" + std::to_string(p), "v" + std::to_string(i),
                       mult(rng) == 2 && n > 2 ? 2 : 1});
    }
    if (n >= 3 && std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      std::size_t a = pick(rng), b = pick(rng);
      if (a > b) std::swap(a, b);
      if (a != b &&
          std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) == pairs.end()) {
        edges.push_back({"v" + std::to_string(a), "v" + std::to_string(b), 1});
      }
    }
    DualGraph candidate(std::move(vertices), std::move(edges));
    if (candidate.is_negative_definite()) return candidate;
  }
}

inline Cycle cycle_of(const DualGraph& g, const std::vector<long>& coeffs) {
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  return Cycle(g, std::move(c));
}

}  // namespace testsupport
