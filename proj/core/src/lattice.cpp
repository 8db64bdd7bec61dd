#include "resgraph/lattice.hpp"

#include <algorithm>

#include "resgraph/errors.hpp"

namespace resgraph {

SupportSet::SupportSet(const DualGraph& g, std::vector<bool> mask)
    : graph_(&g), mask_(std::move(mask)) {
  if (mask_.size() != g.size()) {
    throw DomainError("support mask length does not match graph size");
  }
  count_ = static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
  if (count_ == 0) throw DomainError("support set must be non-empty");
  if (connected_components(g, mask_).size() != 1) {
    throw DomainError("support set must induce a connected subgraph");
  }
}

SupportSet SupportSet::full(const DualGraph& g) {
  return SupportSet(g, std::vector<bool>(g.size(), true));
}

SupportSet SupportSet::from_ids(const DualGraph& g, const std::vector<std::string>& ids) {
  std::vector<bool> mask(g.size(), false);
  for (const std::string& id : ids) mask[g.index_of(id)] = true;
  return SupportSet(g, std::move(mask));
}

SupportSet SupportSet::from_indices(const DualGraph& g,
                                    const std::vector<std::size_t>& indices) {
  std::vector<bool> mask(g.size(), false);
  for (std::size_t i : indices) {
    if (i >= g.size()) throw DomainError("vertex index out of range");
    mask[i] = true;
  }
  return SupportSet(g, std::move(mask));
}

std::vector<std::size_t> SupportSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) out.push_back(i);
  }
  return out;
}

Cycle SupportSet::reduced_cycle() const {
  std::vector<Int> c(mask_.size(), Int(0));
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) c[i] = 1;
  }
  return Cycle(*graph_, std::move(c));
}

std::vector<std::vector<std::size_t>> connected_components(const DualGraph& g,
                                                           const std::vector<bool>& mask) {
  std::vector<std::vector<std::size_t>> components;
  std::vector<bool> visited(g.size(), false);
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (!mask[start] || visited[start]) continue;
    std::vector<std::size_t> component;
    std::vector<std::size_t> stack{start};
    visited[start] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (const auto& [w, mult] : g.neighbors(v)) {
        if (mask[w] && !visited[w]) {
          visited[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_anti_nef(const Cycle& d, const SupportSet& s) {
  if (&d.graph() != &s.graph()) throw DomainError("cycle and support on different graphs");
  if (!d.is_effective()) throw DomainError("is_anti_nef requires an effective cycle");
  const auto products = intersection_products(d);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (s.contains(i) && sign(products[i]) > 0) return false;
  }
  return true;
}

FundamentalCycleResult fundamental_cycle_with_steps(const DualGraph& g, const SupportSet& s) {
  if (&s.graph() != &g) throw DomainError("support set belongs to a different graph");
  require_negative_definite(g);

  const std::size_t n = g.size();
  std::vector<Int> coeff(n, Int(0));
  std::vector<Int> products(n, Int(0));
  const auto support = s.indices();
  for (std::size_t i : support) {
    coeff[i] = 1;
    products[i] += g.intersection(i, i);
    for (const auto& [j, mult] : g.neighbors(i)) products[j] += mult;
  }

  std::size_t steps = 0;
  for (;;) {
    std::size_t pick = n;
    for (std::size_t i : support) {
      if (sign(products[i]) > 0) {
        pick = i;
        break;
      }
    }
    if (pick == n) break;
    coeff[pick] += 1;
    ++steps;
    products[pick] += g.intersection(pick, pick);
    for (const auto& [j, mult] : g.neighbors(pick)) products[j] += mult;
  }
  return {Cycle(g, std::move(coeff)), steps};
}

Cycle fundamental_cycle(const DualGraph& g, const SupportSet& s) {
  return fundamental_cycle_with_steps(g, s).cycle;
}

Cycle fundamental_cycle(const DualGraph& g) {
  return fundamental_cycle(g, SupportSet::full(g));
}

Int degree(const DualGraph& g) {
  const Cycle z = fundamental_cycle(g);
  return -intersect(z, z);
}

CycleStream::CycleStream(const DualGraph& g, const Cycle& bound) : graph_(&g) {
  if (&bound.graph() != &g) throw DomainError("bound cycle belongs to a different graph");
  if (!bound.is_effective()) throw DomainError("enumeration bound must be effective");
  bound_.reserve(g.size());
  for (const Int& b : bound.coefficients()) bound_.push_back(to_long(b));
  coeff_.assign(g.size(), 0);
  products_.assign(g.size(), Int(0));
}

void CycleStream::set_coefficient(std::size_t i, long value) {
  const long delta = value - coeff_[i];
  if (delta == 0) return;
  coeff_[i] = value;
  products_[i] += delta * graph_->intersection(i, i);
  for (const auto& [j, mult] : graph_->neighbors(i)) {
    products_[j] += delta * mult;
  }
}

bool CycleStream::advance() {
  // odometer with the last vertex fastest = ascending lexicographic order
  std::size_t i = coeff_.size();
  while (i > 0) {
    --i;
    if (coeff_[i] < bound_[i]) {
      set_coefficient(i, coeff_[i] + 1);
      return true;
    }
    set_coefficient(i, 0);
  }
  return false;
}

Cycle CycleStream::current() const {
  std::vector<Int> c(coeff_.begin(), coeff_.end());
  return Cycle(*graph_, std::move(c));
}

Int CycleStream::current_self_intersection() const {
  Int total(0);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] != 0) total += coeff_[i] * products_[i];
  }
  return total;
}

Int CycleStream::current_canonical_dot() const {
  const auto& k = graph_->canonical_intersections();
  Int total(0);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] != 0) total += coeff_[i] * k[i];
  }
  return total;
}

std::optional<Cycle> CycleStream::next() {
  if (!advance()) return std::nullopt;
  return current();
}

Int count_cycles_upto(const Cycle& bound) {
  if (!bound.is_effective()) throw DomainError("enumeration bound must be effective");
  Int total(1);
  for (const Int& b : bound.coefficients()) total *= b + 1;
  return total - 1;
}

Cycle oracle_minimal_anti_nef(const DualGraph& g, const SupportSet& s,
                              long bound_multiplier) {
  if (bound_multiplier < 1) throw DomainError("bound multiplier must be positive");
  const Cycle base = fundamental_cycle(g, s);
  const Cycle bound = base.scaled(Int(bound_multiplier));

  // Antichain of minimal anti-nef candidates found so far.
  std::vector<std::vector<long>> minimal;
  const auto support = s.indices();

  CycleStream stream(g, bound);
  while (stream.advance()) {
    const auto& c = stream.raw_coefficients();
    bool ok = true;
    for (std::size_t i : support) {
      if (c[i] == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // support exactly s: bound has support s, so off-support coefficients are 0
    const auto& p = stream.products();
    for (std::size_t i : support) {
      if (sign(p[i]) > 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    bool dominated = false;
    for (const auto& m : minimal) {
      if (std::equal(m.begin(), m.end(), c.begin(),
                     [](long a, long b) { return a <= b; })) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    std::erase_if(minimal, [&](const std::vector<long>& m) {
      return std::equal(c.begin(), c.end(), m.begin(),
                        [](long a, long b) { return a <= b; });
    });
    minimal.push_back(c);
  }

  if (minimal.empty()) {
    throw OracleBoundError("no anti-nef cycle with the requested support within " +
                           std::to_string(bound_multiplier) +
                           " * fundamental cycle; raise the bound multiplier");
  }
  if (minimal.size() != 1) {
    throw InternalCheckError("minimal anti-nef cycle is not unique within the bound");
  }
  std::vector<Int> c(minimal.front().begin(), minimal.front().end());
  return Cycle(g, std::move(c));
}

}  // namespace resgraph
