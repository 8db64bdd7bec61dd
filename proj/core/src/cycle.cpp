#include "resgraph/cycle.hpp"

#include <algorithm>

#include "resgraph/errors.hpp"

namespace resgraph {

namespace {

void require_same_graph(const DualGraph* a, const DualGraph* b) {
  if (a != b) throw DomainError("cycles live on different graphs");
}

}  // namespace

Cycle::Cycle(const DualGraph& g, std::vector<Int> coefficients)
    : graph_(&g), coeff_(std::move(coefficients)) {
  if (coeff_.size() != g.size()) {
    throw DomainError("coefficient vector length does not match graph size");
  }
}

Cycle Cycle::unit(const DualGraph& g, std::size_t index) {
  if (index >= g.size()) throw DomainError("vertex index out of range");
  Cycle c(g);
  c.coeff_[index] = 1;
  return c;
}

Cycle Cycle::from_ids(const DualGraph& g,
                      const std::vector<std::pair<std::string, Int>>& entries) {
  Cycle c(g);
  std::vector<bool> set(g.size(), false);
  for (const auto& [id, value] : entries) {
    std::size_t i = g.index_of(id);
    if (set[i]) throw DomainError("duplicate coefficient for vertex '" + id + "'");
    set[i] = true;
    c.coeff_[i] = value;
  }
  return c;
}

bool Cycle::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(), [](const Int& x) { return sign(x) == 0; });
}

bool Cycle::is_effective() const {
  return std::all_of(coeff_.begin(), coeff_.end(), [](const Int& x) { return sign(x) >= 0; });
}

bool Cycle::is_positive() const { return is_effective() && !is_zero(); }

bool Cycle::is_reduced() const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [](const Int& x) { return x == 0 || x == 1; });
}

std::vector<std::size_t> Cycle::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (sign(coeff_[i]) != 0) s.push_back(i);
  }
  return s;
}

bool Cycle::operator==(const Cycle& other) const {
  return graph_ == other.graph_ && coeff_ == other.coeff_;
}

bool Cycle::leq(const Cycle& other) const {
  require_same_graph(graph_, other.graph_);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] > other.coeff_[i]) return false;
  }
  return true;
}

Cycle Cycle::operator+(const Cycle& other) const {
  require_same_graph(graph_, other.graph_);
  std::vector<Int> c(coeff_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coeff_[i];
  return Cycle(*graph_, std::move(c));
}

Cycle Cycle::operator-(const Cycle& other) const {
  require_same_graph(graph_, other.graph_);
  std::vector<Int> c(coeff_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coeff_[i];
  return Cycle(*graph_, std::move(c));
}

Cycle Cycle::scaled(const Int& factor) const {
  std::vector<Int> c(coeff_);
  for (Int& x : c) x *= factor;
  return Cycle(*graph_, std::move(c));
}

QCycle::QCycle(const DualGraph& g, std::vector<Rat> coefficients)
    : graph_(&g), coeff_(std::move(coefficients)) {
  if (coeff_.size() != g.size()) {
    throw DomainError("coefficient vector length does not match graph size");
  }
}

QCycle::QCycle(const Cycle& c) : graph_(&c.graph()), coeff_(c.size()) {
  for (std::size_t i = 0; i < c.size(); ++i) coeff_[i] = Rat(c[i]);
}

bool QCycle::is_integral() const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [](const Rat& x) { return x.get_den() == 1; });
}

Cycle QCycle::to_cycle() const {
  if (!is_integral()) throw DomainError("rational cycle is not integral");
  std::vector<Int> c(coeff_.size());
  for (std::size_t i = 0; i < coeff_.size(); ++i) c[i] = coeff_[i].get_num();
  return Cycle(*graph_, std::move(c));
}

bool QCycle::operator==(const QCycle& other) const {
  return graph_ == &other.graph() && coeff_ == other.coefficients();
}

namespace {

template <typename Coeff>
std::vector<Coeff> products_impl(const DualGraph& g, const std::vector<Coeff>& c) {
  const std::size_t n = g.size();
  std::vector<Coeff> p(n, Coeff(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sign(c[i]) == 0) continue;
    p[i] += Coeff(c[i] * g.intersection(i, i));
    for (const auto& [j, mult] : g.neighbors(i)) {
      p[j] += Coeff(c[i] * mult);
    }
  }
  return p;
}

template <typename A, typename B, typename Out>
Out dot_products(const DualGraph& ga, const std::vector<A>& a, const DualGraph& gb,
                 const std::vector<B>& b) {
  require_same_graph(&ga, &gb);
  std::vector<A> pa = products_impl(ga, a);
  Out total(0);
  for (std::size_t i = 0; i < b.size(); ++i) total += Out(pa[i]) * Out(b[i]);
  return total;
}

}  // namespace

std::vector<Int> intersection_products(const Cycle& d) {
  return products_impl(d.graph(), d.coefficients());
}

std::vector<Rat> intersection_products(const QCycle& d) {
  return products_impl(d.graph(), d.coefficients());
}

Int intersect(const Cycle& d, const Cycle& f) {
  return dot_products<Int, Int, Int>(d.graph(), d.coefficients(), f.graph(),
                                     f.coefficients());
}

Rat intersect(const QCycle& d, const QCycle& f) {
  return dot_products<Rat, Rat, Rat>(d.graph(), d.coefficients(), f.graph(),
                                     f.coefficients());
}

Rat intersect(const Cycle& d, const QCycle& f) { return intersect(QCycle(d), f); }

Rat intersect(const QCycle& d, const Cycle& f) { return intersect(d, QCycle(f)); }

Int canonical_dot(const Cycle& d) {
  const auto& k = d.graph().canonical_intersections();
  Int total(0);
  for (std::size_t i = 0; i < d.size(); ++i) total += d[i] * k[i];
  return total;
}

Rat canonical_dot(const QCycle& d) {
  const auto& k = d.graph().canonical_intersections();
  Rat total(0);
  for (std::size_t i = 0; i < d.size(); ++i) total += d[i] * Rat(k[i]);
  return total;
}

Int euler_chi(const Cycle& d) {
  if (!d.is_effective()) throw DomainError("euler_chi requires an effective cycle");
  Int numerator = intersect(d, d) + canonical_dot(d);
  if (!is_even(numerator)) {
    throw InternalCheckError("D^2 + K.D is odd for an integral cycle");
  }
  return -div_exact(numerator, Int(2));
}

Int arithmetic_genus(const Cycle& d) {
  if (!d.is_positive()) throw DomainError("arithmetic_genus requires a positive cycle");
  return Int(1) - euler_chi(d);
}

QCycle canonical_cycle(const DualGraph& g) {
  require_negative_definite(g);
  const std::size_t n = g.size();

  // augmented system  M x = -k  over Q, solved by Gaussian elimination
  std::vector<Rat> a(n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * (n + 1) + j] = Rat(g.intersection(i, j));
    a[i * (n + 1) + n] = Rat(-g.canonical_intersections()[i]);
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sign(a[pivot * (n + 1) + col]) == 0) ++pivot;
    if (pivot == n) {
      throw InternalCheckError("singular intersection matrix in canonical cycle solve");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j <= n; ++j) {
        std::swap(a[pivot * (n + 1) + j], a[col * (n + 1) + j]);
      }
    }
    const Rat diag = a[col * (n + 1) + col];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sign(a[i * (n + 1) + col]) == 0) continue;
      const Rat factor = a[i * (n + 1) + col] / diag;
      for (std::size_t j = col; j <= n; ++j) {
        a[i * (n + 1) + j] -= factor * a[col * (n + 1) + j];
      }
    }
  }

  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = a[i * (n + 1) + n] / a[i * (n + 1) + i];
  }
  return QCycle(g, std::move(x));
}

bool is_numerically_gorenstein(const DualGraph& g) {
  return canonical_cycle(g).is_integral();
}

Cycle d_perp(const Cycle& d) {
  if (!d.is_effective()) throw DomainError("d_perp requires an effective cycle");
  const auto products = intersection_products(d);
  std::vector<Int> c(d.size(), Int(0));
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sign(products[i]) == 0) c[i] = 1;
  }
  return Cycle(d.graph(), std::move(c));
}

namespace {

template <typename CycleT, typename Fmt>
std::string cycle_string(const CycleT& c, Fmt&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sign(c[i]) == 0) continue;
    if (!out.empty()) out += ' ';
    out += c.graph().vertex(i).id + "=" + fmt(c[i]);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const Cycle& c) {
  return cycle_string(c, [](const Int& x) { return x.get_str(); });
}

std::string to_string(const QCycle& c) {
  return cycle_string(c, [](const Rat& x) {
    return x.get_den() == 1 ? x.get_num().get_str() : x.get_str();
  });
}

}  // namespace resgraph
