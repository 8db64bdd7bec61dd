#include "resgraph/numeric.hpp"

#include "resgraph/errors.hpp"

namespace resgraph {

Int div_exact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool fits_long(const Int& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

long to_long(const Int& x) {
  if (!fits_long(x)) {
    throw DomainError("integer too large for native conversion: " + to_string(x));
  }
  return mpz_get_si(x.get_mpz_t());
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string format_rational(const Rat& r) {
  Rat canonical(r);
  canonical.canonicalize();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

namespace {

bool valid_decimal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_decimal(num) || !valid_decimal(den)) {
    throw ParseError("invalid rational: '" + std::string(text) + "'");
  }
  Rat r(std::string(num) + "/" + std::string(den));
  if (r.get_den() == 0) {
    throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

Int parse_integer(std::string_view text) {
  if (!valid_decimal(text)) {
    throw ParseError("invalid integer: '" + std::string(text) + "'");
  }
  return Int(std::string(text));
}

}  // namespace resgraph
