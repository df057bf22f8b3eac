#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liekernel {

/// Exact arbitrary-precision rational; the coefficient field of the library.
using Rational = mpq_class;

using Vector = std::vector<Rational>;

/// Thrown for every domain-level failure (bad input, violated precondition).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// p/q in lowest terms; mpq_class(p, q) alone does not canonicalize.
inline Rational make_rational(long p, long q) {
  if (q == 0) throw DomainError("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Canonical text: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Parses "p", "-p" or "p/q"; rejects decimals and anything else.
std::optional<Rational> parse_rational(std::string_view text);

/// Exact k-th root of a non-negative rational, if it is rational.
std::optional<Rational> exact_root(const Rational& x, unsigned k);

inline std::optional<Rational> exact_sqrt(const Rational& x) {
  return exact_root(x, 2);
}

Vector zero_vector(int n);
Vector unit_vector(int n, int i);

}  // namespace liekernel
