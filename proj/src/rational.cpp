#include "liekernel/rational.hpp"

#include <cctype>

namespace liekernel {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::optional<mpz_class> exact_integer_root(const mpz_class& x, unsigned k) {
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), x.get_mpz_t(), k) == 0) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) return std::nullopt;
  Rational r(p, q);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::optional<Rational> exact_root(const Rational& x, unsigned k) {
  if (sgn(x) < 0) return std::nullopt;
  auto p = exact_integer_root(x.get_num(), k);
  auto q = exact_integer_root(x.get_den(), k);
  if (!p || !q) return std::nullopt;
  Rational r(*p, *q);
  r.canonicalize();
  return r;
}

Vector zero_vector(int n) { return Vector(static_cast<size_t>(n), Rational(0)); }

Vector unit_vector(int n, int i) {
  Vector v = zero_vector(n);
  v.at(static_cast<size_t>(i)) = 1;
  return v;
}

}  // namespace liekernel
