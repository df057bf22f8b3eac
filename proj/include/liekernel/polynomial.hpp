#pragma once

#include <string>
#include <vector>

#include "liekernel/rational.hpp"

namespace liekernel {

/// Univariate polynomial in t with rational coefficients, dense and trimmed
/// (no trailing zero coefficients; the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial t() { return Polynomial(std::vector<Rational>{0, 1}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& t) const;
  double evaluate(double t) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

}  // namespace liekernel
