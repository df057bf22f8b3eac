#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liekernel/linalg.hpp"
#include "liekernel/polynomial.hpp"
#include "liekernel/rational.hpp"

namespace liekernel {

/// Basis multi-index: bit i set means basis element i (0-based) occurs.
/// Strictly increasing order of the set bits is the canonical ordering.
using Mask = std::uint32_t;

inline constexpr int kMaxExteriorDim = 16;

inline int degree_of(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask full_mask(int n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }

/// Sign of the permutation sorting the concatenation (a, b) of two disjoint
/// increasing index lists.
inline int wedge_sign(Mask a, Mask b) {
  int inversions = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

Mask mask_from_indices(const std::vector<int>& zero_based);
std::vector<int> indices_of(Mask m);

/// All k-subsets of {0..n-1}, ordered lexicographically as increasing tuples.
std::vector<Mask> subsets_of_size(int n, int k);

/// Text for a multi-index, 1-based: "123" for n <= 9, "[1,2,3]" otherwise.
std::string index_text(Mask m, int n);

void check_exterior_dim(int n);

enum class Variance { covariant, contravariant };

/// Homogeneous element of the exterior algebra over an n-dimensional space
/// with coefficients in R. Covariant elements are forms (Lambda^k V*),
/// contravariant ones multivectors (Lambda^k V). Zero coefficients are never
/// stored.
template <class R, Variance V = Variance::covariant>
class Exterior {
 public:
  using Coefficient = R;
  using Terms = std::map<Mask, R>;

  Exterior() = default;
  Exterior(int n, int k) : n_(n), k_(k) {
    check_exterior_dim(n);
    if (k < 0) throw DomainError("exterior degree out of range");
  }

  static Exterior monomial(int n, Mask m, const R& c = R(1)) {
    Exterior e(n, degree_of(m));
    if (m & ~full_mask(n)) throw DomainError("multi-index exceeds ambient dimension");
    e.add(m, c);
    return e;
  }

  /// Degree-1 element with the given coordinates.
  static Exterior from_vector(const std::vector<R>& v) {
    Exterior e(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) e.add(bit(int(i)), v[i]);
    return e;
  }

  int dim() const { return n_; }
  int degree() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  R coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? R(0) : it->second;
  }

  void add(Mask m, const R& c) {
    if (degree_of(m) != k_) throw DomainError("term degree does not match element degree");
    if (liekernel::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (liekernel::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Coordinates of a degree-1 element.
  std::vector<R> to_vector() const {
    if (k_ != 1) throw DomainError("to_vector: element is not of degree 1");
    std::vector<R> v(size_t(n_), R(0));
    for (const auto& [m, c] : terms_) v[size_t(std::countr_zero(m))] = c;
    return v;
  }

  Exterior& operator+=(const Exterior& o) {
    check_same_shape(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Exterior& operator-=(const Exterior& o) {
    check_same_shape(o);
    for (const auto& [m, c] : o.terms_) add(m, R(-c));
    return *this;
  }
  friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
  friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }
  friend Exterior operator-(Exterior a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Exterior operator*(const R& s, const Exterior& a) {
    Exterior out(a.n_, a.k_);
    if (liekernel::is_zero(s)) return out;
    for (const auto& [m, c] : a.terms_) out.add(m, R(s * c));
    return out;
  }
  friend bool operator==(const Exterior& a, const Exterior& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.terms_ == b.terms_;
  }

  template <class F>
  auto map_coefficients(F f) const {
    using R2 = std::decay_t<decltype(f(std::declval<const R&>()))>;
    Exterior<R2, V> out(n_, k_);
    for (const auto& [m, c] : terms_) out.add(m, f(c));
    return out;
  }

 private:
  void check_same_shape(const Exterior& o) const {
    if (o.n_ != n_) throw DomainError("ambient dimension mismatch");
    if (o.k_ != k_) throw DomainError("degree mismatch");
  }

  int n_ = 0;
  int k_ = 0;
  Terms terms_;
};

template <class R>
using Form = Exterior<R, Variance::covariant>;
template <class R>
using Multivector = Exterior<R, Variance::contravariant>;

using KForm = Form<Rational>;
using KVector = Multivector<Rational>;
using PolyForm = Form<Polynomial>;

template <class R, Variance V>
Exterior<R, V> wedge(const Exterior<R, V>& a, const Exterior<R, V>& b) {
  if (a.dim() != b.dim()) throw DomainError("wedge: ambient dimension mismatch");
  // Degrees above n are representable; such elements are always zero.
  Exterior<R, V> out(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      R c = ca * cb;
      if (wedge_sign(ma, mb) < 0) c = -c;
      out.add(ma | mb, c);
    }
  }
  return out;
}

template <class R, Variance V, class... Rest>
Exterior<R, V> wedge(const Exterior<R, V>& a, const Exterior<R, V>& b, const Rest&... rest) {
  return wedge(wedge(a, b), rest...);
}

/// Evaluates a form on a multivector in its leading slots:
/// (p ⌟ a)(Y...) = a(p, Y...). For p = X of degree 1 this is X ⌟ a; for
/// p = X ∧ Y it is a(X, Y, ·); for equal degrees the result is the pairing.
template <class R>
Form<R> contract(const Multivector<R>& p, const Form<R>& a) {
  if (p.dim() != a.dim()) throw DomainError("contract: ambient dimension mismatch");
  if (p.degree() > a.degree()) throw DomainError("contract: multivector degree exceeds form degree");
  Form<R> out(a.dim(), a.degree() - p.degree());
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [ma, ca] : a.terms()) {
      if ((ma & mp) != mp) continue;
      const Mask rest = ma & ~mp;
      R c = cp * ca;
      if (wedge_sign(mp, rest) < 0) c = -c;
      out.add(rest, c);
    }
  }
  return out;
}

/// Interior product v ⌟ a by a degree-1 multivector.
template <class R>
Form<R> interior(const Multivector<R>& v, const Form<R>& a) {
  if (v.degree() != 1) throw DomainError("interior: vector must have degree 1");
  if (a.degree() == 0) throw DomainError("interior: cannot contract a 0-form");
  return contract(v, a);
}

template <class R>
Form<R> interior(const std::vector<R>& v, const Form<R>& a) {
  return interior(Multivector<R>::from_vector(v), a);
}

/// Sum over decomposables p = Σ X_j ∧ Y_j of c(X_j, Y_j, ·).
template <class R>
Form<R> bivector_contract(const Multivector<R>& p, const Form<R>& c) {
  if (p.degree() != 2) throw DomainError("bivector_contract: p must be a bivector");
  if (c.degree() != 3) throw DomainError("bivector_contract: c must be a 3-form");
  return contract(p, c);
}

/// Natural pairing of a k-form with a k-vector (e^I(E_I) = 1).
template <class R>
R pair(const Form<R>& a, const Multivector<R>& p) {
  if (a.dim() != p.dim() || a.degree() != p.degree()) throw DomainError("pair: shape mismatch");
  R acc(0);
  for (const auto& [m, c] : a.terms()) {
    auto it = p.terms().find(m);
    if (it != p.terms().end()) acc += c * it->second;
  }
  return acc;
}

/// Coefficient vector in the lexicographic basis of Lambda^k.
template <class R, Variance V>
std::vector<R> coordinates(const Exterior<R, V>& a, const std::vector<Mask>& basis) {
  std::vector<R> v;
  v.reserve(basis.size());
  for (Mask m : basis) v.push_back(a.coeff(m));
  return v;
}

template <class R, Variance V = Variance::covariant>
Exterior<R, V> from_coordinates(int n, int k, const std::vector<Mask>& basis, const std::vector<R>& v) {
  Exterior<R, V> out(n, k);
  for (size_t i = 0; i < basis.size(); ++i) out.add(basis[i], v[i]);
  return out;
}

/// A graded-commutative differential algebra generated by n degree-1
/// elements: d is fixed on generators and extended as an antiderivation.
/// Optionally one generator is dt for a parameter t carried by the
/// coefficients, in which case d(f·ω) also contains f′ dt ∧ ω.
template <class R>
class DifferentialAlgebra {
 public:
  using Derivative = std::function<R(const R&)>;

  DifferentialAlgebra(std::vector<Form<R>> generator_differentials, int time_generator = -1,
                      Derivative coefficient_derivative = {})
      : d_gen_(std::move(generator_differentials)),
        time_(time_generator),
        deriv_(std::move(coefficient_derivative)) {
    n_ = static_cast<int>(d_gen_.size());
    for (const auto& g : d_gen_) {
      if (g.dim() != n_ || g.degree() != 2) throw DomainError("generator differential must be a 2-form");
    }
    if (time_ >= n_) throw DomainError("time generator out of range");
    if (time_ >= 0 && !deriv_) throw DomainError("time generator requires a coefficient derivative");
  }

  int dim() const { return n_; }
  const Form<R>& generator_differential(int i) const { return d_gen_.at(size_t(i)); }

  Form<R> d(const Form<R>& a) const {
    if (a.dim() != n_) throw DomainError("differential: ambient dimension mismatch");
    Form<R> out(n_, a.degree() + 1);
    for (const auto& [m, c] : a.terms()) {
      for (Mask rest = m; rest != 0; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        const Mask before = m & (bit(i) - 1);
        const Mask after = m & ~(before | bit(i));
        const int position_sign = (degree_of(before) & 1) ? -1 : 1;
        for (const auto& [mg, cg] : d_gen_[size_t(i)].terms()) {
          if (mg & (before | after)) continue;
          int s = position_sign * wedge_sign(before, mg) * wedge_sign(before | mg, after);
          R term = c * cg;
          out.add(before | mg | after, s < 0 ? R(-term) : term);
        }
      }
      if (time_ >= 0 && !(m & bit(time_))) {
        R dc = deriv_(c);
        if (!liekernel::is_zero(dc)) {
          out.add(m | bit(time_), wedge_sign(bit(time_), m) < 0 ? R(-dc) : dc);
        }
      }
    }
    return out;
  }

  /// True when d∘d vanishes on every generator, hence on the whole algebra.
  bool squares_to_zero() const {
    for (int i = 0; i < n_; ++i) {
      if (!d(d_gen_[size_t(i)]).is_zero()) return false;
    }
    if (time_ >= 0 && !d_gen_[size_t(time_)].is_zero()) return false;
    return true;
  }

 private:
  std::vector<Form<R>> d_gen_;
  int n_ = 0;
  int time_ = -1;
  Derivative deriv_;
};

/// Text of a rational form in the fixture notation, e.g. "123+2.145-1/2.67".
std::string to_string(const KForm& a);
std::string to_string(const KVector& a);
std::string to_string(const PolyForm& a);

/// Hodge star for the metric with the given Gram matrix on basis vectors and
/// volume form orientation·sqrt(det gram)·e_{1..n}. Exact only when det gram
/// is a rational square.
KForm hodge_star(const KForm& a, const Matrix& gram, int orientation = 1);

/// True iff all leading principal minors are positive.
bool is_positive_definite(const Matrix& gram);

/// Pullback along the linear map with matrix g (target x source):
/// (g* a)(v1, ..., vk) = a(g v1, ..., g vk).
KForm pullback(const KForm& a, const Matrix& g);

}  // namespace liekernel
