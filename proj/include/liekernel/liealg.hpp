#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liekernel/linalg.hpp"
#include "liekernel/rational.hpp"

namespace liekernel {

/// Raw bracket data [e_i, e_j] = Σ_k c(i,j,k) e_k, antisymmetric by
/// construction. Jacobi is not assumed; see LieAlgebra.
class StructureConstants {
 public:
  explicit StructureConstants(int n = 0);

  int dim() const { return n_; }

  const Rational& operator()(int i, int j, int k) const { return c_[index(i, j, k)]; }

  /// Adds v to c(i,j,k) and −v to c(j,i,k).
  void add(int i, int j, int k, const Rational& v);

  Vector bracket_basis(int i, int j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Matrix of ad_x: column b is [x, e_b].
  Matrix ad(const Vector& x) const;

  /// First basis triple (1-based, in the message) violating Jacobi, if any.
  std::optional<std::string> jacobi_violation() const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  size_t index(int i, int j, int k) const {
    return (size_t(i) * size_t(n_) + size_t(j)) * size_t(n_) + size_t(k);
  }
  int n_;
  std::vector<Rational> c_;
};

/// A finite-dimensional Lie algebra over Q with a fixed basis. Instances
/// exist only for Jacobi-valid structure constants.
class LieAlgebra {
 public:
  /// Throws DomainError naming the failing triple if Jacobi does not hold.
  static LieAlgebra validate(StructureConstants c, std::string name = {});

  int dim() const { return c_.dim(); }
  const StructureConstants& constants() const { return c_; }
  const std::string& name() const { return name_; }
  LieAlgebra renamed(std::string name) const;

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector bracket_basis(int i, int j) const { return c_.bracket_basis(i, j); }
  Matrix ad(const Vector& x) const { return c_.ad(x); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.c_ == b.c_; }

 private:
  LieAlgebra(StructureConstants c, std::string name) : c_(std::move(c)), name_(std::move(name)) {}
  StructureConstants c_;
  std::string name_;
};

LieAlgebra abelian(int n);

/// Span of all brackets [x, y] with x in a and y in b.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

Subspace derived_algebra(const LieAlgebra& g);

/// g ⊇ g' ⊇ g'' ⊇ ... ; stops at the first term equal to its successor.
std::vector<Subspace> derived_series(const LieAlgebra& g);
/// g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ... ; same stopping rule.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
/// Tr(ad x) = 0 for every x.
bool is_unimodular(const LieAlgebra& g);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);

/// Structure constants of a subalgebra in its echelon basis.
LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s);

/// h ⊕ k with h on the first dim h basis vectors.
LieAlgebra direct_sum(const LieAlgebra& h, const LieAlgebra& k);

/// Same algebra in the basis f_j = Σ_i p(i,j) e_i.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p);

/// Lie algebra spanned by the given linearly independent matrices under the
/// commutator, in that basis.
LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis, std::string name = {});

/// R·A ⋉ k with ad_A acting on k by the derivation d. A becomes e_1 and the
/// basis of k is shifted up by one.
LieAlgebra semidirect_extension(const LieAlgebra& k, const Matrix& d, std::string name = {});

/// Derivations D with D[x,y] = [Dx,y] + [x,Dy], as a subspace of n×n
/// matrices flattened row-major (entry (a,b) at a·n+b, D e_b = Σ_a D(a,b) e_a).
Subspace derivation_algebra(const LieAlgebra& g);

Matrix unflatten(const Vector& v, int n);
Vector flatten(const Matrix& m);

bool is_derivation(const LieAlgebra& g, const Matrix& d);

/// The derivation algebra as an abstract Lie algebra, in its echelon basis.
LieAlgebra derivation_lie_algebra(const LieAlgebra& g);

/// True iff Der(g) is nilpotent. Requires g nilpotent.
bool is_characteristically_nilpotent(const LieAlgebra& g);

}  // namespace liekernel
