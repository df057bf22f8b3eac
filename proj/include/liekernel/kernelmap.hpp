#pragma once

#include <vector>

#include "liekernel/cohomology.hpp"
#include "liekernel/exterior.hpp"
#include "liekernel/liealg.hpp"
#include "liekernel/linalg.hpp"

namespace liekernel {

/// Element of P* = Λ²g*/d(g*), held as its canonical representative: the
/// reduction modulo the echelon basis of B² = d(g*).
struct PDualElement {
  KForm representative;

  friend bool operator==(const PDualElement&, const PDualElement&) = default;
};

/// P = ker(L: Λ²g → g), L(X∧Y) = [X,Y].
class LieKernel {
 public:
  explicit LieKernel(const LieAlgebra& g);

  const LieAlgebra& algebra() const { return g_; }
  int dim() const { return p_.dim(); }
  /// Subspace of Λ²g in the lexicographic pair basis.
  const Subspace& subspace() const { return p_; }
  const std::vector<Mask>& pair_basis() const { return pairs_; }
  /// B² = d(g*) inside Λ²g*.
  const Subspace& exact_two_forms() const { return b2_; }

  /// The i-th echelon basis bivector of P.
  KVector element(int i) const;
  std::vector<KVector> elements() const;
  bool contains(const KVector& p) const;

  PDualElement make_dual(const KForm& beta) const;

 private:
  LieAlgebra g_;
  std::vector<Mask> pairs_;
  Subspace p_;
  Subspace b2_;
};

/// d_P β = d β̃ for any representative β̃.
KForm dP(const LieKernel& kernel, const PDualElement& beta);

struct DPProperties {
  bool injective = false;
  bool surjective_onto_z3 = false;
};

/// Decided from exact ranks of d_P itself, not from Betti numbers.
DPProperties dP_properties(const LieAlgebra& g);

/// The unique β with d_P β = Ψ. Requires b₂ = 0, dΨ = 0 and Ψ ∈ im d_P.
PDualElement multimoment_value(const LieKernel& kernel, const KForm& psi);

/// ad_Z(X∧Y) = [Z,X]∧Y + X∧[Z,Y].
KVector ad_bivector(const LieAlgebra& g, const Vector& z, const KVector& p);

/// {Z : β(ad_Z p) = 0 for all p ∈ P}.
Subspace stabilizer(const LieKernel& kernel, const PDualElement& beta);

/// {X : X ⌟ Ψ = 0}.
Subspace kernel_of_psi(const LieAlgebra& g, const KForm& psi);

struct OrbitCheck {
  bool condition_holds = false;
  int orbit_dim = 0;
  Subspace stabilizer;
  Subspace kernel;
};

/// Compares stab β with ker d_P β.
OrbitCheck orbit_2plectic_check(const LieKernel& kernel, const PDualElement& beta);

}  // namespace liekernel
