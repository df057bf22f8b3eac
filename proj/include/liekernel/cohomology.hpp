#pragma once

#include <vector>

#include "liekernel/exterior.hpp"
#include "liekernel/liealg.hpp"
#include "liekernel/linalg.hpp"

namespace liekernel {

/// d on the exterior algebra of g*, with d e^m = −Σ_{i<j} c(i,j,m) e^{ij}.
/// Accepts raw constants so that d² ≠ 0 can be observed on invalid data.
DifferentialAlgebra<Rational> chevalley_eilenberg(const StructureConstants& c);

KForm differential(const LieAlgebra& g, const KForm& a);

/// Matrix of d: Λ^k g* → Λ^{k+1} g* in lexicographic bases (columns index
/// k-subsets). Empty rows/columns at the ends of the range.
Matrix ce_differential(const StructureConstants& c, int k);
Matrix ce_differential(const LieAlgebra& g, int k);

struct CohomologyReport {
  std::vector<int> dim_z;  // k = 0..n
  std::vector<int> dim_b;
  std::vector<int> betti;
};

class CEComplex {
 public:
  explicit CEComplex(const LieAlgebra& g);

  const LieAlgebra& algebra() const { return g_; }
  int dim() const { return g_.dim(); }
  /// d: Λ^k → Λ^{k+1}, 0 ≤ k ≤ n.
  const Matrix& differential(int k) const { return d_.at(size_t(k)); }
  const CohomologyReport& report() const { return report_; }

  /// Computed on demand; coordinates in the lexicographic basis of Λ^k.
  Subspace cocycles(int k) const;
  Subspace coboundaries(int k) const;

 private:
  LieAlgebra g_;
  std::vector<Matrix> d_;
  CohomologyReport report_;
};

CohomologyReport betti(const LieAlgebra& g);

/// b₂ = b₃ = 0.
bool is_23_trivial(const LieAlgebra& g);
bool is_23_trivial(const CohomologyReport& r);

/// Matrix on Λ^k of the degree-0 derivation extending t: Λ¹ → Λ¹, where
/// column m of t holds the image of e^m.
Matrix induced_derivation(const Matrix& t, int k);

/// dim H^i(k)^g for i = 0..dim k, where k is a codimension-one ideal and a
/// spans a complement. The action of a on H^i(k) is the Lie derivative
/// −(ad_a|k)ᵀ extended as a derivation, compressed to a complement of B^i in Z^i.
std::vector<int> invariant_cohomology_dims(const LieAlgebra& g, const Subspace& ideal, const Vector& a);

}  // namespace liekernel
