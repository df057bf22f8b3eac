#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liekernel/liealg.hpp"
#include "liekernel/parser.hpp"
#include "liekernel/rational.hpp"

namespace liekernel {

// ---- Table families -------------------------------------------------------

/// Family names: r3, r3l, r3pl, r4, r4l, r4ml, r4pml, d4l, d4pl, h4.
/// Parameters are λ (l) and, for the two-parameter families, μ (m).
struct FamilySpec {
  std::string family;
  std::optional<Rational> lambda;
  std::optional<Rational> mu;

  std::string label() const;
};

const std::vector<std::string>& family_names();
int family_dimension(const std::string& family);
int family_parameter_count(const std::string& family);

/// Salamon expression for the family with its parameters unbound.
std::string family_template(const std::string& family);

/// Empty when admissible, else the violated side constraint.
std::optional<std::string> admissibility_violation(const FamilySpec& spec);

/// Instantiates without checking side constraints (Jacobi still checked).
LieAlgebra instantiate_family(const FamilySpec& spec);

/// Throws DomainError naming the constraint if the parameters are inadmissible.
LieAlgebra make_family(const FamilySpec& spec);

// ---- Structure certificate ------------------------------------------------

/// Necessary conditions for b₂ = b₃ = 0.
struct StructureCertificate {
  bool solvable = false;
  bool nilpotent = false;
  int b1 = 0;
  int derived_codim = 0;
  bool derived_nilpotent = false;
  bool basis_aligned_split = false;  // some split of the basis into two commuting ideals

  bool consistent_with_23_trivial() const {
    return solvable && !nilpotent && b1 == 1 && derived_codim == 1 && derived_nilpotent && !basis_aligned_split;
  }
};

StructureCertificate structure_certificate(const LieAlgebra& g);

/// Nonempty proper subset S of the basis such that span S and its
/// complement are commuting ideals, as a bitmask over basis indices.
std::optional<unsigned> basis_aligned_split(const LieAlgebra& g);

struct TableCheck {
  FamilySpec spec;
  bool admissible = false;  // grid point (true) or excluded value (false)
  bool is_23_trivial = false;
  bool certificate_ok = false;
  bool passed = false;      // grid: 23-trivial and certificate; excluded: fails either
  std::string expression;
};

/// Deterministic grids of admissible parameters plus the excluded values
/// at which the algebras degenerate.
std::vector<FamilySpec> table_grid();
std::vector<FamilySpec> table_exclusions();

/// Runs every grid and exclusion check; parallel over points.
std::vector<TableCheck> verify_tables(int threads = 0);

// ---- Graded nilpotent algebras --------------------------------------------

struct GradedNilpotent {
  LieAlgebra algebra;
  std::vector<int> weights;  // positive weight of each basis vector
};

/// Checks nilpotency and [e_i, e_j] ∈ span{e_k : w_k = w_i + w_j}.
GradedNilpotent make_graded(const LieAlgebra& k, std::vector<int> weights);

/// R·A ⋉ k with ad_A multiplying k_w by w; A is e_1.
LieAlgebra graded_extension(const GradedNilpotent& k);

// ---- Named algebras -------------------------------------------------------

LieAlgebra heisenberg3();
/// su(2) from the matrices i(E11−E22), E12−E21, i(E12+E21).
LieAlgebra su2();
/// su(3) in the basis A1, A2, B12, B13, B23, C12, C13, C23.
LieAlgebra su3();
/// R ⊕ su(2) with basis (T, e1, e2, e3) and de1 = −e23 cyclically.
LieAlgebra u2();
/// The seven-dimensional nilpotent family with parameter α.
LieAlgebra charnil7(const Rational& alpha);
/// (0,12,2.13,-4.14,15): a rational stand-in for the lattice example.
LieAlgebra make_unimodular_5dim();

/// Real roots of s⁴ − 8s³ + 18s² − 10s + 1 in increasing order.
std::vector<double> lattice_polynomial_roots();

/// Does any extension R·A ⋉ k by a derivation in the sample have vanishing
/// invariant cohomology in degrees 1..3?
struct ExtensionScan {
  int derivations_tried = 0;
  int extensions_23_trivial = 0;
  int extensions_with_invariant_cohomology = 0;
};

/// Samples the derivation basis and deterministic rational combinations.
ExtensionScan scan_solvable_extensions(const LieAlgebra& k, int combinations = 8);

}  // namespace liekernel
