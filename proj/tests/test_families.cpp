#include <doctest.h>

#include <cmath>

#include "liekernel/cohomology.hpp"
#include "liekernel/families.hpp"
#include "test_helpers.hpp"

using namespace testing;

TEST_CASE("family construction") {
  CHECK(make_family({"r3l", q(1), {}}) == alg("(0,21,31)"));
  CHECK(make_family({"d4l", q(1, 2), {}}) == alg("(0,1/2.21,1/2.31,41+32)"));
  CHECK(make_family({"h4", {}, {}}) == alg("(0,21+31,31,2.41+32)"));
  CHECK_THROWS_WITH_AS(make_family({"r4l", q(-1), {}}), doctest::Contains("lambda"), DomainError);
  CHECK_THROWS_AS(make_family({"r3l", {}, {}}), DomainError);
  CHECK_THROWS_AS(make_family({"nope", {}, {}}), DomainError);
  CHECK(admissibility_violation({"r4ml", q(1, 4), q(1, 2)}));  // lambda < mu
  CHECK(admissibility_violation({"r4ml", q(1, 2), q(-1, 2)}));  // mu + lambda = 0
  CHECK_FALSE(admissibility_violation({"r4ml", q(1, 2), q(1, 2)}));
  for (const auto& name : family_names()) CHECK(family_dimension(name) >= 3);
}

TEST_CASE("table verification") {
  const auto checks = verify_tables(2);
  int grid = 0, excluded = 0;
  for (const auto& c : checks) {
    CAPTURE(c.spec.label());
    CHECK(c.passed);
    (c.admissible ? grid : excluded)++;
  }
  CHECK(grid == static_cast<int>(table_grid().size()));
  CHECK(excluded == static_cast<int>(table_exclusions().size()));
  CHECK_FALSE(is_23_trivial(instantiate_family({"r4l", q(-1, 2), {}})));
  for (auto l : {q(-1, 4), q(1, 4), q(-1, 2), q(1, 2), q(3, 4), q(1)}) {
    CHECK(is_23_trivial(make_family({"r3l", l, {}})));
  }
}

TEST_CASE("structure certificate") {
  const StructureCertificate c = structure_certificate(make_family({"h4", {}, {}}));
  CHECK(c.solvable);
  CHECK_FALSE(c.nilpotent);
  CHECK(c.b1 == 1);
  CHECK(c.derived_codim == 1);
  CHECK(c.derived_nilpotent);
  CHECK(c.consistent_with_23_trivial());
  CHECK(basis_aligned_split(direct_sum(alg("(0,21)"), alg("(0,21)"))));
  CHECK_FALSE(basis_aligned_split(alg("(0,21,31)")));
}

TEST_CASE("graded extensions") {
  const LieAlgebra r31 = graded_extension(make_graded(abelian(2), {1, 1}));
  CHECK(r31 == alg("(0,21,31)"));
  const LieAlgebra d = graded_extension(make_graded(alg("(0,0,12)"), {1, 1, 2}));
  CHECK(is_23_trivial(d));
  // Relabelling e4 → −e4 gives the form with +32.
  const Matrix flip = Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}, 4);
  CHECK(change_basis(d, flip) == alg("(0,21,31,2.41+32)"));
  CHECK_THROWS_AS(make_graded(alg("(0,0,12)"), {1, 1, 1}), DomainError);
  CHECK_THROWS_AS(make_graded(alg("(0,21)"), {1, 1}), DomainError);
  // Every basis form of positive degree has positive weight under the
  // grading derivation, so no invariant forms exist.
  const auto dims = invariant_cohomology_dims(
      d, Subspace::span(4, {unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)}), unit_vector(4, 0));
  CHECK(dims == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("characteristically nilpotent family blocks extensions") {
  const LieAlgebra cn = charnil7(1);
  CHECK(is_characteristically_nilpotent(cn));
  CHECK(is_characteristically_nilpotent(charnil7(2)));
  const ExtensionScan s = scan_solvable_extensions(cn, 4);
  CHECK(s.derivations_tried > 0);
  CHECK(s.extensions_23_trivial == 0);
  CHECK(s.extensions_with_invariant_cohomology == s.derivations_tried);
}

TEST_CASE("five-dimensional unimodular example") {
  const LieAlgebra s = make_unimodular_5dim();
  CHECK(is_unimodular(s));
  CHECK(is_23_trivial(s));
  CHECK(betti(s).betti[5] == 1);

  const auto roots = lattice_polynomial_roots();
  REQUIRE(roots.size() == 4);
  double log_sum = 0;
  for (double r : roots) {
    CHECK(std::abs((((r - 8) * r + 18) * r - 10) * r + 1) < 1e-10);
    log_sum += std::log(r);
  }
  CHECK(std::abs(log_sum) < 1e-12);
}

TEST_CASE("named algebras") {
  CHECK(su2().dim() == 3);
  CHECK(su3().dim() == 8);
  CHECK(u2() == alg("(0,-34,-42,-23)"));
  CHECK(heisenberg3() == alg("(0,0,12)"));
  CHECK(su2() == alg("(2.32,-2.31,2.21)"));
}
