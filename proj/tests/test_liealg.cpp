#include <doctest.h>

#include "liekernel/families.hpp"
#include "test_helpers.hpp"

using namespace testing;

namespace {

std::vector<int> dims(const std::vector<Subspace>& series) {
  std::vector<int> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

TEST_CASE("brackets") {
  const LieAlgebra r = alg("(0,21,l.31)", {{"l", q(1, 2)}});
  CHECK(r.bracket(unit_vector(3, 0), unit_vector(3, 1)) == unit_vector(3, 1));
  const Vector x{1, 2, 3};
  CHECK(r.bracket(x, x) == zero_vector(3));
  CHECK(alg("(0,0,12)").bracket(unit_vector(3, 0), unit_vector(3, 1)) == Vector{0, 0, -1});
  // ad is the bracket.
  const Matrix ad = r.ad(x);
  for (int b = 0; b < 3; ++b) CHECK(ad.column(b) == r.bracket(x, unit_vector(3, b)));
}

TEST_CASE("derived and lower central series") {
  CHECK(dims(derived_series(alg("(0,21,l.31)", {{"l", q(1, 2)}}))) == std::vector<int>{3, 2, 0});
  CHECK(dims(derived_series(abelian(3))) == std::vector<int>{3, 0});
  CHECK(dims(derived_series(su2())) == std::vector<int>{3});
  CHECK(dims(lower_central_series(alg("(0,0,12)"))) == std::vector<int>{3, 1, 0});
  CHECK(dims(lower_central_series(alg("(0,21+31,31)"))) == std::vector<int>{3, 2});
}

TEST_CASE("solvable, nilpotent, unimodular") {
  const LieAlgebra r3 = alg("(0,21+31,31)");
  CHECK(is_solvable(r3));
  CHECK_FALSE(is_nilpotent(r3));
  CHECK_FALSE(is_unimodular(r3));
  const LieAlgebra h3 = alg("(0,0,12)");
  CHECK(is_nilpotent(h3));
  CHECK(is_unimodular(h3));
  const LieAlgebra s5 = make_unimodular_5dim();
  CHECK(is_solvable(s5));
  CHECK(is_unimodular(s5));
  CHECK_FALSE(is_solvable(su2()));
  CHECK(is_unimodular(su3()));
}

TEST_CASE("direct sums") {
  const LieAlgebra h3 = alg("(0,0,12)");
  const LieAlgebra s = direct_sum(abelian(1), h3);
  CHECK(s.dim() == 4);
  CHECK(is_nilpotent(s));
  CHECK(is_nilpotent(direct_sum(h3, h3)));
  CHECK(direct_sum(h3, h3).dim() == 6);
  CHECK(direct_sum(alg("(0,21,31)"), abelian(1)).bracket_basis(0, 3) == zero_vector(4));
}

TEST_CASE("ideals and subalgebras") {
  const LieAlgebra g = alg("(0,21,l.31)", {{"l", q(1, 2)}});
  const Subspace k = Subspace::span(3, {unit_vector(3, 1), unit_vector(3, 2)});
  CHECK(is_ideal(g, k));
  CHECK(derived_algebra(g) == k);
  const Subspace line = Subspace::span(3, {unit_vector(3, 0)});
  CHECK(is_subalgebra(g, line));
  CHECK_FALSE(is_ideal(g, line));
}

TEST_CASE("change of basis preserves the algebra up to isomorphism") {
  // e3 → −e3 turns (0,0,12) into (0,0,-12).
  const Matrix p = Matrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}, 3);
  CHECK(change_basis(alg("(0,0,12)"), p) == alg("(0,0,-12)"));
}

TEST_CASE("derivations") {
  CHECK(derivation_algebra(abelian(2)).dim() == 4);
  CHECK(derivation_algebra(alg("(0,0,12)")).dim() == 6);
  CHECK_FALSE(is_characteristically_nilpotent(alg("(0,0,12)")));
  CHECK_FALSE(is_characteristically_nilpotent(abelian(3)));
  CHECK_THROWS_AS(is_characteristically_nilpotent(su2()), DomainError);

  const LieAlgebra cn = charnil7(1);
  CHECK(is_characteristically_nilpotent(cn));
  // Independent check: every derivation basis element is a nilpotent matrix.
  const Subspace der = derivation_algebra(cn);
  for (const auto& v : der.basis()) {
    Matrix d = unflatten(v, 7);
    CHECK(is_derivation(cn, d));
    Matrix power = d;
    for (int i = 1; i < 7; ++i) power = power * d;
    CHECK(power.is_zero());
  }
  // Closed under commutators.
  const auto& b = der.basis();
  for (size_t i = 0; i < b.size(); ++i) {
    for (size_t j = i + 1; j < b.size(); ++j) {
      CHECK(der.contains(flatten(commutator(unflatten(b[i], 7), unflatten(b[j], 7)))));
    }
  }
}

TEST_CASE("semidirect extensions and matrix algebras") {
  // R ⋉ R² with the identity derivation is (0,21,31).
  const LieAlgebra g = semidirect_extension(abelian(2), Matrix::identity(2));
  CHECK(g == alg("(0,21,31)"));
  CHECK_THROWS_AS(semidirect_extension(alg("(0,0,12)"), Matrix::identity(3)), DomainError);
  // so(3) from rotation generators has no solvable quotient.
  const Matrix lx = Matrix::from_rows({{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}, 3);
  const Matrix ly = Matrix::from_rows({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}, 3);
  const Matrix lz = Matrix::from_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}, 3);
  const LieAlgebra so3 = matrix_lie_algebra({lx, ly, lz});
  CHECK(derived_algebra(so3).dim() == 3);
  CHECK_THROWS_AS(matrix_lie_algebra({lx, ly}), DomainError);
}

TEST_CASE("Jacobi is enforced") {
  StructureConstants c(4);
  c.add(0, 1, 2, 1);
  c.add(0, 2, 3, 1);
  c.add(1, 2, 3, 1);
  c.add(1, 3, 0, 1);
  CHECK(c.jacobi_violation());
  CHECK_THROWS_AS(LieAlgebra::validate(c), DomainError);
}
