#include <doctest.h>

#include "liekernel/g2flow.hpp"
#include "test_helpers.hpp"

using namespace testing;

TEST_CASE("rationals canonicalize and roots are exact") {
  CHECK(make_rational(2, 4) == Rational(1, 2));
  CHECK(make_rational(3, -6).get_str() == "-1/2");
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK(parse_rational("-3/9") == Rational(-1, 3));
  CHECK_FALSE(parse_rational("1.5"));
  CHECK_FALSE(parse_rational("2/0"));
  CHECK(exact_root(Rational(512), 9) == Rational(2));
  CHECK(exact_root(Rational(1, 512), 9) == Rational(1, 2));
  CHECK_FALSE(exact_root(Rational(2), 9));
  CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(-4)));
}

TEST_CASE("rank, determinant and subspaces") {
  const Matrix m = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 3);
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == 0);
  const Matrix v = Matrix::from_rows({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}, 3);
  CHECK(determinant(v) == 6);  // 2(6-2) - 0 + 1(1-3)
  const auto inv = inverse(v);
  REQUIRE(inv);
  CHECK(*inv * v == Matrix::identity(3));
  const Subspace k = Subspace::kernel(m);
  CHECK(k.dim() == 1);
  CHECK(k.contains(Vector{1, -2, 1}));
  const Subspace a = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  const Subspace b = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(a.intersect(b).dim() == 1);
  CHECK(a.sum(b) == Subspace::whole(3));
  CHECK(Subspace::span(3, {{2, 4, 0}, {1, 2, 0}}).dim() == 1);
}

TEST_CASE("wedge basics") {
  const KForm e1 = form("1", 7), e2 = form("2", 7);
  CHECK(wedge(e1, e2) == form("12", 7));
  CHECK(wedge(e2, e1) == -form("12", 7));
  CHECK(wedge(form("12", 7), form("12", 7)).is_zero());
  const KForm w = form("45+67", 7);
  CHECK(wedge(w, w) == Rational(2) * form("4567", 7));
}

TEST_CASE("wedge is graded-commutative and associative on random forms") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 6;
    const int ka = 1 + trial % 3, kb = 1 + (trial / 3) % 3;
    const KForm a = random_k_form(rng, n, ka), b = random_k_form(rng, n, kb), c = random_k_form(rng, n, 1);
    const int sign = (ka * kb) % 2 ? -1 : 1;
    CHECK(wedge(a, b) == Rational(sign) * wedge(b, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("interior product") {
  CHECK(interior(unit_vector(7, 0), form("123", 7)) == form("23", 7));
  CHECK(interior(unit_vector(7, 3), form("123", 7)).is_zero());
  CHECK(interior(unit_vector(7, 0), phi0()) == form("23+45+67", 7));
}

TEST_CASE("interior is an antiderivation and matches evaluation") {
  std::mt19937_64 rng(2);
  const int n = 5;
  for (int trial = 0; trial < 20; ++trial) {
    const int ka = 1 + trial % 3;
    const KForm a = random_k_form(rng, n, ka), b = random_k_form(rng, n, 2);
    const Vector v = random_vec(rng, n);
    const int sign = ka % 2 ? -1 : 1;
    CHECK(interior(v, wedge(a, b)) == wedge(interior(v, a), b) + Rational(sign) * wedge(a, interior(v, b)));
    // (v ⌟ a)(w...) = a(v, w...)
    std::vector<Vector> rest;
    for (int i = 1; i < ka; ++i) rest.push_back(random_vec(rng, n));
    std::vector<Vector> all{v};
    all.insert(all.end(), rest.begin(), rest.end());
    if (ka > 1) CHECK(evaluate_form(interior(v, a), rest) == evaluate_form(a, all));
  }
}

TEST_CASE("bivector contraction") {
  const KVector e12 = KVector::monomial(7, bit(0) | bit(1));
  CHECK(bivector_contract(e12, form("123", 7)) == form("3", 7));
  CHECK(bivector_contract(e12, form("145", 7)).is_zero());
  const KVector p = KVector::monomial(7, bit(3) | bit(4)) + KVector::monomial(7, bit(5) | bit(6));
  CHECK(bivector_contract(p, phi0()) == Rational(2) * form("1", 7));

  std::mt19937_64 rng(3);
  const int n = 5;
  for (int trial = 0; trial < 10; ++trial) {
    const KForm c = random_k_form(rng, n, 3);
    const Vector x = random_vec(rng, n), y = random_vec(rng, n);
    const KForm got = bivector_contract(wedge(KVector::from_vector(x), KVector::from_vector(y)), c);
    for (int k = 0; k < n; ++k) CHECK(got.coeff(bit(k)) == evaluate_form(c, {x, y, unit_vector(n, k)}));
  }
}

TEST_CASE("Hodge star") {
  const Matrix id = Matrix::identity(7);
  CHECK(hodge_star(form("123", 7), id) == form("4567", 7));
  CHECK(hodge_star(phi0(), id) == star_phi0());
  CHECK(hodge_star(hodge_star(phi0(), id), id) == phi0());
  std::mt19937_64 rng(4);
  for (int k = 0; k <= 5; ++k) {
    const KForm a = random_k_form(rng, 5, k);
    const int sign = (k * (5 - k)) % 2 ? -1 : 1;
    CHECK(hodge_star(hodge_star(a, Matrix::identity(5)), Matrix::identity(5)) == Rational(sign) * a);
  }
  // a ∧ ∗a = |a|² vol for a diagonal metric
  const Matrix g = Matrix::from_rows({{4, 0, 0}, {0, 1, 0}, {0, 0, 9}}, 3);
  const KForm e1 = form("1", 3);
  CHECK(wedge(e1, hodge_star(e1, g)) == Rational(1, 4) * Rational(6) * form("123", 3));
  CHECK_THROWS_AS(hodge_star(e1, Matrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}, 3)), DomainError);
}

TEST_CASE("pullback and dimension limit") {
  // Swapping two coordinates negates e12.
  const Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}}, 2);
  CHECK(pullback(form("12", 2), swap) == -form("12", 2));
  CHECK_THROWS_AS(KForm(17, 1), DomainError);
  CHECK(to_string(form("12-1/2.34", 4)) == "12-1/2.34");
}

TEST_CASE("differential algebra squares to zero with polynomial coefficients") {
  const Matrix f = Matrix::from_rows({{1, 2}, {3, -1}}, 2);
  const auto dga = flow_dga(f);
  CHECK(dga.squares_to_zero());
  // d(t·θ₁) = dt∧θ₁ + t·dθ₁
  const PolyForm th1 = PolyForm::monomial(7, bit(kTheta1));
  const PolyForm dt = PolyForm::monomial(7, bit(kTime));
  const PolyForm expected = wedge(dt, th1) + Polynomial::t() * dga.d(th1);
  CHECK(dga.d(Polynomial::t() * th1) == expected);
}
