#include "liekernel/kernelmap.hpp"

namespace liekernel {

namespace {

Matrix bracket_map(const LieAlgebra& g, const std::vector<Mask>& pairs) {
  const int n = g.dim();
  Matrix l(n, static_cast<int>(pairs.size()));
  for (size_t c = 0; c < pairs.size(); ++c) {
    const auto idx = indices_of(pairs[c]);
    const Vector v = g.bracket_basis(idx[0], idx[1]);
    for (int r = 0; r < n; ++r) l(r, static_cast<int>(c)) = v[size_t(r)];
  }
  return l;
}

// Basis of a complement of B² in Λ²g*, already reduced modulo B².
std::vector<KForm> dual_basis(const LieKernel& kernel) {
  const int n = kernel.algebra().dim();
  const int total = static_cast<int>(kernel.pair_basis().size());
  std::vector<Vector> reduced;
  for (int i = 0; i < total; ++i) reduced.push_back(kernel.exact_two_forms().reduce(unit_vector(total, i)));
  const Subspace complement = Subspace::span(total, reduced);
  std::vector<KForm> out;
  for (const auto& v : complement.basis()) out.push_back(from_coordinates(n, 2, kernel.pair_basis(), v));
  return out;
}

Matrix dp_matrix(const LieKernel& kernel, const std::vector<KForm>& basis) {
  const LieAlgebra& g = kernel.algebra();
  const auto triples = subsets_of_size(g.dim(), 3);
  Matrix m(static_cast<int>(triples.size()), static_cast<int>(basis.size()));
  for (size_t c = 0; c < basis.size(); ++c) {
    const Vector v = coordinates(differential(g, basis[c]), triples);
    for (size_t r = 0; r < triples.size(); ++r) m(static_cast<int>(r), static_cast<int>(c)) = v[r];
  }
  return m;
}

KVector vector_of(const Vector& v) { return KVector::from_vector(v); }

}  // namespace

LieKernel::LieKernel(const LieAlgebra& g) : g_(g), pairs_(subsets_of_size(g.dim(), 2)) {
  check_exterior_dim(g.dim());
  const Matrix l = bracket_map(g, pairs_);
  p_ = pairs_.empty() ? Subspace(0) : Subspace::kernel(l);
  b2_ = pairs_.empty() ? Subspace(0) : Subspace::image(ce_differential(g, 1));
}

KVector LieKernel::element(int i) const {
  return from_coordinates<Rational, Variance::contravariant>(g_.dim(), 2, pairs_, p_.basis().at(size_t(i)));
}

std::vector<KVector> LieKernel::elements() const {
  std::vector<KVector> out;
  for (int i = 0; i < dim(); ++i) out.push_back(element(i));
  return out;
}

bool LieKernel::contains(const KVector& p) const {
  if (p.dim() != g_.dim() || p.degree() != 2) throw DomainError("LieKernel::contains: expected a bivector");
  return p_.contains(coordinates(p, pairs_));
}

PDualElement LieKernel::make_dual(const KForm& beta) const {
  if (beta.dim() != g_.dim() || beta.degree() != 2) throw DomainError("P* element must be a 2-form on g");
  if (pairs_.empty()) return PDualElement{beta};
  return PDualElement{from_coordinates(g_.dim(), 2, pairs_, b2_.reduce(coordinates(beta, pairs_)))};
}

KForm dP(const LieKernel& kernel, const PDualElement& beta) {
  return differential(kernel.algebra(), beta.representative);
}

DPProperties dP_properties(const LieAlgebra& g) {
  const LieKernel kernel(g);
  const auto basis = dual_basis(kernel);
  const int r = basis.empty() ? 0 : rank(dp_matrix(kernel, basis));
  const CEComplex complex(g);
  const int z3 = g.dim() >= 3 ? complex.report().dim_z[3] : 0;
  return DPProperties{r == static_cast<int>(basis.size()), r == z3};
}

PDualElement multimoment_value(const LieKernel& kernel, const KForm& psi) {
  const LieAlgebra& g = kernel.algebra();
  if (psi.dim() != g.dim() || psi.degree() != 3) throw DomainError("multimoment_value: expected a 3-form on g");
  const auto basis = dual_basis(kernel);
  const Matrix m = dp_matrix(kernel, basis);
  if (rank(m) != static_cast<int>(basis.size())) {
    throw DomainError("multimoment_value: b2 != 0, so d_P is not injective and the value is not unique");
  }
  if (!differential(g, psi).is_zero()) throw DomainError("multimoment_value: Psi is not closed");
  if (basis.empty()) {
    if (!psi.is_zero()) throw DomainError("multimoment_value: Psi is not in the image of d_P");
    return PDualElement{KForm(g.dim(), 2)};
  }
  const auto x = solve(m, coordinates(psi, subsets_of_size(g.dim(), 3)));
  if (!x) throw DomainError("multimoment_value: Psi is not in the image of d_P");
  KForm beta(g.dim(), 2);
  for (size_t j = 0; j < basis.size(); ++j) beta += (*x)[j] * basis[j];
  return kernel.make_dual(beta);
}

KVector ad_bivector(const LieAlgebra& g, const Vector& z, const KVector& p) {
  const int n = g.dim();
  KVector out(n, 2);
  for (const auto& [mask, c] : p.terms()) {
    const auto idx = indices_of(mask);
    const KVector x = KVector::monomial(n, bit(idx[0]));
    const KVector y = KVector::monomial(n, bit(idx[1]));
    const KVector zx = vector_of(g.bracket(z, unit_vector(n, idx[0])));
    const KVector zy = vector_of(g.bracket(z, unit_vector(n, idx[1])));
    out += c * (wedge(zx, y) + wedge(x, zy));
  }
  return out;
}

Subspace stabilizer(const LieKernel& kernel, const PDualElement& beta) {
  const LieAlgebra& g = kernel.algebra();
  const int n = g.dim();
  if (kernel.dim() == 0) return Subspace::whole(n);
  Matrix m(kernel.dim(), n);
  for (int r = 0; r < kernel.dim(); ++r) {
    const KVector p = kernel.element(r);
    for (int s = 0; s < n; ++s) m(r, s) = pair(beta.representative, ad_bivector(g, unit_vector(n, s), p));
  }
  return Subspace::kernel(m);
}

Subspace kernel_of_psi(const LieAlgebra& g, const KForm& psi) {
  const int n = g.dim();
  if (psi.dim() != n || psi.degree() == 0) throw DomainError("kernel_of_psi: expected a form of positive degree on g");
  const auto basis = subsets_of_size(n, psi.degree() - 1);
  Matrix m(static_cast<int>(basis.size()), n);
  for (int s = 0; s < n; ++s) {
    const Vector v = coordinates(interior(unit_vector(n, s), psi), basis);
    for (size_t r = 0; r < basis.size(); ++r) m(static_cast<int>(r), s) = v[r];
  }
  return Subspace::kernel(m);
}

OrbitCheck orbit_2plectic_check(const LieKernel& kernel, const PDualElement& beta) {
  OrbitCheck out;
  out.stabilizer = stabilizer(kernel, beta);
  out.kernel = kernel_of_psi(kernel.algebra(), dP(kernel, beta));
  out.condition_holds = out.stabilizer == out.kernel;
  out.orbit_dim = kernel.algebra().dim() - out.stabilizer.dim();
  return out;
}

}  // namespace liekernel
