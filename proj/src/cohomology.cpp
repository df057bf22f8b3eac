#include "liekernel/cohomology.hpp"

#include <map>

namespace liekernel {

DifferentialAlgebra<Rational> chevalley_eilenberg(const StructureConstants& c) {
  const int n = c.dim();
  check_exterior_dim(n);
  std::vector<KForm> gens;
  for (int m = 0; m < n; ++m) {
    KForm dm(n, 2);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!is_zero(c(i, j, m))) dm.add(bit(i) | bit(j), -c(i, j, m));
      }
    }
    gens.push_back(std::move(dm));
  }
  return DifferentialAlgebra<Rational>(std::move(gens));
}

KForm differential(const LieAlgebra& g, const KForm& a) { return chevalley_eilenberg(g.constants()).d(a); }

namespace {

Matrix differential_matrix(const DifferentialAlgebra<Rational>& da, int n, int k) {
  const auto cols = subsets_of_size(n, k);
  const auto rows = subsets_of_size(n, k + 1);
  std::map<Mask, int> row_index;
  for (size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = static_cast<int>(r);
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    const KForm image = da.d(KForm::monomial(n, cols[c]));
    for (const auto& [mask, v] : image.terms()) m(row_index.at(mask), static_cast<int>(c)) = v;
  }
  return m;
}

}  // namespace

Matrix ce_differential(const StructureConstants& c, int k) {
  if (k < 0 || k > c.dim()) throw DomainError("ce_differential: degree out of range");
  return differential_matrix(chevalley_eilenberg(c), c.dim(), k);
}

Matrix ce_differential(const LieAlgebra& g, int k) { return ce_differential(g.constants(), k); }

CEComplex::CEComplex(const LieAlgebra& g) : g_(g) {
  const int n = g.dim();
  const auto da = chevalley_eilenberg(g.constants());
  std::vector<int> ranks;
  for (int k = 0; k <= n; ++k) {
    d_.push_back(differential_matrix(da, n, k));
    ranks.push_back(rank(d_.back()));
  }
  for (int k = 0; k <= n; ++k) {
    const int total = static_cast<int>(subsets_of_size(n, k).size());
    const int z = total - ranks[size_t(k)];
    const int b = k == 0 ? 0 : ranks[size_t(k - 1)];
    report_.dim_z.push_back(z);
    report_.dim_b.push_back(b);
    report_.betti.push_back(z - b);
  }
}

Subspace CEComplex::cocycles(int k) const { return Subspace::kernel(differential(k)); }

Subspace CEComplex::coboundaries(int k) const {
  if (k == 0) return Subspace(1);
  return Subspace::image(differential(k - 1));
}

CohomologyReport betti(const LieAlgebra& g) { return CEComplex(g).report(); }

bool is_23_trivial(const CohomologyReport& r) {
  auto b = [&](size_t k) { return k < r.betti.size() ? r.betti[k] : 0; };
  return b(2) == 0 && b(3) == 0;
}

bool is_23_trivial(const LieAlgebra& g) { return is_23_trivial(betti(g)); }

Matrix induced_derivation(const Matrix& t, int k) {
  const int n = t.rows();
  if (t.cols() != n) throw DomainError("induced_derivation: matrix must be square");
  const auto basis = subsets_of_size(n, k);
  std::map<Mask, int> index;
  for (size_t r = 0; r < basis.size(); ++r) index[basis[r]] = static_cast<int>(r);
  Matrix out(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  for (size_t col = 0; col < basis.size(); ++col) {
    const Mask mask = basis[col];
    for (int p : indices_of(mask)) {
      const Mask others = mask & ~bit(p);
      for (int b = 0; b < n; ++b) {
        if (is_zero(t(b, p)) || (others & bit(b))) continue;
        // Moving b from p's slot to its sorted slot crosses the indices strictly between.
        const int lo = std::min(b, p);
        const int hi = std::max(b, p);
        const Mask between = others & (bit(hi) - 1) & ~(bit(lo + 1) - 1);
        const Rational v = degree_of(between) & 1 ? Rational(-t(b, p)) : t(b, p);
        out(index.at(others | bit(b)), static_cast<int>(col)) += v;
      }
    }
  }
  return out;
}

std::vector<int> invariant_cohomology_dims(const LieAlgebra& g, const Subspace& ideal, const Vector& a) {
  const int n = g.dim();
  if (ideal.ambient() != n || static_cast<int>(a.size()) != n) {
    throw DomainError("invariant_cohomology_dims: dimension mismatch");
  }
  if (!is_ideal(g, ideal)) throw DomainError("invariant_cohomology_dims: subspace is not an ideal");
  if (ideal.dim() != n - 1 || ideal.contains(a)) {
    throw DomainError("invariant_cohomology_dims: a does not span a complement of the ideal");
  }
  const LieAlgebra k = subalgebra(g, ideal);
  const int m = k.dim();
  Matrix d(m, m);
  for (int b = 0; b < m; ++b) {
    const Vector col = ideal.coordinates(g.bracket(a, ideal.basis()[size_t(b)]));
    for (int r = 0; r < m; ++r) d(r, b) = col[size_t(r)];
  }
  Matrix t(m, m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) t(r, c) = -d(c, r);
  }

  const CEComplex complex(k);
  std::vector<int> dims;
  for (int i = 0; i <= m; ++i) {
    const Subspace z = complex.cocycles(i);
    const Subspace b = complex.coboundaries(i);
    std::vector<Vector> reduced;
    for (const auto& v : z.basis()) reduced.push_back(b.reduce(v));
    const Subspace complement = Subspace::span(z.ambient(), reduced);
    const int h = complement.dim();
    if (h == 0) {
      dims.push_back(0);
      continue;
    }
    const Matrix lie = induced_derivation(t, i);
    Matrix action(h, h);
    for (int c = 0; c < h; ++c) {
      const Vector image = complement.coordinates(b.reduce(lie * complement.basis()[size_t(c)]));
      for (int r = 0; r < h; ++r) action(r, c) = image[size_t(r)];
    }
    dims.push_back(h - rank(action));
  }
  return dims;
}

}  // namespace liekernel
