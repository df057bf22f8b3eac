#include "liekernel/liealg.hpp"

namespace liekernel {

StructureConstants::StructureConstants(int n) : n_(n), c_(size_t(n) * size_t(n) * size_t(n)) {
  if (n < 0) throw DomainError("negative dimension");
}

void StructureConstants::add(int i, int j, int k, const Rational& v) {
  if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_) {
    throw DomainError("structure constant index out of range");
  }
  if (i == j) {
    if (!is_zero(v)) throw DomainError("[e_i, e_i] must vanish");
    return;
  }
  c_[index(i, j, k)] += v;
  c_[index(j, i, k)] -= v;
}

Vector StructureConstants::bracket_basis(int i, int j) const {
  Vector v(static_cast<size_t>(n_));
  for (int k = 0; k < n_; ++k) v[size_t(k)] = (*this)(i, j, k);
  return v;
}

Vector StructureConstants::bracket(const Vector& x, const Vector& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_) {
    throw DomainError("bracket: dimension mismatch");
  }
  Vector out = zero_vector(n_);
  for (int i = 0; i < n_; ++i) {
    if (is_zero(x[size_t(i)])) continue;
    for (int j = 0; j < n_; ++j) {
      if (i == j || is_zero(y[size_t(j)])) continue;
      const Rational xy = x[size_t(i)] * y[size_t(j)];
      for (int k = 0; k < n_; ++k) {
        const Rational& c = (*this)(i, j, k);
        if (!is_zero(c)) out[size_t(k)] += xy * c;
      }
    }
  }
  return out;
}

Matrix StructureConstants::ad(const Vector& x) const {
  Matrix m(n_, n_);
  for (int b = 0; b < n_; ++b) {
    const Vector col = bracket(x, unit_vector(n_, b));
    for (int a = 0; a < n_; ++a) m(a, b) = col[size_t(a)];
  }
  return m;
}

std::optional<std::string> StructureConstants::jacobi_violation() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      for (int k = j + 1; k < n_; ++k) {
        const Vector ei = unit_vector(n_, i);
        const Vector ej = unit_vector(n_, j);
        const Vector ek = unit_vector(n_, k);
        Vector sum = bracket(bracket(ei, ej), ek);
        const Vector b = bracket(bracket(ej, ek), ei);
        const Vector c = bracket(bracket(ek, ei), ej);
        for (int m = 0; m < n_; ++m) {
          if (!is_zero(sum[size_t(m)] + b[size_t(m)] + c[size_t(m)])) {
            return "Jacobi identity fails on (e" + std::to_string(i + 1) + ", e" +
                   std::to_string(j + 1) + ", e" + std::to_string(k + 1) + ")";
          }
        }
      }
    }
  }
  return std::nullopt;
}

LieAlgebra LieAlgebra::validate(StructureConstants c, std::string name) {
  if (auto bad = c.jacobi_violation()) {
    throw DomainError(name.empty() ? *bad : name + ": " + *bad);
  }
  return LieAlgebra(std::move(c), std::move(name));
}

LieAlgebra LieAlgebra::renamed(std::string name) const { return LieAlgebra(c_, std::move(name)); }

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const { return c_.bracket(x, y); }

LieAlgebra abelian(int n) {
  return LieAlgebra::validate(StructureConstants(n), "R^" + std::to_string(n));
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> vecs;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) vecs.push_back(g.bracket(x, y));
  }
  return Subspace::span(g.dim(), vecs);
}

Subspace derived_algebra(const LieAlgebra& g) {
  const Subspace all = Subspace::whole(g.dim());
  return bracket_span(g, all, all);
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::whole(g.dim())};
  while (true) {
    Subspace next = bracket_span(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace all = Subspace::whole(g.dim());
  std::vector<Subspace> series{all};
  while (true) {
    Subspace next = bracket_span(g, all, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().dim() == 0; }
bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().dim() == 0; }

bool is_unimodular(const LieAlgebra& g) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i) {
    Rational trace = 0;
    for (int k = 0; k < n; ++k) trace += g.constants()(i, k, k);
    if (!is_zero(trace)) return false;
  }
  return true;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_span(g, s, s));
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_span(g, Subspace::whole(g.dim()), s));
}

LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s) {
  if (!is_subalgebra(g, s)) throw DomainError("subspace is not closed under the bracket");
  const int m = s.dim();
  StructureConstants c(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const Vector coords = s.coordinates(g.bracket(s.basis()[size_t(a)], s.basis()[size_t(b)]));
      for (int k = 0; k < m; ++k) c.add(a, b, k, coords[size_t(k)]);
    }
  }
  return LieAlgebra::validate(std::move(c));
}

LieAlgebra direct_sum(const LieAlgebra& h, const LieAlgebra& k) {
  const int nh = h.dim();
  const int n = nh + k.dim();
  StructureConstants c(n);
  for (int i = 0; i < nh; ++i) {
    for (int j = i + 1; j < nh; ++j) {
      for (int m = 0; m < nh; ++m) c.add(i, j, m, h.constants()(i, j, m));
    }
  }
  for (int i = 0; i < k.dim(); ++i) {
    for (int j = i + 1; j < k.dim(); ++j) {
      for (int m = 0; m < k.dim(); ++m) c.add(nh + i, nh + j, nh + m, k.constants()(i, j, m));
    }
  }
  std::string name;
  if (!h.name().empty() && !k.name().empty()) name = h.name() + "+" + k.name();
  return LieAlgebra::validate(std::move(c), std::move(name));
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p) {
  const int n = g.dim();
  if (p.rows() != n || p.cols() != n) throw DomainError("change_basis: matrix has wrong size");
  auto pinv = inverse(p);
  if (!pinv) throw DomainError("change_basis: matrix is singular");
  StructureConstants c(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Vector coords = *pinv * g.bracket(p.column(a), p.column(b));
      for (int k = 0; k < n; ++k) c.add(a, b, k, coords[size_t(k)]);
    }
  }
  return LieAlgebra::validate(std::move(c), g.name());
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(size_t(m.rows()) * size_t(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  }
  return v;
}

Matrix unflatten(const Vector& v, int n) {
  if (v.size() != size_t(n) * size_t(n)) throw DomainError("unflatten: wrong length");
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = v[size_t(r) * size_t(n) + size_t(c)];
  }
  return m;
}

LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis, std::string name) {
  const int m = static_cast<int>(basis.size());
  if (m == 0) return LieAlgebra::validate(StructureConstants(0), std::move(name));
  const int len = basis[0].rows() * basis[0].cols();
  Matrix cols(len, m);
  for (int j = 0; j < m; ++j) {
    const Vector f = flatten(basis[size_t(j)]);
    for (int r = 0; r < len; ++r) cols(r, j) = f[size_t(r)];
  }
  if (rank(cols) != m) throw DomainError("matrix_lie_algebra: basis is linearly dependent");
  StructureConstants c(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const Matrix comm = basis[size_t(a)] * basis[size_t(b)] - basis[size_t(b)] * basis[size_t(a)];
      auto coords = solve(cols, flatten(comm));
      if (!coords) throw DomainError("matrix_lie_algebra: span is not closed under commutators");
      for (int k = 0; k < m; ++k) c.add(a, b, k, (*coords)[size_t(k)]);
    }
  }
  return LieAlgebra::validate(std::move(c), std::move(name));
}

bool is_derivation(const LieAlgebra& g, const Matrix& d) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vector lhs = d * g.bracket_basis(i, j);
      const Vector a = g.bracket(d.column(i), unit_vector(n, j));
      const Vector b = g.bracket(unit_vector(n, i), d.column(j));
      for (int k = 0; k < n; ++k) {
        if (lhs[size_t(k)] != a[size_t(k)] + b[size_t(k)]) return false;
      }
    }
  }
  return true;
}

LieAlgebra semidirect_extension(const LieAlgebra& k, const Matrix& d, std::string name) {
  const int m = k.dim();
  if (d.rows() != m || d.cols() != m) throw DomainError("semidirect_extension: derivation has wrong size");
  if (!is_derivation(k, d)) throw DomainError("semidirect_extension: matrix is not a derivation");
  StructureConstants c(m + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int r = 0; r < m; ++r) c.add(i + 1, j + 1, r + 1, k.constants()(i, j, r));
    }
  }
  for (int b = 0; b < m; ++b) {
    for (int a = 0; a < m; ++a) c.add(0, b + 1, a + 1, d(a, b));
  }
  return LieAlgebra::validate(std::move(c), std::move(name));
}

Subspace derivation_algebra(const LieAlgebra& g) {
  const int n = g.dim();
  const auto& c = g.constants();
  // Unknown D(a,b) at column a*n+b. One equation per (i<j, k):
  //   Σ_m c(i,j,m) D(k,m) − Σ_a D(a,i) c(a,j,k) − Σ_a D(a,j) c(i,a,k) = 0.
  std::vector<Vector> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Vector row = zero_vector(n * n);
        for (int m = 0; m < n; ++m) row[size_t(k * n + m)] += c(i, j, m);
        for (int a = 0; a < n; ++a) {
          row[size_t(a * n + i)] -= c(a, j, k);
          row[size_t(a * n + j)] -= c(i, a, k);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return Subspace::whole(n * n);
  return Subspace::kernel(Matrix::from_rows(rows, n * n));
}

LieAlgebra derivation_lie_algebra(const LieAlgebra& g) {
  const Subspace der = derivation_algebra(g);
  std::vector<Matrix> basis;
  for (const auto& v : der.basis()) basis.push_back(unflatten(v, g.dim()));
  return matrix_lie_algebra(basis, g.name().empty() ? "Der" : "Der(" + g.name() + ")");
}

bool is_characteristically_nilpotent(const LieAlgebra& g) {
  if (!is_nilpotent(g)) throw DomainError("is_characteristically_nilpotent: algebra is not nilpotent");
  return is_nilpotent(derivation_lie_algebra(g));
}

}  // namespace liekernel
