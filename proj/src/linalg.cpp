#include "liekernel/linalg.hpp"

#include <utility>

namespace liekernel {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[size_t(r)].size()) != cols) {
      throw DomainError("Matrix::from_rows: ragged rows");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = rows[size_t(r)][size_t(c)];
  }
  return m;
}

Vector Matrix::row(int r) const {
  Vector v(static_cast<size_t>(cols_));
  for (int c = 0; c < cols_; ++c) v[size_t(c)] = (*this)(r, c);
  return v;
}

Vector Matrix::column(int c) const {
  Vector v(static_cast<size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[size_t(r)] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!liekernel::is_zero(x)) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (liekernel::is_zero(aik)) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != static_cast<int>(v.size())) throw DomainError("matrix-vector: shape mismatch");
  Vector out = zero_vector(a.rows_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) out[size_t(i)] += a(i, k) * v[size_t(k)];
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum: shape mismatch");
  Matrix out = a;
  for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference: shape mismatch");
  Matrix out = a;
  for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Clears denominators row by row.
IntRows integer_rows(const Matrix& m) {
  IntRows rows(size_t(m.rows()), std::vector<mpz_class>(size_t(m.cols())));
  for (int r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (int c = 0; c < m.cols(); ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (int c = 0; c < m.cols(); ++c) {
      rows[size_t(r)][size_t(c)] = m(r, c).get_num() * (lcm / m(r, c).get_den());
    }
  }
  return rows;
}

// Bareiss elimination in place; returns rank and the sign of the row swaps.
int bareiss(IntRows& a, int cols, int* swap_sign) {
  const int rows = static_cast<int>(a.size());
  int sign = 1;
  int r = 0;
  mpz_class prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[size_t(p)][size_t(c)] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[size_t(p)], a[size_t(r)]);
      sign = -sign;
    }
    const mpz_class& piv = a[size_t(r)][size_t(c)];
    for (int i = r + 1; i < rows; ++i) {
      auto& row = a[size_t(i)];
      const mpz_class lead = row[size_t(c)];
      for (int j = c + 1; j < cols; ++j) {
        mpz_class v = piv * row[size_t(j)] - lead * a[size_t(r)][size_t(j)];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        row[size_t(j)] = std::move(v);
      }
      row[size_t(c)] = 0;
    }
    prev = piv;
    ++r;
  }
  if (swap_sign) *swap_sign = sign;
  return r;
}

}  // namespace

int rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntRows a = integer_rows(m);
  return bareiss(a, m.cols(), nullptr);
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;
  // Row scaling by the lcm of each row multiplies det by that lcm.
  Rational scale = 1;
  for (int r = 0; r < n; ++r) {
    mpz_class lcm = 1;
    for (int c = 0; c < n; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    scale *= Rational(lcm);
  }
  IntRows a = integer_rows(m);
  int sign = 1;
  if (bareiss(a, n, &sign) < n) return 0;
  Rational det(a[size_t(n - 1)][size_t(n - 1)]);
  if (sign < 0) det = -det;
  return det / scale;
}

Matrix rref(const Matrix& m, std::vector<int>* pivots) {
  Matrix a = m;
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Rational f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  Matrix out(r, a.cols());
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  if (pivots) *pivots = std::move(piv);
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse: matrix not square");
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> piv;
  Matrix red = rref(aug, &piv);
  if (static_cast<int>(piv.size()) < n || piv[size_t(n - 1)] >= n) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  }
  return inv;
}

Subspace Subspace::span(int ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Matrix red = rref(Matrix::from_rows(vectors, ambient), &s.pivots_);
  for (int r = 0; r < red.rows(); ++r) s.basis_.push_back(red.row(r));
  return s;
}

Subspace Subspace::whole(int ambient) {
  std::vector<Vector> rows;
  for (int i = 0; i < ambient; ++i) rows.push_back(unit_vector(ambient, i));
  return span(ambient, rows);
}

Subspace Subspace::kernel(const Matrix& m) {
  std::vector<int> piv;
  Matrix red = rref(m, &piv);
  const int n = m.cols();
  std::vector<bool> is_pivot(size_t(n), false);
  for (int p : piv) is_pivot[size_t(p)] = true;
  std::vector<Vector> vecs;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[size_t(free)]) continue;
    Vector v = zero_vector(n);
    v[size_t(free)] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[size_t(piv[r])] = -red(int(r), free);
    vecs.push_back(std::move(v));
  }
  return span(n, vecs);
}

Subspace Subspace::image(const Matrix& m) {
  std::vector<Vector> cols;
  for (int c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return span(m.rows(), cols);
}

Vector Subspace::reduce(const Vector& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw DomainError("Subspace::reduce: dimension mismatch");
  Vector out = v;
  for (size_t r = 0; r < basis_.size(); ++r) {
    const Rational f = out[size_t(pivots_[r])];
    if (is_zero(f)) continue;
    for (int j = 0; j < ambient_; ++j) out[size_t(j)] -= f * basis_[r][size_t(j)];
  }
  return out;
}

bool Subspace::contains(const Vector& v) const {
  for (const auto& x : reduce(v)) {
    if (!is_zero(x)) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw DomainError("Subspace::coordinates: vector not in subspace");
  Vector c(basis_.size());
  for (size_t r = 0; r < basis_.size(); ++r) c[r] = v[size_t(pivots_[r])];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // x = sum a_i u_i = sum b_j w_j  <=>  [U^T | -W^T] (a,b) = 0.
  const int du = dim();
  const int dw = other.dim();
  if (du == 0 || dw == 0) return Subspace(ambient_);
  Matrix m(ambient_, du + dw);
  for (int i = 0; i < du; ++i) {
    for (int k = 0; k < ambient_; ++k) m(k, i) = basis_[size_t(i)][size_t(k)];
  }
  for (int j = 0; j < dw; ++j) {
    for (int k = 0; k < ambient_; ++k) m(k, du + j) = -other.basis_[size_t(j)][size_t(k)];
  }
  std::vector<Vector> vecs;
  const Subspace solutions = kernel(m);
  for (const auto& sol : solutions.basis()) {
    Vector x = zero_vector(ambient_);
    for (int i = 0; i < du; ++i) {
      for (int k = 0; k < ambient_; ++k) x[size_t(k)] += sol[size_t(i)] * basis_[size_t(i)][size_t(k)];
    }
    vecs.push_back(std::move(x));
  }
  return span(ambient_, vecs);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw DomainError("solve: shape mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[size_t(i)];
  }
  std::vector<int> piv;
  Matrix red = rref(aug, &piv);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.cols());
  for (size_t r = 0; r < piv.size(); ++r) x[size_t(piv[r])] = red(int(r), m.cols());
  return x;
}

}  // namespace liekernel
