#pragma once

#include <optional>
#include <vector>

#include "liekernel/rational.hpp"

namespace liekernel {

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * size_t(cols)) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vector>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return data_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

  Vector row(int r) const;
  Vector column(int c) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  size_t index(int r, int c) const { return size_t(r) * size_t(cols_) + size_t(c); }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by Bareiss fraction-free elimination. Rows are first scaled to
/// integers, so every intermediate entry is an exact integer minor.
int rank(const Matrix& m);

/// Determinant of a square matrix, again fraction-free.
Rational determinant(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Reduced row echelon form; `pivots` receives pivot columns in increasing order.
Matrix rref(const Matrix& m, std::vector<int>* pivots = nullptr);

/// A linear subspace of Q^n stored by its reduced-echelon basis. Equal
/// subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(int ambient = 0) : ambient_(ambient) {}

  static Subspace span(int ambient, const std::vector<Vector>& vectors);
  static Subspace whole(int ambient);
  static Subspace kernel(const Matrix& m);  // {x : m x = 0}
  static Subspace image(const Matrix& m);   // column space

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Canonical representative of v modulo this subspace: the unique vector
  /// in v + U with zero entries at every pivot column.
  Vector reduce(const Vector& v) const;

  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  int ambient_;
  std::vector<Vector> basis_;
  std::vector<int> pivots_;
};

/// Some solution of m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace liekernel
