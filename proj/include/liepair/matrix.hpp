#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liepair/scalar.hpp"

namespace liepair {

using Vector = std::vector<GaussScalar>;

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<GaussScalar> data);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Builds a matrix from its columns (all of equal length).
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<GaussScalar>& data() const { return data_; }
  std::vector<GaussScalar>& data() { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  Vector column(std::size_t c) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const GaussScalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const GaussScalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussScalar> data_;
};

/// a·b − b·a
Matrix commutator(const Matrix& a, const Matrix& b);
/// Kronecker product, row-major compatible: (a⊗b)(i·rb+k, j·cb+l) = a(i,j)·b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);
/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
GaussScalar trace(const Matrix& a);

bool is_zero(const Vector& v);
Vector& axpy(Vector& y, const GaussScalar& a, const Vector& x);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form with leftmost-column, topmost-row pivoting.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A particular solution of m·x = rhs with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// Kernel basis: one vector per free column (ascending), with a 1 in that
/// free slot and zeros in the other free slots.
std::vector<Vector> nullspace_basis(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace liepair
