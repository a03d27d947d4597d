#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liedual/rational.hpp"

namespace liedual {

/// Dense rational matrix, row-major. Linear maps act on column vectors:
/// column j holds the image of the j-th basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;

  bool operator==(const Matrix& other) const = default;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, Matrix a);
Vector operator*(const Matrix& a, const Vector& v);

/// Block-diagonal sum a ⊕ b.
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;                    // reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Canonical basis of {x : m x = 0}: one vector per free column, with a one
/// in that column and zeros in the other free columns.
std::vector<Vector> nullspace(const Matrix& m);

/// Some x with a x = b, if the system is consistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(Matrix m);

/// Accumulates linear equations one row at a time, keeping them in reduced
/// echelon form. Suited to the heavily redundant systems produced by
/// invariance and Leibniz conditions.
class RowReducer {
 public:
  explicit RowReducer(std::size_t unknowns) : n_(unknowns) {}

  /// Returns true when the row was independent of those already added.
  bool add(Vector row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t unknowns() const { return n_; }
  std::vector<Vector> nullspace() const;

 private:
  std::size_t n_;
  std::vector<Vector> rows_;          // each row normalised so its pivot is 1
  std::vector<std::size_t> pivots_;
};

}  // namespace liedual
