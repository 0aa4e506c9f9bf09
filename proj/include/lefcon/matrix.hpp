#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefcon/rational.hpp"

namespace lefcon {

class DimensionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  /// Horizontal concatenation; row counts must agree.
  Matrix hcat(const Matrix& right) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& m);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Null-space basis: one vector per free column (ascending), with that free
/// variable set to 1 and the other free variables 0.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Particular solution of m x = b with free variables set to 0, or nullopt
/// when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Column-wise solve of m X = b. nullopt if any column is inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

Rational trace(const Matrix& m);

}  // namespace lefcon
