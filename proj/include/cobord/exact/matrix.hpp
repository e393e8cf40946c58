#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cobord/exact/rational.hpp"

namespace cobord::exact {

/// Sparse exact matrix. Each row keeps its nonzero entries sorted by column; zeros are never stored.
class Matrix {
 public:
  struct Entry {
    std::size_t col;
    Rational value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_dense(std::size_t rows, std::size_t cols, std::span<const Rational> row_major);
  static Matrix scalar(const Rational& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  std::string shape() const;

  Rational at(std::size_t row, std::size_t col) const;
  /// Stores `value` at (row, col), erasing the entry when value is zero.
  void set(std::size_t row, std::size_t col, const Rational& value);
  std::span<const Entry> row(std::size_t r) const { return data_[r]; }

  Matrix transpose() const;
  Matrix scaled(const Rational& factor) const;
  /// Value of a 1x1 matrix.
  Rational as_scalar() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  std::size_t hash() const;

 private:
  friend class MatrixBuilder;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

/// Exact product a * b. Rows are distributed over OpenMP threads.
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Single-threaded reference for mat_mul.
Matrix mat_mul_serial(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, unsigned long exponent);

/// Kronecker product, left factor outermost (row index = ra * b.rows() + rb).
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_serial(const Matrix& a, const Matrix& b);

/// Tensor-factor permutation: factor t of the input (dimension dims[t]) lands at position p[t].
Matrix perm_matrix(std::span<const std::size_t> p, std::span<const std::size_t> dims);
/// Uniform variant: every factor has dimension block_dim.
Matrix perm_matrix(std::span<const std::size_t> p, std::size_t block_dim);

/// Gauss-Jordan inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace cobord::exact
