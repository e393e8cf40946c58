#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cobord/exact/matrix.hpp"

namespace cobord::exact {

/// A rational matrix written as scale * N, with N an integer matrix whose entries have gcd 1
/// and whose first nonzero entry (row-major) is positive. This form is unique, so two
/// matrices are equal iff their forms are equal. N is stored in CSR layout over int64.
///
/// Used as a fast exact kernel for bulk products; every operation reports overflow by
/// returning nullopt instead of wrapping.
class IntegerForm {
 public:
  static std::optional<IntegerForm> from(const Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& scale() const { return scale_; }
  std::size_t nnz() const { return values_.size(); }

  Matrix to_matrix() const;
  IntegerForm scaled(const Rational& factor) const;

  friend bool operator==(const IntegerForm&, const IntegerForm&) = default;
  std::size_t hash() const;

  friend std::optional<IntegerForm> multiply(const IntegerForm& a, const IntegerForm& b);
  friend IntegerForm kron(const IntegerForm& a, const IntegerForm& b);

 private:
  static std::optional<IntegerForm> normalized(std::size_t rows, std::size_t cols,
                                               std::vector<std::size_t> row_ptr,
                                               std::vector<std::uint32_t> col_idx,
                                               std::vector<std::int64_t> values, Rational scale);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::uint32_t> col_idx_;
  std::vector<std::int64_t> values_;
  Rational scale_;
};

/// a * b in integer form; nullopt when an intermediate leaves int64.
std::optional<IntegerForm> multiply(const IntegerForm& a, const IntegerForm& b);
/// Kronecker product. The product of two normalized forms is already normalized.
IntegerForm kron(const IntegerForm& a, const IntegerForm& b);

}  // namespace cobord::exact
