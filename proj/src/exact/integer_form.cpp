#include "cobord/exact/integer_form.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cobord::exact {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace

std::optional<IntegerForm> IntegerForm::normalized(std::size_t rows, std::size_t cols,
                                                   std::vector<std::size_t> row_ptr,
                                                   std::vector<std::uint32_t> col_idx,
                                                   std::vector<std::int64_t> values,
                                                   Rational scale) {
  IntegerForm f;
  f.rows_ = rows;
  f.cols_ = cols;
  if (values.empty()) {
    f.row_ptr_.assign(rows + 1, 0);
    f.scale_ = Rational(0);
    return f;
  }
  std::int64_t g = 0;
  for (std::int64_t v : values) g = gcd64(g, v);
  if (values.front() < 0) g = -g;
  if (g != 1) {
    for (auto& v : values) v /= g;
    scale *= Rational(g);
  }
  f.row_ptr_ = std::move(row_ptr);
  f.col_idx_ = std::move(col_idx);
  f.values_ = std::move(values);
  f.scale_ = std::move(scale);
  return f;
}

std::optional<IntegerForm> IntegerForm::from(const Matrix& m) {
  if (m.cols() > UINT32_MAX) return std::nullopt;
  mpz_class lcm_den = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), e.value.value().get_den_mpz_t());
  }
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::uint32_t> col_idx;
  std::vector<std::int64_t> values;
  row_ptr.reserve(m.rows() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [j, v] : m.row(i)) {
      mpz_class scaled = v.value().get_num() * (lcm_den / v.value().get_den());
      if (!scaled.fits_slong_p()) return std::nullopt;
      col_idx.push_back(static_cast<std::uint32_t>(j));
      values.push_back(scaled.get_si());
    }
    row_ptr.push_back(values.size());
  }
  return normalized(m.rows(), m.cols(), std::move(row_ptr), std::move(col_idx), std::move(values),
                    Rational(mpq_class(1, lcm_den)));
}

Matrix IntegerForm::to_matrix() const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      m.set(i, col_idx_[k], scale_ * Rational(values_[k]));
    }
  }
  return m;
}

IntegerForm IntegerForm::scaled(const Rational& factor) const {
  if (factor.is_zero()) {
    IntegerForm z;
    z.rows_ = rows_;
    z.cols_ = cols_;
    z.row_ptr_.assign(rows_ + 1, 0);
    z.scale_ = Rational(0);
    return z;
  }
  IntegerForm f = *this;
  f.scale_ *= factor;
  return f;
}

std::size_t IntegerForm::hash() const {
  std::size_t h = rows_ * 0x100000001b3ULL ^ cols_;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    h ^= (static_cast<std::size_t>(col_idx_[k]) * 0x9e3779b97f4a7c15ULL +
          static_cast<std::size_t>(values_[k])) + (h << 6) + (h >> 2);
  }
  return h ^ (scale_.hash() + (h << 6));
}

std::optional<IntegerForm> multiply(const IntegerForm& a, const IntegerForm& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("multiply: shape mismatch " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
  }
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::uint32_t> col_idx;
  std::vector<std::int64_t> values;
  row_ptr.reserve(a.rows_ + 1);
  std::vector<std::int64_t> acc(b.cols_, 0);
  std::vector<char> used(b.cols_, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t p = a.row_ptr_[i]; p < a.row_ptr_[i + 1]; ++p) {
      const std::int64_t x = a.values_[p];
      const std::size_t k = a.col_idx_[p];
      for (std::size_t q = b.row_ptr_[k]; q < b.row_ptr_[k + 1]; ++q) {
        const std::uint32_t c = b.col_idx_[q];
        std::int64_t prod;
        if (__builtin_mul_overflow(x, b.values_[q], &prod)) return std::nullopt;
        if (__builtin_add_overflow(acc[c], prod, &acc[c])) return std::nullopt;
        if (!used[c]) {
          used[c] = 1;
          touched.push_back(c);
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t c : touched) {
      if (acc[c] != 0) {
        col_idx.push_back(c);
        values.push_back(acc[c]);
      }
      acc[c] = 0;
      used[c] = 0;
    }
    touched.clear();
    row_ptr.push_back(values.size());
  }
  return IntegerForm::normalized(a.rows_, b.cols_, std::move(row_ptr), std::move(col_idx),
                                 std::move(values), a.scale_ * b.scale_);
}

IntegerForm kron(const IntegerForm& a, const IntegerForm& b) {
  IntegerForm out;
  out.rows_ = a.rows_ * b.rows_;
  out.cols_ = a.cols_ * b.cols_;
  out.scale_ = a.scale_ * b.scale_;
  out.row_ptr_.assign(1, 0);
  out.row_ptr_.reserve(out.rows_ + 1);
  if (out.scale_.is_zero()) {
    out.row_ptr_.assign(out.rows_ + 1, 0);
    return out;
  }
  for (std::size_t ra = 0; ra < a.rows_; ++ra) {
    for (std::size_t rb = 0; rb < b.rows_; ++rb) {
      for (std::size_t p = a.row_ptr_[ra]; p < a.row_ptr_[ra + 1]; ++p) {
        for (std::size_t q = b.row_ptr_[rb]; q < b.row_ptr_[rb + 1]; ++q) {
          std::int64_t prod;
          if (__builtin_mul_overflow(a.values_[p], b.values_[q], &prod)) {
            throw std::overflow_error("kron: integer form entry overflow");
          }
          out.col_idx_.push_back(static_cast<std::uint32_t>(a.col_idx_[p] * b.cols_ + b.col_idx_[q]));
          out.values_.push_back(prod);
        }
      }
      out.row_ptr_.push_back(out.values_.size());
    }
  }
  return out;
}

}  // namespace cobord::exact
