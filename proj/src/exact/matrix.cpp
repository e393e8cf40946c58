#include "cobord/exact/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cobord::exact {

namespace {

void check_same_inner(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul: shape mismatch " + a.shape() + " * " + b.shape());
  }
}

// Dense accumulator for one output row; only touched columns are visited when flushing.
class RowAccumulator {
 public:
  explicit RowAccumulator(std::size_t width) : values_(width), used_(width, 0) {}

  void add_product(std::size_t col, const mpq_class& x, const mpq_class& y) {
    if (!used_[col]) {
      used_[col] = 1;
      touched_.push_back(col);
      values_[col] = x * y;
    } else {
      values_[col] += x * y;
    }
  }

  std::vector<Matrix::Entry> flush() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<Matrix::Entry> out;
    out.reserve(touched_.size());
    for (std::size_t c : touched_) {
      used_[c] = 0;
      if (sgn(values_[c]) != 0) out.push_back({c, Rational(values_[c])});
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<mpq_class> values_;
  std::vector<char> used_;
  std::vector<std::size_t> touched_;
};

std::vector<Matrix::Entry> product_row(const Matrix& a, const Matrix& b, std::size_t r,
                                       RowAccumulator& acc) {
  for (const auto& [k, x] : a.row(r)) {
    for (const auto& [c, y] : b.row(k)) acc.add_product(c, x.value(), y.value());
  }
  return acc.flush();
}

}  // namespace

class MatrixBuilder {
 public:
  static std::vector<std::vector<Matrix::Entry>>& rows(Matrix& m) { return m.data_; }
};

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Rational(1)});
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
    std::size_t j = 0;
    for (const auto& v : row) {
      if (!v.is_zero()) m.data_[i].push_back({j, v});
      ++j;
    }
    ++i;
  }
  return m;
}

Matrix Matrix::from_dense(std::size_t rows, std::size_t cols, std::span<const Rational> row_major) {
  if (row_major.size() != rows * cols) throw std::invalid_argument("from_dense: size mismatch");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& v = row_major[i * cols + j];
      if (!v.is_zero()) m.data_[i].push_back({j, v});
    }
  }
  return m;
}

Matrix Matrix::scalar(const Rational& value) {
  Matrix m(1, 1);
  m.set(0, 0, value);
  return m;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

std::string Matrix::shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

Rational Matrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
  const auto& r = data_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != r.end() && it->col == col) return it->value;
  return Rational(0);
}

void Matrix::set(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
  auto& r = data_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  const bool present = it != r.end() && it->col == col;
  if (value.is_zero()) {
    if (present) r.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    r.insert(it, {col, value});
  }
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : data_[i]) t.data_[j].push_back({i, v});
  }
  return t;
}

Matrix Matrix::scaled(const Rational& factor) const {
  if (factor.is_zero()) return Matrix(rows_, cols_);
  Matrix m = *this;
  for (auto& r : m.data_) {
    for (auto& e : r) e.value *= factor;
  }
  return m;
}

Rational Matrix::as_scalar() const {
  if (rows_ != 1 || cols_ != 1) throw std::invalid_argument("as_scalar on " + shape() + " matrix");
  return at(0, 0);
}

std::size_t Matrix::hash() const {
  std::size_t h = rows_ * 0x100000001b3ULL ^ cols_;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : data_[i]) {
      h ^= (i * 0x9e3779b97f4a7c15ULL + j) + (h << 6) + (h >> 2);
      h ^= v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return h;
}

Matrix mat_mul_serial(const Matrix& a, const Matrix& b) {
  check_same_inner(a, b);
  Matrix out(a.rows(), b.cols());
  auto& rows = MatrixBuilder::rows(out);
  RowAccumulator acc(b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) rows[r] = product_row(a, b, r, acc);
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  check_same_inner(a, b);
  // Small products do not amortize the thread team.
  if (a.nnz() < 512) return mat_mul_serial(a, b);
  Matrix out(a.rows(), b.cols());
  auto& rows = MatrixBuilder::rows(out);
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel
  {
    RowAccumulator acc(b.cols());
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t r = 0; r < n; ++r) {
      rows[static_cast<std::size_t>(r)] = product_row(a, b, static_cast<std::size_t>(r), acc);
    }
  }
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("add: shape mismatch " + a.shape() + " + " + b.shape());
  }
  Matrix out = a;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (const auto& [j, v] : b.row(i)) out.set(i, j, out.at(i, j) + v);
  }
  return out;
}

Matrix power(const Matrix& m, unsigned long exponent) {
  if (m.rows() != m.cols()) throw std::invalid_argument("power of non-square " + m.shape());
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (exponent > 0) {
    if (exponent & 1UL) result = mat_mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mat_mul(base, base);
  }
  return result;
}

namespace {

std::vector<Matrix::Entry> kron_row(const Matrix& a, const Matrix& b, std::size_t r) {
  const std::size_t ra = r / b.rows();
  const std::size_t rb = r % b.rows();
  std::vector<Matrix::Entry> out;
  out.reserve(a.row(ra).size() * b.row(rb).size());
  for (const auto& [ca, va] : a.row(ra)) {
    for (const auto& [cb, vb] : b.row(rb)) out.push_back({ca * b.cols() + cb, va * vb});
  }
  return out;
}

}  // namespace

Matrix kron_serial(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  auto& rows = MatrixBuilder::rows(out);
  for (std::size_t r = 0; r < out.rows(); ++r) rows[r] = kron_row(a, b, r);
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.nnz() * b.nnz() < 4096) return kron_serial(a, b);
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  auto& rows = MatrixBuilder::rows(out);
  const auto n = static_cast<std::ptrdiff_t>(out.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    rows[static_cast<std::size_t>(r)] = kron_row(a, b, static_cast<std::size_t>(r));
  }
  return out;
}

Matrix perm_matrix(std::span<const std::size_t> p, std::span<const std::size_t> dims) {
  const std::size_t n = p.size();
  if (dims.size() != n) throw std::invalid_argument("perm_matrix: permutation/dims length mismatch");
  std::vector<std::size_t> inverse_p(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    if (p[t] >= n || inverse_p[p[t]] != n) {
      throw std::invalid_argument("perm_matrix: not a bijection of {0.." + std::to_string(n) + "-1}");
    }
    inverse_p[p[t]] = t;
  }
  std::vector<std::size_t> out_dims(n);
  for (std::size_t t = 0; t < n; ++t) out_dims[p[t]] = dims[t];
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());

  Matrix m(total, total);
  auto& rows = MatrixBuilder::rows(m);
  std::vector<std::size_t> digits(n, 0);  // input multi-index, last factor fastest
  for (std::size_t in = 0; in < total; ++in) {
    std::size_t out = 0;
    for (std::size_t s = 0; s < n; ++s) out = out * out_dims[s] + digits[inverse_p[s]];
    rows[out].push_back({in, Rational(1)});
    for (std::size_t t = n; t-- > 0;) {
      if (++digits[t] < dims[t]) break;
      digits[t] = 0;
    }
  }
  return m;
}

Matrix perm_matrix(std::span<const std::size_t> p, std::size_t block_dim) {
  const std::vector<std::size_t> dims(p.size(), block_dim);
  return perm_matrix(p, dims);
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square " + m.shape());
  std::vector<std::vector<mpq_class>> work(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, v] : m.row(i)) work[i][j] = v.value();
    work[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(work[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: singular matrix");
    std::swap(work[pivot], work[col]);
    const mpq_class lead = work[col][col];
    for (auto& x : work[col]) x /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(work[r][col]) == 0) continue;
      const mpq_class f = work[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) work[r][c] -= f * work[col][c];
    }
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(work[i][n + j]) != 0) out.set(i, j, Rational(work[i][n + j]));
    }
  }
  return out;
}

nlohmann::json to_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [j, v] : m.row(i)) entries.push_back({i, j, v.to_string()});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  Matrix m(rows, cols);
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("matrix entry must be [r,c,\"p/q\"]");
    const auto r = e[0].get<std::size_t>();
    const auto c = e[1].get<std::size_t>();
    const Rational v = e[2].is_string() ? Rational::parse(e[2].get<std::string>())
                                        : Rational(e[2].get<long>());
    if (r >= rows || c >= cols) throw std::invalid_argument("matrix entry index out of bounds");
    if (v.is_zero()) throw std::invalid_argument("matrix JSON must not store zero entries");
    m.set(r, c, v);
  }
  return m;
}

}  // namespace cobord::exact
