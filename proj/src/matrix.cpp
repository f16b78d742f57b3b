#include "gcdim/matrix.hpp"

#include <algorithm>

namespace gcdim {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(f), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw InputError("matrix entry count does not match shape");
  for (auto& e : data_) field_.normalize(e);
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::column(Field f, const Vector& v) { return from_columns(f, v.size(), {v}); }

Matrix Matrix::block_diagonal(Field f, std::span<const Matrix> blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(f, r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  Scalar x = v;
  field_.normalize(x);
  (*this)(r, c) = std::move(x);
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
  Matrix p(field_, rows_, o.cols_);
  Scalar tmp;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a == 0) continue;
      auto orow = o.row(k);
      auto prow = p.row(i);
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (orow[j] == 0) continue;
        tmp = a * orow[j];
        prow[j] += tmp;
      }
    }
  }
  if (!field_.is_rational()) {
    for (auto& e : p.data_) field_.normalize(e);
  }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum shape mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = field_.add(data_[i], o.data_[i]);
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference shape mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = field_.sub(data_[i], o.data_[i]);
  return s;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& e : m.data_) e = field_.mul(e, s);
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
  Vector out(rows_);
  Scalar tmp;
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (r[k] == 0 || v[k] == 0) continue;
      tmp = r[k] * v[k];
      out[i] += tmp;
    }
    field_.normalize(out[i]);
  }
  return out;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("submatrix out of range");
  Matrix m(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix m(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = (*this)(r, cols[c]);
  return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix m(field_, rows.size(), cols_);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(rows[r], c);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
  if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_) throw InputError("block out of range");
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) (*this)(r0 + r, c0 + c) = block(r, c);
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw InputError("hstack row mismatch");
  Matrix m(field_, rows_, cols_ + o.cols_);
  m.set_block(0, 0, *this);
  m.set_block(0, cols_, o);
  return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw InputError("vstack column mismatch");
  Matrix m(field_, rows_ + o.rows_, cols_);
  m.set_block(0, 0, *this);
  m.set_block(rows_, 0, o);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& e) { return e == 0; });
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}};
  if (m.rows() * m.cols() >= kernels::kParallelThreshold) {
    kernels::rref_parallel(res.reduced, res.pivots);
  } else {
    kernels::rref_serial(res.reduced, res.pivots);
  }
  return res;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return rref(m).pivots.size();
}

Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> cols;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    cols.push_back(std::move(v));
  }
  return Matrix::from_columns(f, m.cols(), cols);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InputError("solve: row count mismatch");
  const Field& f = a.field();
  auto [r, pivots] = rref(a.hstack(b));
  if (!pivots.empty() && pivots.back() >= a.cols()) return std::nullopt;
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = r(i, a.cols() + j);
  return x;
}

std::vector<std::size_t> independent_columns(const Matrix& m) {
  if (m.empty()) return {};
  return rref(m).pivots;
}

Matrix left_kernel_basis(const Matrix& m) { return kernel_basis(m.transpose()).transpose(); }

Vector EchelonBasis::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("vector length does not match ambient dimension");
  Vector w = v;
  Scalar tmp;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = w[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
      if (rows_[i][j] == 0) continue;
      tmp = c * rows_[i][j];
      w[j] = field_.sub(w[j], tmp);
    }
  }
  return w;
}

bool EchelonBasis::contains(const Vector& v) const {
  auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Scalar& e) { return e == 0; });
}

bool EchelonBasis::add(const Vector& v) {
  auto w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](const Scalar& e) { return e != 0; });
  if (it == w.end()) return false;
  std::size_t p = static_cast<std::size_t>(it - w.begin());
  Scalar inv = field_.inv(w[p]);
  for (std::size_t j = p; j < ambient_; ++j) w[j] = field_.mul(w[j], inv);
  // Keep rows fully reduced at each other's pivots so reduce() is one pass.
  Scalar tmp;
  for (auto& row : rows_) {
    const Scalar c = row[p];
    if (c == 0) continue;
    for (std::size_t j = p; j < ambient_; ++j) {
      if (w[j] == 0) continue;
      tmp = c * w[j];
      row[j] = field_.sub(row[j], tmp);
    }
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace gcdim
