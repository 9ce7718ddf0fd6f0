#include "tracelab/exactla/matrix.hpp"

#include <ostream>
#include <sstream>

#include "tracelab/error.hpp"
#include "tracelab/exactla/kernels.hpp"

namespace tracelab {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (a != b) throw Error(ErrorKind::FieldMismatch, a.name() + " vs " + b.name());
}

void require_shape(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::DimensionMismatch, what);
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Prime-field matrices are reduced through contiguous residue rows so the
// inner loops can run on the dispatched kernels.
std::vector<std::uint32_t> to_residues(const Matrix& m) {
  std::vector<std::uint32_t> out(m.rows() * m.cols());
  auto src = m.entries();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(src[i].residue());
  return out;
}

Matrix from_residues(const Field& f, std::size_t rows, std::size_t cols,
                     const std::vector<std::uint32_t>& r) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar::from_residue(f, r[i * cols + j]);
  return m;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Rref rref_modp(const Matrix& m) {
  const std::uint32_t p = m.field().characteristic();
  const auto& k = simd::kernels_for(p);
  const std::size_t rows = m.rows(), cols = m.cols();
  auto a = to_residues(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    std::uint32_t* prow = &a[r * cols];
    k.scale(prow + c, inv_mod(prow[c], p), p, cols - c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint32_t v = a[i * cols + c];
      if (v != 0) k.axpy(&a[i * cols + c], prow + c, p - v, p, cols - c);
    }
    pivots.push_back(c);
    ++r;
  }
  return {from_residues(m.field(), rows, cols, a), std::move(pivots)};
}

Rref rref_rational(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpq_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).rational();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv * cols + c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    mpq_class inv = 1 / a[r * cols + c];
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i * cols + c]) == 0) continue;
      mpq_class factor = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] -= factor * a[r * cols + j];
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(m.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = Scalar(m.field(), a[i * cols + j]);
  return {std::move(out), std::move(pivots)};
}

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t nr = rows.size(), nc = nr ? rows.begin()->size() : 0;
  Matrix m(f, nr, nc);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require_shape(row.size() == nc, "ragged initializer");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Scalar(f, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t nr = rows.size(), nc = nr ? rows.front().size() : 0;
  Matrix m(f, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    require_shape(rows[i].size() == nc, "ragged rows");
    for (std::size_t j = 0; j < nc; ++j) {
      require_same_field(f, rows[i][j].field());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries) {
  if (entries.empty()) return {};
  Matrix m(entries.front().field(), entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    require_same_field(m.field_, entries[i].field());
    m.data_[i] = entries[i];
  }
  return m;
}

Matrix Matrix::column(const Field& f, std::initializer_list<long> entries) {
  Matrix m(f, entries.size(), 1);
  std::size_t i = 0;
  for (long v : entries) m.data_[i++] = Scalar(f, v);
  return m;
}

Matrix Matrix::unit(const Field& f, std::size_t n, std::size_t i) {
  Matrix m(f, n, 1);
  m.data_[i] = Scalar::one(f);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::col(std::size_t j) const { return block(0, j, rows_, 1); }
Matrix Matrix::row(std::size_t i) const { return block(i, 0, 1, cols_); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require_shape(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_same_field(field_, b.field_);
  require_shape(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Scalar Matrix::trace() const {
  require_shape(rows_ == cols_, "trace of non-square " + shape(*this));
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::reshaped(std::size_t rows, std::size_t cols) const {
  require_shape(rows * cols == rows_ * cols_, "reshape " + shape(*this));
  Matrix m = *this;
  m.rows_ = rows;
  m.cols_ = cols;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_field(field_, o.field_);
  require_shape(rows_ == o.rows_ && cols_ == o.cols_, shape(*this) + " + " + shape(o));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_field(field_, o.field_);
  require_shape(rows_ == o.rows_ && cols_ == o.cols_, shape(*this) + " - " + shape(o));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  require_same_field(field_, s.field());
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  require_shape(a.cols_ == b.rows_, shape(a) + " * " + shape(b));
  const std::size_t n = a.rows_, inner = a.cols_, m = b.cols_;
  if (!a.field_.is_rational()) {
    const std::uint32_t p = a.field_.characteristic();
    const auto& k = simd::kernels_for(p);
    auto ra = to_residues(a), rb = to_residues(b);
    std::vector<std::uint32_t> rc(n * m, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < inner; ++l)
        if (std::uint32_t c = ra[i * inner + l]; c != 0) k.axpy(&rc[i * m], &rb[l * m], c, p, m);
    return from_residues(a.field_, n, m, rc);
  }
  Matrix c(a.field_, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < inner; ++l) {
      const Scalar& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) c(i, j) += x * b(l, j);
    }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.str(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s)
          k(i * b.rows() + r, j * b.cols() + s) = x * b(r, s);
    }
  return k;
}

Matrix hstack(const std::vector<Matrix>& blocks, const Field& f, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    require_shape(b.rows() == rows || b.cols() == 0, "hstack row mismatch");
    cols += b.cols();
  }
  Matrix out(f, rows, cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    if (b.cols() == 0) continue;
    out.set_block(0, c, b);
    c += b.cols();
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& blocks, const Field& f, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    require_shape(b.cols() == cols || b.rows() == 0, "vstack column mismatch");
    rows += b.rows();
  }
  Matrix out(f, rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks) {
    if (b.rows() == 0) continue;
    out.set_block(r, 0, b);
    r += b.rows();
  }
  return out;
}

Rref rref(const Matrix& m) {
  return m.field().is_rational() ? rref_rational(m) : rref_modp(m);
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  const Field& f = m.field();
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(f, m.cols(), free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t fc = free_cols[t];
    k(fc, t) = Scalar::one(f);
    for (std::size_t row = 0; row < r.pivots.size(); ++row) k(r.pivots[row], t) = -r.reduced(row, fc);
  }
  return k;
}

std::optional<Solution> solve(const Matrix& m, const Matrix& b) {
  require_same_field(m.field(), b.field());
  require_shape(b.rows() == m.rows() && b.cols() == 1,
                "solve: M is " + shape(m) + ", b is " + shape(b));
  const std::size_t n = m.cols();
  Matrix aug = hstack({m, b}, m.field(), m.rows());
  Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;
  Matrix x(m.field(), n, 1);
  for (std::size_t row = 0; row < r.pivots.size(); ++row) x(r.pivots[row], 0) = r.reduced(row, n);
  return Solution{std::move(x), kernel(m)};
}

std::optional<Matrix> inverse(const Matrix& m) {
  require_shape(m.rows() == m.cols(), "inverse of non-square " + shape(m));
  const std::size_t n = m.rows();
  Rref r = rref(hstack({m, Matrix::identity(m.field(), n)}, m.field(), n));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  return r.reduced.block(0, n, n, n);
}

Matrix column_basis(const Matrix& m) {
  Rref r = rref(m);
  Matrix out(m.field(), m.rows(), r.pivots.size());
  for (std::size_t t = 0; t < r.pivots.size(); ++t) out.set_block(0, t, m.col(r.pivots[t]));
  return out;
}

Matrix coordinates(const Matrix& basis, const Matrix& v) {
  require_shape(basis.rows() == v.rows(), "coordinates: " + shape(basis) + " vs " + shape(v));
  const std::size_t k = basis.cols();
  Rref r = rref(hstack({basis, v}, basis.field(), basis.rows()));
  if (r.pivots.size() > k && r.pivots[k] >= k)
    throw Error(ErrorKind::Internal, "coordinates: vector outside the span of the basis");
  if (r.pivots.size() < k) throw Error(ErrorKind::Internal, "coordinates: basis is dependent");
  return r.reduced.block(0, k, k, v.cols());
}

Quotient quotient(const Matrix& span, std::size_t n, const Field& f) {
  Quotient q;
  std::vector<std::size_t> pivots;
  Matrix reduced;
  if (span.cols() > 0) {
    require_shape(span.rows() == n, "quotient: span has wrong ambient dimension");
    Rref r = rref(span.transpose());
    pivots = r.pivots;
    reduced = std::move(r.reduced);
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) rest.push_back(c);
  q.projection = Matrix(f, rest.size(), n);
  q.lift = Matrix(f, n, rest.size());
  for (std::size_t k = 0; k < rest.size(); ++k) {
    q.projection(k, rest[k]) = Scalar::one(f);
    q.lift(rest[k], k) = Scalar::one(f);
    for (std::size_t row = 0; row < pivots.size(); ++row)
      q.projection(k, pivots[row]) = -reduced(row, rest[k]);
  }
  q.subspace = Matrix(f, n, pivots.size());
  for (std::size_t row = 0; row < pivots.size(); ++row)
    for (std::size_t c = 0; c < n; ++c) q.subspace(c, row) = reduced(row, c);
  return q;
}

}  // namespace tracelab
