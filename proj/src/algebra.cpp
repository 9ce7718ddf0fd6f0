#include "tracelab/algebra.hpp"

#include "tracelab/error.hpp"
#include "tracelab/rep.hpp"

namespace tracelab {

namespace {

// Span of all words in the generators applied to the unit.
Matrix generated_span(const Algebra& a, const std::vector<std::size_t>& gens) {
  Matrix span = a.unit();
  for (;;) {
    std::vector<Matrix> blocks{span};
    for (auto g : gens) blocks.push_back(a.left_mult(g) * span);
    Matrix grown = column_basis(hstack(blocks, a.field(), a.dim()));
    if (grown.cols() == span.cols()) return span;
    span = std::move(grown);
  }
}

bool in_span(const Matrix& span, const Matrix& v) {
  if (span.cols() == 0) return v.is_zero();
  return rank(hstack({span, v}, v.field(), v.rows())) == rank(span);
}

}  // namespace

Algebra::Algebra(std::string name, const Field& field, std::vector<std::string> labels,
                 std::vector<Scalar> structure, Matrix unit, std::vector<Matrix> idempotents,
                 bool idempotents_complete)
    : name_(std::move(name)),
      field_(field),
      labels_(std::move(labels)),
      c_(std::move(structure)),
      unit_(std::move(unit)),
      idempotents_(std::move(idempotents)),
      complete_(idempotents_complete) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "algebra of dimension 0");
  if (c_.size() != n * n * n)
    throw Error(ErrorKind::DimensionMismatch,
                "structure constants: expected " + std::to_string(n * n * n) + " entries");
  if (unit_.rows() != n || unit_.cols() != 1)
    throw Error(ErrorKind::DimensionMismatch, "unit vector has wrong shape");
  if (unit_.field() != field_) throw Error(ErrorKind::FieldMismatch, "unit vector");
  for (const auto& s : c_)
    if (s.field() != field_) throw Error(ErrorKind::FieldMismatch, "structure constant");
  for (const auto& e : idempotents_)
    if (e.rows() != n || e.cols() != 1)
      throw Error(ErrorKind::DimensionMismatch, "idempotent vector has wrong shape");

  left_.assign(n, Matrix(field_, n, n));
  right_.assign(n, Matrix(field_, n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        left_[i](k, j) = this->structure(i, j, k);
        right_[i](k, j) = this->structure(j, i, k);
      }

  for (std::size_t i = 0; i < n; ++i) {
    Matrix span = generated_span(*this, generators_);
    if (span.cols() == n) break;
    if (!in_span(span, basis(i))) generators_.push_back(i);
  }
}

Matrix Algebra::left_mult(const Matrix& a) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) m += a[i] * left_[i];
  return m;
}

Matrix Algebra::right_mult(const Matrix& a) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) m += a[i] * right_[i];
  return m;
}

Matrix Algebra::multiply(const Matrix& a, const Matrix& b) const { return left_mult(a) * b; }

Matrix Algebra::multiplication_map() const {
  const std::size_t n = dim();
  Matrix m(field_, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, i * n + j) = structure(i, j, k);
  return m;
}

ValidationReport validate_algebra(const Algebra& a) {
  ValidationReport report;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix bij = a.multiply(a.basis(i), a.basis(j));
      for (std::size_t k = 0; k < n; ++k) {
        Matrix lhs = a.right_mult(k) * bij;
        Matrix rhs = a.left_mult(i) * a.multiply(a.basis(j), a.basis(k));
        if (!(lhs == rhs))
          report.add("associativity", {i, j, k},
                     "(" + a.labels()[i] + "*" + a.labels()[j] + ")*" + a.labels()[k] + " != " +
                         a.labels()[i] + "*(" + a.labels()[j] + "*" + a.labels()[k] + ")");
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a.multiply(a.unit(), a.basis(i)) == a.basis(i)))
      report.add("left_unit", {i}, "1*" + a.labels()[i] + " != " + a.labels()[i]);
    if (!(a.multiply(a.basis(i), a.unit()) == a.basis(i)))
      report.add("right_unit", {i}, a.labels()[i] + "*1 != " + a.labels()[i]);
  }
  const auto& es = a.idempotents();
  for (std::size_t r = 0; r < es.size(); ++r) {
    if (!(a.multiply(es[r], es[r]) == es[r])) report.add("idempotent", {r}, "e^2 != e");
    for (std::size_t s = 0; s < es.size(); ++s)
      if (r != s && !a.multiply(es[r], es[s]).is_zero())
        report.add("orthogonal", {r, s}, "e_r e_s != 0");
  }
  if (a.idempotents_complete()) {
    Matrix sum = a.zero();
    for (const auto& e : es) sum += e;
    if (!(sum == a.unit())) report.add("complete", {}, "idempotents do not sum to 1");
  }
  return report;
}

DualBimodule dual_bimodule(const Algebra& a) {
  DualBimodule d;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    d.left.push_back(a.right_mult(i).transpose());
    d.right.push_back(a.left_mult(i).transpose());
  }
  return d;
}

Matrix commutator_subspace(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      cols.push_back(a.multiply(a.basis(i), a.basis(j)) - a.multiply(a.basis(j), a.basis(i)));
  if (cols.empty()) return Matrix(a.field(), n, 0);
  return column_basis(hstack(cols, a.field(), n));
}

std::vector<std::vector<std::size_t>> cartan_matrix(const AlgebraPtr& a) {
  if (a->idempotents().empty() || !a->idempotents_complete())
    throw Error(ErrorKind::MissingIdempotents,
                "algebra " + a->name() + " has no complete idempotent list");
  const auto& es = a->idempotents();
  std::vector<ProjectiveModule> ps;
  for (const auto& e : es) ps.push_back(projective(a, e));
  std::vector<std::vector<std::size_t>> c(es.size(), std::vector<std::size_t>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j) {
      std::size_t corner = rank(a->left_mult(es[i]) * a->right_mult(es[j]));
      std::size_t homs = hom_space(ps[i].module, ps[j].module).size();
      if (corner != homs)
        throw Error(ErrorKind::Internal, "cartan entry (" + std::to_string(i) + "," +
                                             std::to_string(j) + "): dim e_i A e_j = " +
                                             std::to_string(corner) + " but dim Hom = " +
                                             std::to_string(homs));
      c[i][j] = corner;
    }
  return c;
}

}  // namespace tracelab
