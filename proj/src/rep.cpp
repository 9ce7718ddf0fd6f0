#include "tracelab/rep.hpp"

#include "tracelab/error.hpp"

namespace tracelab {

namespace {

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  return a->field() == b->field() && a->dim() == b->dim() &&
         a->structure_constants() == b->structure_constants() && a->unit() == b->unit();
}

bool same_module(const ModulePtr& a, const ModulePtr& b) {
  return a == b || same_presentation(*a, *b);
}

void require_same_algebra(const ModulePtr& m, const ModulePtr& n) {
  if (!same_algebra(m->algebra(), n->algebra()))
    throw Error(ErrorKind::AlgebraMismatch,
                "modules over " + m->algebra()->name() + " and " + n->algebra()->name());
}

}  // namespace

AModule::AModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action, std::string name)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)), name_(std::move(name)) {
  if (action_.size() != algebra_->dim())
    throw Error(ErrorKind::DimensionMismatch,
                "module " + name_ + ": expected " + std::to_string(algebra_->dim()) +
                    " action matrices, got " + std::to_string(action_.size()));
  for (const auto& m : action_) {
    if (m.rows() != dim_ || m.cols() != dim_)
      throw Error(ErrorKind::DimensionMismatch, "module " + name_ + ": action matrix shape");
    if (dim_ > 0 && m.field() != algebra_->field())
      throw Error(ErrorKind::FieldMismatch, "module " + name_);
  }
}

Matrix AModule::act(const Matrix& a) const {
  Matrix m(field(), dim_, dim_);
  for (std::size_t i = 0; i < action_.size(); ++i)
    if (!a[i].is_zero()) m += a[i] * action_[i];
  return m;
}

ValidationReport validate_module(const AModule& m) {
  ValidationReport report;
  const Algebra& a = *m.algebra();
  if (!(m.act(a.unit()) == Matrix::identity(m.field(), m.dim())))
    report.add("unit", {}, "unit does not act as the identity");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(m.action(i) * m.action(j) == m.act(a.multiply(a.basis(i), a.basis(j)))))
        report.add("multiplicative", {i, j},
                   "action(" + a.labels()[i] + ")action(" + a.labels()[j] + ") mismatch");
  return report;
}

bool same_presentation(const AModule& a, const AModule& b) {
  return &a == &b || (same_algebra(a.algebra(), b.algebra()) && a.dim() == b.dim() &&
                      a.actions() == b.actions());
}

bool ModuleMap::is_intertwiner() const {
  for (std::size_t i = 0; i < source->algebra()->dim(); ++i)
    if (!(matrix * source->action(i) == target->action(i) * matrix)) return false;
  return true;
}

ModuleMap identity_map(const ModulePtr& m) {
  return {m, m, Matrix::identity(m->field(), m->dim())};
}

ModuleMap zero_map(const ModulePtr& source, const ModulePtr& target) {
  return {source, target, Matrix(source->field(), target->dim(), source->dim())};
}

ModuleMap operator+(const ModuleMap& f, const ModuleMap& g) {
  if (!same_module(f.source, g.source) || !same_module(f.target, g.target))
    throw Error(ErrorKind::ShapeMismatch, "adding maps between different modules");
  return {f.source, f.target, f.matrix + g.matrix};
}

ModuleMap operator-(const ModuleMap& f, const ModuleMap& g) {
  if (!same_module(f.source, g.source) || !same_module(f.target, g.target))
    throw Error(ErrorKind::ShapeMismatch, "subtracting maps between different modules");
  return {f.source, f.target, f.matrix - g.matrix};
}

ModuleMap operator*(const Scalar& s, const ModuleMap& f) { return {f.source, f.target, s * f.matrix}; }

bool operator==(const ModuleMap& f, const ModuleMap& g) {
  return same_module(f.source, g.source) && same_module(f.target, g.target) && f.matrix == g.matrix;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (!same_module(f.target, g.source))
    throw Error(ErrorKind::CompositionMismatch,
                "target of f (" + f.target->name() + ") is not the source of g (" +
                    g.source->name() + ")");
  return {f.source, g.target, g.matrix * f.matrix};
}

std::vector<ModuleMap> hom_space(const ModulePtr& m, const ModulePtr& n) {
  require_same_algebra(m, n);
  const Field& f = m->field();
  const std::size_t dm = m->dim(), dn = n->dim(), unknowns = dm * dn;
  std::vector<ModuleMap> out;
  if (unknowns == 0) return out;

  // vec(T) is row-major, so vec(T X) = (I (x) X^T) vec T and vec(X T) = (X (x) I) vec T.
  Matrix basis;
  bool first = true;
  for (auto g : m->algebra()->generators()) {
    const Matrix& rm = m->action(g);
    const Matrix& rn = n->action(g);
    if (first) {
      Matrix eq = kron(Matrix::identity(f, dn), rm.transpose()) - kron(rn, Matrix::identity(f, dm));
      basis = kernel(eq);
      first = false;
    } else {
      Matrix residual(f, unknowns, basis.cols());
      for (std::size_t c = 0; c < basis.cols(); ++c) {
        Matrix t = basis.col(c).reshaped(dn, dm);
        residual.set_block(0, c, (t * rm - rn * t).vec());
      }
      basis = basis * kernel(residual);
    }
    if (basis.cols() == 0) return out;
  }
  if (first) basis = Matrix::identity(f, unknowns);
  for (std::size_t c = 0; c < basis.cols(); ++c)
    out.push_back({m, n, basis.col(c).reshaped(dn, dm)});
  return out;
}

ModuleMap random_map(const std::vector<ModuleMap>& basis, const ModulePtr& source,
                     const ModulePtr& target, Rng& rng) {
  ModuleMap out = zero_map(source, target);
  for (const auto& b : basis) out.matrix += rng.scalar(source->field()) * b.matrix;
  return out;
}

ModulePtr regular_module(const AlgebraPtr& a) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->left_mult(i));
  return std::make_shared<AModule>(a, a->dim(), std::move(act), "A");
}

ModulePtr free_module(const AlgebraPtr& a, std::size_t n) {
  std::vector<Matrix> act;
  Matrix id = Matrix::identity(a->field(), n);
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(kron(id, a->left_mult(i)));
  return std::make_shared<AModule>(a, n * a->dim(), std::move(act), "A^" + std::to_string(n));
}

ModulePtr direct_sum(const ModulePtr& m, const ModulePtr& n) {
  require_same_algebra(m, n);
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < m->algebra()->dim(); ++i) {
    Matrix b(m->field(), m->dim() + n->dim(), m->dim() + n->dim());
    b.set_block(0, 0, m->action(i));
    b.set_block(m->dim(), m->dim(), n->action(i));
    act.push_back(std::move(b));
  }
  return std::make_shared<AModule>(m->algebra(), m->dim() + n->dim(), std::move(act),
                                   m->name() + "+" + n->name());
}

std::pair<ModulePtr, ModuleMap> change_basis(const ModulePtr& m, const Matrix& basis) {
  auto inv = inverse(basis);
  if (!inv) throw Error(ErrorKind::ShapeMismatch, "change_basis: matrix is singular");
  std::vector<Matrix> act;
  for (const auto& a : m->actions()) act.push_back(*inv * a * basis);
  auto out = std::make_shared<AModule>(m->algebra(), m->dim(), std::move(act), m->name() + "'");
  return {out, ModuleMap{out, m, basis}};
}

std::pair<ModulePtr, ModuleMap> cyclic_submodule(const ModulePtr& m, const Matrix& v) {
  std::vector<Matrix> images;
  for (const auto& a : m->actions()) images.push_back(a * v);
  Matrix w = column_basis(hstack(images, m->field(), m->dim()));
  std::vector<Matrix> act;
  for (const auto& a : m->actions()) act.push_back(coordinates(w, a * w));
  auto sub = std::make_shared<AModule>(m->algebra(), w.cols(), std::move(act), "A." + m->name());
  return {sub, ModuleMap{sub, m, w}};
}

bool is_absolutely_simple(const AModule& m) {
  const std::size_t d = m.dim();
  if (d == 0) return false;
  std::vector<Matrix> cols;
  for (const auto& a : m.actions()) cols.push_back(a.vec());
  return rank(hstack(cols, m.field(), d * d)) == d * d;
}

std::optional<ModuleMap> find_isomorphism(const ModulePtr& m, const ModulePtr& n,
                                          std::uint64_t seed, int attempts) {
  if (m->dim() != n->dim()) return std::nullopt;
  if (m->dim() == 0) return zero_map(m, n);
  auto homs = hom_space(m, n);
  if (homs.empty()) return std::nullopt;
  for (const auto& h : homs)
    if (inverse(h.matrix)) return h;
  Rng rng(seed);
  for (int t = 0; t < attempts; ++t) {
    ModuleMap h = random_map(homs, m, n, rng);
    if (inverse(h.matrix)) return h;
  }
  return std::nullopt;
}

ProjectiveModule projective(const AlgebraPtr& a, const Matrix& e) {
  if (!(a->multiply(e, e) == e))
    throw Error(ErrorKind::NotIdempotent, "e^2 != e in " + a->name());
  Matrix w = column_basis(a->right_mult(e));
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(coordinates(w, a->left_mult(i) * w));
  auto module = std::make_shared<AModule>(a, w.cols(), std::move(act), "Ae");
  Matrix gen = w.cols() ? coordinates(w, e) : Matrix(a->field(), 0, 1);
  return {module, e, w, gen};
}

ProjectivePresentation split_projective(const ModulePtr& m) {
  return split_projective(m, Matrix::identity(m->field(), m->dim()));
}

ProjectivePresentation split_projective(const ModulePtr& m, const Matrix& generators) {
  const AlgebraPtr& a = m->algebra();
  const Field& f = m->field();
  const std::size_t dm = m->dim(), na = a->dim(), n = generators.cols();
  if (generators.rows() != dm)
    throw Error(ErrorKind::DimensionMismatch, "split_projective: generator shape");

  // pi_i : A -> M, b_k -> b_k . g_i
  std::vector<Matrix> pis;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix pi_i(f, dm, na);
    for (std::size_t k = 0; k < na; ++k) pi_i.set_block(0, k, m->action(k) * generators.col(i));
    pis.push_back(std::move(pi_i));
  }
  Matrix pi = hstack(pis, f, dm);
  if (rank(pi) != dm)
    throw Error(ErrorKind::NotProjective, "given elements do not generate " + m->name());

  auto free = free_module(a, n);
  ModuleMap pi_map{free, m, pi};
  if (dm == 0) return {m, n, free, pi_map, zero_map(m, free)};

  // iota = (iota_1, ..., iota_n) with iota_i in Hom(M, A); solve sum_i pi_i iota_i = id.
  auto homs = hom_space(m, regular_module(a));
  std::vector<Matrix> cols;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& h : homs) cols.push_back((pis[i] * h.matrix).vec());
  auto sol = cols.empty() ? std::nullopt
                          : solve(hstack(cols, f, dm * dm), Matrix::identity(f, dm).vec());
  if (!sol)
    throw Error(ErrorKind::NotProjective, m->name() + " is not a summand of a free module");
  Matrix iota(f, n * na, dm);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix block(f, na, dm);
    for (std::size_t l = 0; l < homs.size(); ++l)
      block += sol->particular[i * homs.size() + l] * homs[l].matrix;
    iota.set_block(i * na, 0, block);
  }
  return {m, n, free, pi_map, ModuleMap{m, free, iota}};
}

Matrix diagonal_sum(const ProjectivePresentation& p, const ModuleMap& f) {
  if (!same_module(f.source, p.module) || !same_module(f.target, p.module))
    throw Error(ErrorKind::ShapeMismatch, "endomorphism does not act on the presented module");
  const AlgebraPtr& a = p.module->algebra();
  const std::size_t na = a->dim();
  Matrix e = p.iota.matrix * f.matrix * p.pi.matrix;
  Matrix sum = a->zero();
  for (std::size_t i = 0; i < p.n; ++i)
    sum += e.block(i * na, i * na, na, na) * a->unit();
  return sum;
}

}  // namespace tracelab
