#include "tracelab/tensor.hpp"

#include "tracelab/error.hpp"

namespace tracelab {

namespace {

// x -> y x in A (x) A, for y given in tensor coordinates.
Matrix tensor_left_mult(const Algebra& a, const Matrix& y) {
  const std::size_t n = a.dim();
  Matrix m(a.field(), n * n, n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (!y[p * n + q].is_zero()) m += y[p * n + q] * kron(a.left_mult(p), a.left_mult(q));
  return m;
}

void require_hopf_module(const HopfData& h, const ModulePtr& m) {
  const Algebra& a = *h.algebra;
  const Algebra& b = *m->algebra();
  if (&a == &b) return;
  if (a.field() == b.field() && a.dim() == b.dim() &&
      a.structure_constants() == b.structure_constants())
    return;
  throw Error(ErrorKind::HopfMismatch,
              "module " + m->name() + " is not over the Hopf algebra " + a.name());
}

Matrix identity_vec(const Field& f, std::size_t d) { return Matrix::identity(f, d).vec(); }

}  // namespace

Matrix coproduct_of(const HopfData& h, const Matrix& a) { return h.coproduct * a; }

ValidationReport validate_hopf(const HopfData& h) {
  ValidationReport report;
  const Algebra& a = *h.algebra;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  if (h.coproduct.rows() != n * n || h.coproduct.cols() != n || h.counit.rows() != 1 ||
      h.counit.cols() != n || h.antipode.rows() != n || h.antipode.cols() != n) {
    report.add("shape", {}, "coproduct, counit or antipode has the wrong shape");
    return report;
  }
  const Matrix id = Matrix::identity(f, n);
  const Matrix& delta = h.coproduct;
  const Matrix mult = a.multiplication_map();
  const Matrix coassoc_l = kron(delta, id) * delta;
  const Matrix coassoc_r = kron(id, delta) * delta;
  const Matrix counit_l = kron(h.counit, id) * delta;
  const Matrix counit_r = kron(id, h.counit) * delta;
  const Matrix anti_l = mult * kron(h.antipode, id) * delta;
  const Matrix anti_r = mult * kron(id, h.antipode) * delta;
  const Matrix unit_eps = a.unit() * h.counit;
  const auto& lab = a.labels();

  for (std::size_t j = 0; j < n; ++j) {
    if (!(coassoc_l.col(j) == coassoc_r.col(j)))
      report.add("coassociativity", {j}, "on " + lab[j]);
    if (!(counit_l.col(j) == id.col(j))) report.add("left_counit", {j}, "on " + lab[j]);
    if (!(counit_r.col(j) == id.col(j))) report.add("right_counit", {j}, "on " + lab[j]);
    if (!(anti_l.col(j) == unit_eps.col(j)))
      report.add("antipode_left", {j}, "m(S (x) id)Delta(" + lab[j] + ") != eps 1");
    if (!(anti_r.col(j) == unit_eps.col(j)))
      report.add("antipode_right", {j}, "m(id (x) S)Delta(" + lab[j] + ") != eps 1");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix li = tensor_left_mult(a, delta.col(i));
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix bij = a.multiply(a.basis(i), a.basis(j));
      if (!(delta * bij == li * delta.col(j)))
        report.add("coproduct_multiplicative", {i, j}, lab[i] + "*" + lab[j]);
      if (!((h.counit * bij)(0, 0) == h.counit(0, i) * h.counit(0, j)))
        report.add("counit_multiplicative", {i, j}, lab[i] + "*" + lab[j]);
    }
  }
  if (!(delta * a.unit() == kron(a.unit(), a.unit()))) report.add("coproduct_unit", {});
  if (!(h.counit * a.unit())(0, 0).is_one()) report.add("counit_unit", {});
  return report;
}

ModulePtr character_module(const AlgebraPtr& a, const Matrix& chi, std::string name) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix m(a->field(), 1, 1);
    m(0, 0) = chi[i];
    act.push_back(std::move(m));
  }
  return std::make_shared<AModule>(a, 1, std::move(act), std::move(name));
}

ModulePtr trivial_module(const HopfData& h) { return character_module(h.algebra, h.counit, "k"); }

ModulePtr tensor_module(const HopfData& h, const ModulePtr& m, const ModulePtr& n) {
  require_hopf_module(h, m);
  require_hopf_module(h, n);
  const std::size_t na = h.algebra->dim();
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < na; ++i) {
    Matrix r(m->field(), m->dim() * n->dim(), m->dim() * n->dim());
    for (std::size_t p = 0; p < na; ++p)
      for (std::size_t q = 0; q < na; ++q) {
        const Scalar& c = h.coproduct(p * na + q, i);
        if (!c.is_zero()) r += c * kron(m->action(p), n->action(q));
      }
    act.push_back(std::move(r));
  }
  return std::make_shared<AModule>(h.algebra, m->dim() * n->dim(), std::move(act),
                                   m->name() + "(x)" + n->name());
}

ModuleMap tensor_map(const HopfData& h, const ModuleMap& f, const ModuleMap& g) {
  return {tensor_module(h, f.source, g.source), tensor_module(h, f.target, g.target),
          kron(f.matrix, g.matrix)};
}

DualData dual_module(const HopfData& h, const ModulePtr& m, Side side) {
  require_hopf_module(h, m);
  Matrix twist = h.antipode;
  if (side == Side::Right) {
    auto inv = inverse(h.antipode);
    if (!inv) throw Error(ErrorKind::AntipodeNotInvertible, "antipode of " + h.algebra->name());
    twist = std::move(*inv);
  }
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < h.algebra->dim(); ++i)
    act.push_back(m->act(twist.col(i)).transpose());
  auto dual = std::make_shared<AModule>(h.algebra, m->dim(), std::move(act),
                                        side == Side::Left ? m->name() + "^v" : "v" + m->name());
  const Matrix v = identity_vec(m->field(), m->dim());
  auto unit = trivial_module(h);
  if (side == Side::Left)
    return {side, m, dual, ModuleMap{tensor_module(h, dual, m), unit, v.transpose()},
            ModuleMap{unit, tensor_module(h, m, dual), v}};
  return {side, m, dual, ModuleMap{tensor_module(h, m, dual), unit, v.transpose()},
          ModuleMap{unit, tensor_module(h, dual, m), v}};
}

ValidationReport validate_duality(const HopfData& h, const DualData& d) {
  (void)h;
  ValidationReport report;
  const Field& f = d.module->field();
  const Matrix ix = Matrix::identity(f, d.module->dim());
  const Matrix& ev = d.ev.matrix;
  const Matrix& coev = d.coev.matrix;
  // Left: X -> X (x) X^v (x) X -> X and X^v -> X^v (x) X (x) X^v -> X^v.
  // Right: X -> X (x) vX (x) X -> X and vX -> vX (x) X (x) vX -> vX.
  Matrix z1, z2;
  if (d.side == Side::Left) {
    z1 = kron(ix, ev) * kron(coev, ix);
    z2 = kron(ev, ix) * kron(ix, coev);
  } else {
    z1 = kron(ev, ix) * kron(ix, coev);
    z2 = kron(ix, ev) * kron(coev, ix);
  }
  if (!(z1 == ix)) report.add("zigzag_1", {}, "on " + d.module->name());
  if (!(z2 == ix)) report.add("zigzag_2", {}, "on " + d.dual->name());
  if (!d.ev.is_intertwiner()) report.add("ev_intertwines", {});
  if (!d.coev.is_intertwiner()) report.add("coev_intertwines", {});
  return report;
}

DistinguishedObject distinguished_object(const HopfData& h) {
  const Algebra& a = *h.algebra;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  std::vector<Matrix> eqs;
  for (std::size_t i = 0; i < n; ++i)
    eqs.push_back(a.left_mult(i) - h.counit(0, i) * Matrix::identity(f, n));
  Matrix ints = kernel(vstack(eqs, f, n));
  if (ints.cols() != 1)
    throw Error(ErrorKind::IntegralNotFound, "space of left integrals has dimension " +
                                                 std::to_string(ints.cols()));
  Matrix lambda = ints.col(0);
  std::size_t p = 0;
  while (lambda[p].is_zero()) ++p;

  Matrix alpha(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix img = a.right_mult(i) * lambda;
    alpha(0, i) = img[p] / lambda[p];
    if (!(img == alpha(0, i) * lambda))
      throw Error(ErrorKind::IntegralNotFound,
                  "integral is not an eigenvector of right multiplication by " + a.labels()[i]);
  }
  Matrix alpha_s = alpha * h.antipode;
  auto d = character_module(h.algebra, alpha_s, "D");
  auto dinv = character_module(h.algebra, alpha, "D^-1");
  return {std::move(lambda), std::move(alpha), std::move(alpha_s), d, dinv};
}

PivotalStructure pivotal_structure(const HopfData& h, const Matrix& g) {
  const Algebra& a = *h.algebra;
  if (g.rows() != a.dim() || g.cols() != 1)
    throw Error(ErrorKind::NotPivotal, "pivot has the wrong shape");
  if (!(h.coproduct * g == kron(g, g)))
    throw Error(ErrorKind::NotPivotal, "pivot is not grouplike");
  if (!(h.counit * g)(0, 0).is_one()) throw Error(ErrorKind::NotPivotal, "eps(pivot) != 1");
  auto lg = inverse(a.left_mult(g));
  if (!lg) throw Error(ErrorKind::NotPivotal, "pivot is not invertible");
  Matrix ginv = *lg * a.unit();
  Matrix conj = a.left_mult(g) * a.right_mult(ginv);
  Matrix s2 = h.antipode * h.antipode;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(s2.col(i) == conj.col(i)))
      throw Error(ErrorKind::NotPivotal, "S^2(" + a.labels()[i] + ") != g " + a.labels()[i] +
                                             " g^-1");
  return {g, std::move(ginv)};
}

FrobStructure symmetric_frobenius(const HopfData& h, const Matrix& g, const Matrix& lambda) {
  PivotalStructure piv = pivotal_structure(h, g);
  DistinguishedObject dist = distinguished_object(h);
  if (!dist.unimodular(h.counit))
    throw Error(ErrorKind::NotUnimodular,
                h.algebra->name() + ": modular character " + dist.modular_character.str() +
                    " differs from the counit");
  const Algebra& a = *h.algebra;
  const std::size_t n = a.dim();
  if (lambda.rows() != n || lambda.cols() != 1)
    throw Error(ErrorKind::ShapeMismatch, "Frobenius form has the wrong shape");
  Matrix gram(a.field(), n, n);
  const Matrix lt = lambda.transpose();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = (lt * a.multiply(a.basis(i), a.basis(j)))(0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(gram(i, j) == gram(j, i)))
        throw Error(ErrorKind::NotSymmetric, "lambda(" + a.labels()[i] + a.labels()[j] +
                                                 ") != lambda(" + a.labels()[j] + a.labels()[i] +
                                                 ")");
  if (rank(gram) != n) throw Error(ErrorKind::Degenerate, "lambda(ab) is degenerate");
  return {h, std::move(piv), lambda, std::move(dist)};
}

Scalar modified_trace(const FrobStructure& fs, const ProjectivePresentation& p,
                      const ModuleMap& f) {
  return (fs.frobenius_form.transpose() * diagonal_sum(p, f))(0, 0);
}

Scalar modified_trace(const FrobStructure& fs, const ModuleMap& f) {
  return modified_trace(fs, split_projective(f.source), f);
}

ModuleMap pivotal_coevaluation(const FrobStructure& fs, const DualData& right) {
  if (right.side != Side::Right)
    throw Error(ErrorKind::ShapeMismatch, "pivotal coevaluation needs the right dual");
  const Matrix rg = right.module->act(fs.pivot.pivot);
  return {trivial_module(fs.hopf), tensor_module(fs.hopf, right.module, right.dual), rg.vec()};
}

ModuleMap partial_trace(const FrobStructure& fs, const ModulePtr& p, const ModulePtr& x,
                        const ModuleMap& f) {
  auto px = tensor_module(fs.hopf, p, x);
  if (!same_presentation(*f.source, *px) || !same_presentation(*f.target, *px))
    throw Error(ErrorKind::ShapeMismatch, "partial trace: f is not an endomorphism of P(x)X");
  DualData right = dual_module(fs.hopf, x, Side::Right);
  const Field& fld = p->field();
  const Matrix ip = Matrix::identity(fld, p->dim());
  const Matrix ix = Matrix::identity(fld, x->dim());
  const Matrix coev = pivotal_coevaluation(fs, right).matrix;
  Matrix m = kron(ip, right.ev.matrix) * kron(f.matrix, ix) * kron(ip, coev);
  return {p, p, std::move(m)};
}

VerificationReport verify_pivot_monoidal(const FrobStructure& fs, const ModulePtr& x,
                                         const ModulePtr& y) {
  VerificationReport report;
  const HopfData& h = fs.hopf;
  auto double_dual = [&](const ModulePtr& m) {
    return dual_module(h, dual_module(h, m, Side::Left).dual, Side::Left).dual;
  };
  auto omega = [&](const ModulePtr& m) {
    return ModuleMap{double_dual(m), m, m->act(fs.pivot.pivot_inverse)};
  };
  const std::string subject = "X=" + x->name() + " Y=" + y->name();
  ModuleMap ox = omega(x), oy = omega(y);
  auto xy = tensor_module(h, x, y);
  ModuleMap oxy = omega(xy);
  report.add("pivot", "omega_intertwines", subject,
             ox.is_intertwiner() && oy.is_intertwiner() && oxy.is_intertwiner());
  auto dd_tensor = tensor_module(h, double_dual(x), double_dual(y));
  report.add("pivot", "double_dual_of_tensor", subject,
             same_presentation(*oxy.source, *dd_tensor));
  report.add("pivot", "omega_monoidal", subject, oxy.matrix == kron(ox.matrix, oy.matrix));
  return report;
}

VerificationReport verify_partial_trace(const FrobStructure& fs, const ModulePtr& p,
                                        const ModulePtr& x, std::size_t samples,
                                        std::uint64_t seed) {
  VerificationReport report;
  const std::string subject = "P=" + p->name() + " X=" + x->name();
  auto px = tensor_module(fs.hopf, p, x);
  auto pres_p = split_projective(p);
  auto pres_px = split_projective(px);
  auto ends = hom_space(px, px);
  Rng rng(seed);
  std::size_t failures = 0, non_intertwining = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    ModuleMap f = random_map(ends, px, px, rng);
    ModuleMap tr = partial_trace(fs, p, x, f);
    if (!tr.is_intertwiner()) ++non_intertwining;
    if (!(modified_trace(fs, pres_p, tr) == modified_trace(fs, pres_px, f))) ++failures;
  }
  report.add("partial_trace", "intertwiner", subject, non_intertwining == 0,
             std::to_string(non_intertwining) + " of " + std::to_string(samples));
  report.add("partial_trace", "trace_property", subject, failures == 0,
             std::to_string(samples) + " samples, " + std::to_string(failures) + " failures");
  return report;
}

}  // namespace tracelab
