#include "tracelab/nakayama.hpp"

#include "tracelab/error.hpp"

namespace tracelab {

namespace {

Matrix hom_matrix(const std::vector<ModuleMap>& homs, const Field& f, std::size_t len) {
  std::vector<Matrix> cols;
  for (const auto& h : homs) cols.push_back(h.matrix.vec());
  return hstack(cols, f, len);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ShapeMismatch, what);
}

bool same(const ModulePtr& a, const ModulePtr& b) { return a == b || same_presentation(*a, *b); }

}  // namespace

NakayamaImage nakayama_object(const ModulePtr& x) {
  const AlgebraPtr& a = x->algebra();
  const Field& f = a->field();
  const std::size_t n = a->dim(), d = x->dim();
  const Matrix id_d = Matrix::identity(f, d), id_n = Matrix::identity(f, n);

  // Balancing relations for the generators suffice: the rest follow by
  // induction on word length.
  std::vector<Matrix> rels;
  for (auto g : a->generators())
    rels.push_back(kron(a->left_mult(g).transpose(), id_d) - kron(id_n, x->action(g)));
  Matrix span = rels.empty() ? Matrix(f, n * d, 0) : hstack(rels, f, n * d);
  Quotient q = quotient(span, n * d, f);

  std::vector<Matrix> act;
  for (std::size_t i = 0; i < n; ++i)
    act.push_back(q.projection * kron(a->right_mult(i).transpose(), id_d) * q.lift);
  auto module = std::make_shared<AModule>(a, q.projection.rows(), std::move(act),
                                          "N(" + x->name() + ")");

  auto homs = hom_space(x, regular_module(a));
  const std::size_t r = homs.size();
  Matrix hmat = hom_matrix(homs, f, n * d);
  std::vector<Matrix> dual_act;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix right(f, r, r);
    if (r > 0) {
      std::vector<Matrix> images;
      for (const auto& h : homs) images.push_back((a->right_mult(i) * h.matrix).vec());
      right = coordinates(hmat, hstack(images, f, n * d));
    }
    dual_act.push_back(right.transpose());
  }
  auto homdual = std::make_shared<AModule>(a, r, std::move(dual_act),
                                           "Hom(" + x->name() + ",A)*");

  Matrix comparison = r > 0 ? hmat.transpose() * q.lift : Matrix(f, 0, module->dim());
  NakayamaImage out{x, module, std::move(q.projection), std::move(q.lift), homdual,
                    std::move(homs), ModuleMap{module, homdual, std::move(comparison)}};
  return out;
}

ModuleMap nakayama_map(const NakayamaImage& nx, const NakayamaImage& ny, const ModuleMap& g) {
  require(same(g.source, nx.source) && same(g.target, ny.source),
          "nakayama_map: images do not match the map");
  const std::size_t n = g.source->algebra()->dim();
  Matrix m = ny.projection * kron(Matrix::identity(g.source->field(), n), g.matrix) * nx.lift;
  return {nx.module, ny.module, std::move(m)};
}

ModuleMap nakayama_map(const ModuleMap& g) {
  return nakayama_map(nakayama_object(g.source), nakayama_object(g.target), g);
}

TwistedProjective twisted_projective(const ProjectiveModule& p) {
  NakayamaImage image = nakayama_object(p.module);
  Matrix eval = p.embedding.vec().transpose() * image.lift;
  return {p, std::move(image), std::move(eval)};
}

Scalar trace_pairing(const TwistedProjective& p, const ModuleMap& f, const ModuleMap& g) {
  require(same(f.source, p.proj.module), "pairing: f must start at P");
  require(same(g.target, p.image.module), "pairing: g must end at N(P)");
  require(same(f.target, g.source), "pairing: f and g must meet at X");
  return (p.evaluation * g.matrix * f.matrix * p.proj.generator)(0, 0);
}

Scalar trace_pairing_homdual(const TwistedProjective& p, const ModuleMap& f, const ModuleMap& g) {
  require(same(f.source, p.proj.module), "pairing: f must start at P");
  require(same(g.target, p.image.module), "pairing: g must end at N(P)");
  require(same(f.target, g.source), "pairing: f and g must meet at X");
  const Field& fld = f.source->field();
  const std::size_t len = p.proj.embedding.rows() * p.proj.embedding.cols();
  Matrix hmat = hom_matrix(p.image.hom_basis, fld, len);
  Matrix inclusion = coordinates(hmat, p.proj.embedding.vec());
  return (inclusion.transpose() * p.image.comparison_iso.matrix * g.matrix * f.matrix *
          p.proj.generator)(0, 0);
}

Scalar twisted_trace(const TwistedProjective& p, const ModuleMap& h) {
  return trace_pairing(p, identity_map(p.proj.module), h);
}

ModuleMap untwisting(const Matrix& lambda, const NakayamaImage& nx) {
  const std::size_t d = nx.source->dim();
  Matrix m = nx.projection * kron(lambda, Matrix::identity(lambda.field(), d));
  return {nx.source, nx.module, std::move(m)};
}

VerificationReport verify_calabi_yau(const TwistedProjective& p, const ModulePtr& x) {
  VerificationReport report;
  const std::string subject = "P=" + p.proj.module->name() + " X=" + x->name();
  const Field& f = x->field();
  auto fs = hom_space(p.proj.module, x);
  auto gs = hom_space(x, p.image.module);

  Matrix gram(f, fs.size(), gs.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < gs.size(); ++j) gram(i, j) = trace_pairing(p, fs[i], gs[j]);
  const bool full = fs.size() == gs.size() && rank(gram) == fs.size();
  report.add("calabi_yau", "gram_full_rank", subject, full,
             "dim C(P,X)=" + std::to_string(fs.size()) + " dim C(X,NP)=" +
                 std::to_string(gs.size()) + " rank=" + std::to_string(rank(gram)));

  bool second = true, homdual = true;
  for (const auto& fi : fs)
    for (const auto& gj : gs) {
      Scalar v = trace_pairing(p, fi, gj);
      if (!(twisted_trace(p, compose(gj, fi)) == v)) second = false;
      if (!(trace_pairing_homdual(p, fi, gj) == v)) homdual = false;
    }
  report.add("calabi_yau", "second_pairing_agrees", subject, second);
  report.add("calabi_yau", "homdual_route_agrees", subject, homdual);
  return report;
}

VerificationReport verify_cyclicity(const TwistedProjective& p, const TwistedProjective& q,
                                    std::size_t samples, std::uint64_t seed) {
  VerificationReport report;
  const std::string subject = "P=" + p.proj.module->name() + " Q=" + q.proj.module->name();
  auto fs = hom_space(p.proj.module, q.image.module);
  auto gs = hom_space(q.proj.module, p.proj.module);
  Rng rng(seed);
  std::size_t failures = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    ModuleMap f = random_map(fs, p.proj.module, q.image.module, rng);
    ModuleMap g = random_map(gs, q.proj.module, p.proj.module, rng);
    Scalar lhs = twisted_trace(q, compose(f, g));
    Scalar rhs = twisted_trace(p, compose(nakayama_map(q.image, p.image, g), f));
    if (!(lhs == rhs)) ++failures;
  }
  report.add("calabi_yau", "cyclicity", subject, failures == 0,
             std::to_string(samples) + " samples, " + std::to_string(failures) + " failures");
  return report;
}

}  // namespace tracelab
