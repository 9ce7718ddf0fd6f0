#include "tracelab/tracefield.hpp"

#include "tracelab/error.hpp"

namespace tracelab {

HH0Ptr hh0(const AlgebraPtr& a) {
  Matrix comm = commutator_subspace(*a);
  Quotient q = quotient(comm, a->dim(), a->field());
  return std::make_shared<HH0Space>(HH0Space{a, std::move(comm), std::move(q.lift),
                                             std::move(q.projection)});
}

bool operator==(const HH0Class& a, const HH0Class& b) {
  return a.space == b.space && a.coords == b.coords;
}

HH0Class hh0_class(const HH0Ptr& space, const Matrix& element) {
  return {space, space->projection * element};
}

HH0Class hs_trace(const HH0Ptr& space, const ProjectivePresentation& p, const ModuleMap& f) {
  return hh0_class(space, diagonal_sum(p, f));
}

HH0Class hs_trace(const HH0Ptr& space, const ModuleMap& f) {
  return hs_trace(space, split_projective(f.source), f);
}

Scalar trace_of_class(const FrobStructure& fs, const HH0Class& c) {
  return (fs.frobenius_form.transpose() * c.representative())(0, 0);
}

Matrix trace_gram(const FrobStructure& fs, const ModulePtr& p,
                  const std::vector<ModuleMap>& forward, const std::vector<ModuleMap>& backward) {
  Matrix g(p->field(), backward.size(), forward.size());
  if (backward.empty() || forward.empty()) return g;
  auto pres = split_projective(p);
  for (std::size_t i = 0; i < backward.size(); ++i)
    for (std::size_t j = 0; j < forward.size(); ++j)
      g(i, j) = modified_trace(fs, pres, compose(backward[i], forward[j]));
  return g;
}

DualBasisPair dual_bases(const FrobStructure& fs, const ModulePtr& p, const ModulePtr& q,
                         std::vector<ModuleMap> forward, std::vector<ModuleMap> backward) {
  if (forward.size() != backward.size())
    throw Error(ErrorKind::DegenerateGram, "dim Hom(P,Q) = " + std::to_string(forward.size()) +
                                               " but dim Hom(Q,P) = " +
                                               std::to_string(backward.size()));
  if (forward.empty()) return {p, q, {}, {}};
  Matrix g = trace_gram(fs, p, forward, backward);
  auto ginv = inverse(g);
  if (!ginv) throw Error(ErrorKind::DegenerateGram, "trace Gram matrix is singular: " + g.str());
  std::vector<ModuleMap> corrected;
  for (std::size_t j = 0; j < forward.size(); ++j) {
    ModuleMap h = zero_map(p, q);
    for (std::size_t k = 0; k < forward.size(); ++k)
      if (!(*ginv)(k, j).is_zero()) h.matrix += (*ginv)(k, j) * forward[k].matrix;
    corrected.push_back(std::move(h));
  }
  return {p, q, std::move(corrected), std::move(backward)};
}

DualBasisPair dual_bases(const FrobStructure& fs, const ModulePtr& p, const ModulePtr& q) {
  return dual_bases(fs, p, q, hom_space(p, q), hom_space(q, p));
}

ModuleMap handle_element(const DualBasisPair& d) {
  ModuleMap xi = zero_map(d.p, d.p);
  for (std::size_t i = 0; i < d.forward.size(); ++i)
    xi.matrix += d.backward[i].matrix * d.forward[i].matrix;
  return xi;
}

ModuleMap handle_element(const FrobStructure& fs, const ModulePtr& p, const ModulePtr& q) {
  return handle_element(dual_bases(fs, p, q));
}

ModuleMap star(const DualBasisPair& d, const ModuleMap& f, const ModuleMap& g) {
  if (!same_presentation(*f.source, *d.p) || !same_presentation(*f.target, *d.p) ||
      !same_presentation(*g.source, *d.q) || !same_presentation(*g.target, *d.q))
    throw Error(ErrorKind::ShapeMismatch, "star: f must be in End(P) and g in End(Q)");
  ModuleMap out = zero_map(d.p, d.p);
  for (std::size_t i = 0; i < d.forward.size(); ++i)
    out.matrix += f.matrix * d.backward[i].matrix * g.matrix * d.forward[i].matrix;
  return out;
}

ModuleMap star(const FrobStructure& fs, const ModuleMap& f, const ModuleMap& g) {
  return star(dual_bases(fs, f.source, g.source), f, g);
}

HH0Class star(const FrobStructure& fs, const HH0Class& a, const HH0Class& b) {
  const AlgebraPtr& alg = a.space->algebra;
  auto reg = regular_module(alg);
  ModuleMap ra{reg, reg, alg->right_mult(a.representative())};
  ModuleMap rb{reg, reg, alg->right_mult(b.representative())};
  return hs_trace(a.space, star(fs, ra, rb));
}

VerificationReport verify_trace_field(const FrobStructure& fs, std::uint64_t seed,
                                      std::size_t samples) {
  VerificationReport report;
  const AlgebraPtr& a = fs.hopf.algebra;
  const Field& fld = a->field();
  if (a->idempotents().empty() || !a->idempotents_complete())
    throw Error(ErrorKind::MissingIdempotents, a->name() + " has no complete idempotent list");

  const std::size_t m = a->idempotents().size();
  std::vector<ModulePtr> ps;
  std::vector<ProjectivePresentation> pres;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    auto p = projective(a, a->idempotents()[i]).module;
    names.push_back("P" + std::to_string(i));
    ps.push_back(std::make_shared<AModule>(a, p->dim(), p->actions(), names.back()));
    pres.push_back(split_projective(ps.back()));
  }
  auto space = hh0(a);
  std::vector<std::vector<DualBasisPair>> duals(m);
  std::vector<std::vector<ModuleMap>> ends(m);
  for (std::size_t i = 0; i < m; ++i) {
    ends[i] = hom_space(ps[i], ps[i]);
    for (std::size_t j = 0; j < m; ++j) duals[i].push_back(dual_bases(fs, ps[i], ps[j]));
  }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::string subject = names[i] + "," + names[j];
      const std::size_t dim_hom = duals[i][j].forward.size();
      const Scalar expected(fld, static_cast<long>(dim_hom));
      ModuleMap xi = handle_element(duals[i][j]);

      bool central = true;
      for (const auto& z : ends[i])
        if (!(z.matrix * xi.matrix == xi.matrix * z.matrix)) central = false;
      report.add("trace_field", "a_centrality", subject, central);

      Scalar t = modified_trace(fs, pres[i], xi);
      report.add("trace_field", "b_trace_of_handle", subject, t == expected,
                 "t(xi)=" + t.str() + " dim Hom=" + std::to_string(dim_hom));

      if (is_absolutely_simple(*ps[i])) {
        Scalar d = modified_trace(fs, pres[i], identity_map(ps[i]));
        bool ok = !d.is_zero() &&
                  xi.matrix == (expected / d) * Matrix::identity(fld, ps[i]->dim());
        report.add("trace_field", "c_simple_handle", subject, ok, "d(P)=" + d.str());
      }

      HH0Class hp = hs_trace(space, pres[i], identity_map(ps[i]));
      HH0Class hq = hs_trace(space, pres[j], identity_map(ps[j]));
      Scalar ts = trace_of_class(fs, star(fs, hp, hq));
      report.add("trace_field", "d_class_star", subject, ts == expected,
                 "t(HS*HS)=" + ts.str());
    }

  Rng rng(seed);
  std::size_t bad_e = 0, bad_f = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = rng.index(m), j = rng.index(m), k = rng.index(m);
    ModuleMap g = random_map(ends[j], ps[j], ps[j], rng);
    if (s % 2 == 0) {
      // f = b a on P_i and f' = a b on P_k have the same class.
      ModuleMap x = random_map(hom_space(ps[i], ps[k]), ps[i], ps[k], rng);
      ModuleMap y = random_map(hom_space(ps[k], ps[i]), ps[k], ps[i], rng);
      HH0Class lhs = hs_trace(space, pres[i], star(duals[i][j], compose(y, x), g));
      HH0Class rhs = hs_trace(space, pres[k], star(duals[k][j], compose(x, y), g));
      if (!(lhs == rhs)) ++bad_e;
    } else {
      // f' = f + [c, d] inside End(P_i).
      ModuleMap f = random_map(ends[i], ps[i], ps[i], rng);
      ModuleMap c = random_map(ends[i], ps[i], ps[i], rng);
      ModuleMap d = random_map(ends[i], ps[i], ps[i], rng);
      ModuleMap f2 = f + compose(c, d) - compose(d, c);
      HH0Class lhs = hs_trace(space, pres[i], star(duals[i][j], f, g));
      HH0Class rhs = hs_trace(space, pres[i], star(duals[i][j], f2, g));
      if (!(lhs == rhs)) ++bad_e;
    }
    ModuleMap f = random_map(ends[i], ps[i], ps[i], rng);
    HH0Class fg = hs_trace(space, pres[i], star(duals[i][j], f, g));
    HH0Class gf = hs_trace(space, pres[j], star(duals[j][i], g, f));
    if (!(fg == gf)) ++bad_f;
  }
  report.add("trace_field", "e_representative_independence", a->name(), bad_e == 0,
             std::to_string(samples) + " samples, " + std::to_string(bad_e) + " failures");
  report.add("trace_field", "f_commutativity", a->name(), bad_f == 0,
             std::to_string(samples) + " samples, " + std::to_string(bad_f) + " failures");
  return report;
}

}  // namespace tracelab
