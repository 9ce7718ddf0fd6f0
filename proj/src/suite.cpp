#include "tracelab/suite.hpp"

#include <sstream>
#include <variant>

#include "tracelab/error.hpp"
#include "tracelab/tracefield.hpp"

namespace tracelab {

namespace {

std::size_t pick(const SuiteOptions& opt, std::size_t fallback) {
  return opt.samples ? *opt.samples : fallback;
}

// Per-pair seeds so that adding a module does not shift the others' samples.
std::uint64_t derive(std::uint64_t seed, std::size_t a, std::size_t b) {
  return seed * 1000003ULL + a * 7919ULL + b * 104729ULL;
}

}  // namespace

std::vector<ProjectiveModule> catalog_projectives(const Workspace& ws) {
  std::vector<ProjectiveModule> out;
  const auto& es = ws.algebra->idempotents();
  for (std::size_t i = 0; i < es.size(); ++i) {
    ProjectiveModule p = projective(ws.algebra, es[i]);
    p.module = std::make_shared<AModule>(ws.algebra, p.module->dim(), p.module->actions(),
                                         "P" + std::to_string(i));
    out.push_back(std::move(p));
  }
  return out;
}

std::variant<FrobStructure, std::string> frobenius_of(const Workspace& ws) {
  if (!ws.hopf || !ws.pivot || !ws.frobenius) return std::string("no pivot/form");
  try {
    return symmetric_frobenius(*ws.hopf, *ws.pivot, *ws.frobenius);
  } catch (const Error& e) {
    return std::string(to_string(e.kind()));
  }
}

VerificationReport verify_workspace(const Workspace& ws, const SuiteOptions& opt) {
  VerificationReport report;
  const AlgebraPtr& a = ws.algebra;
  const std::string name = a->name();
  auto projs = catalog_projectives(ws);

  std::vector<TwistedProjective> tps;
  for (const auto& p : projs) tps.push_back(twisted_projective(p));
  if (tps.empty()) report.skip("calabi_yau", "pairing", name, "no idempotents");
  for (std::size_t i = 0; i < tps.size(); ++i)
    for (const auto& x : ws.modules) report.append(verify_calabi_yau(tps[i], x));
  if (!tps.empty()) {
    const std::size_t pairs = tps.size() * tps.size();
    const std::size_t total = pick(opt, opt.cyclicity_samples);
    const std::size_t per_pair = (total + pairs - 1) / pairs;
    for (std::size_t i = 0; i < tps.size(); ++i)
      for (std::size_t j = 0; j < tps.size(); ++j)
        report.append(verify_cyclicity(tps[i], tps[j], per_pair, derive(opt.seed, i, j)));
  }

  for (const auto& x : ws.modules) {
    NakayamaImage nx = nakayama_object(x);
    const bool iso = nx.comparison_iso.is_intertwiner() &&
                     inverse(nx.comparison_iso.matrix).has_value();
    report.add("nakayama", "comparison_iso", x->name(), iso,
               "dim N(X)=" + std::to_string(nx.module->dim()));
  }

  if (!ws.hopf) {
    report.skip("hopf", "duality", name, "no Hopf structure");
    report.skip("frobenius", "symmetric_frobenius", name, "no Hopf structure");
    return report;
  }
  const HopfData& h = *ws.hopf;
  for (const auto& x : ws.modules)
    for (Side side : {Side::Left, Side::Right}) {
      DualData d = dual_module(h, x, side);
      ValidationReport v = validate_duality(h, d);
      std::string detail;
      for (const auto& e : v.violations) detail += e.law + " ";
      report.add("hopf", side == Side::Left ? "left_duality" : "right_duality", x->name(),
                 v.ok(), detail);
    }
  DistinguishedObject dist = distinguished_object(h);
  NakayamaImage nk = nakayama_object(trivial_module(h));
  report.add("hopf", "N(k)~D^-1", name,
             find_isomorphism(nk.module, dist.inverse_module).has_value(),
             "alpha=" + dist.modular_character.str());

  auto fs_or = frobenius_of(ws);
  if (auto* reason = std::get_if<std::string>(&fs_or)) {
    if (*reason == "NotUnimodular" || *reason == "no pivot/form")
      report.skip("frobenius", "symmetric_frobenius", name, *reason);
    else
      report.add("frobenius", "symmetric_frobenius", name, false, *reason);
    return report;
  }
  const FrobStructure& fs = std::get<FrobStructure>(fs_or);
  report.add("frobenius", "symmetric_frobenius", name, true);

  for (std::size_t i = 0; i < projs.size(); ++i) {
    Rng rng(derive(opt.seed, i, 999));
    auto ends = hom_space(tps[i].proj.module, tps[i].proj.module);
    auto theta = untwisting(fs.frobenius_form, tps[i].image);
    bool agree = theta.is_intertwiner();
    for (std::size_t s = 0; s < 5; ++s) {
      ModuleMap f = random_map(ends, projs[i].module, projs[i].module, rng);
      if (!(modified_trace(fs, f) == twisted_trace(tps[i], compose(theta, f)))) agree = false;
    }
    report.add("frobenius", "untwisted_trace_agrees", projs[i].module->name(), agree);
    for (std::size_t k = 0; k < ws.modules.size(); ++k)
      report.append(verify_partial_trace(fs, projs[i].module, ws.modules[k],
                                         pick(opt, opt.partial_trace_samples),
                                         derive(opt.seed, i, 500 + k)));
  }
  for (const auto& x : ws.modules)
    for (const auto& y : ws.modules) report.append(verify_pivot_monoidal(fs, x, y));

  if (a->idempotents_complete() && !projs.empty()) {
    report.append(verify_trace_field(fs, opt.seed, pick(opt, opt.trace_field_samples)));
    const std::size_t m = projs.size();
    Matrix table(a->field(), m, m), cartan(a->field(), m, m);
    auto c = cartan_matrix(a);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        table(i, j) = modified_trace(fs, handle_element(fs, projs[i].module, projs[j].module));
        cartan(i, j) = Scalar(a->field(), static_cast<long>(c[i][j]));
      }
    report.add("trace_field", "t_xi_table", name, table == cartan, table.str());
  }
  return report;
}

std::string to_tsv(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite\tcheck\tsubject\tresult\tdetail\n";
  for (const auto& c : r.checks)
    os << c.suite << '\t' << c.check << '\t' << c.subject << '\t'
       << (c.skipped ? "skipped" : (c.passed ? "pass" : "FAIL")) << '\t' << c.detail << '\n';
  return os.str();
}

}  // namespace tracelab
