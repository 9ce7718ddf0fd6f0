// trace_lab: command-line front end over the tracelab library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tracelab/error.hpp"
#include "tracelab/suite.hpp"
#include "tracelab/tracefield.hpp"

using namespace tracelab;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

Workspace load(const std::string& example, const std::string& file) {
  if (!example.empty()) return catalog_workspace(example);
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + file);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

std::string frob_reason(const std::variant<FrobStructure, std::string>& fs) {
  return std::holds_alternative<std::string>(fs) ? std::get<std::string>(fs) : std::string();
}

int cmd_validate(const Workspace& ws, std::ostream& out) {
  auto v = validate_workspace(ws);
  out << "object\tviolation\n";
  for (const auto& s : v) {
    auto colon = s.find(": ");
    out << s.substr(0, colon) << '\t' << s.substr(colon + 2) << '\n';
  }
  if (v.empty()) out << ws.algebra->name() << "\tnone\n";
  return v.empty() ? 0 : kInputError;
}

int cmd_nakayama(const Workspace& ws, std::ostream& out) {
  out << "module\tdim\tdim_N\tdim_homdual\tcomparison_invertible\tN_iso_to_X\tcomparison\n";
  for (const auto& x : ws.modules) {
    NakayamaImage nx = nakayama_object(x);
    bool inv = nx.comparison_iso.is_intertwiner() && inverse(nx.comparison_iso.matrix);
    bool iso = find_isomorphism(x, nx.module).has_value();
    out << x->name() << '\t' << x->dim() << '\t' << nx.module->dim() << '\t'
        << nx.homdual->dim() << '\t' << (inv ? "yes" : "no") << '\t' << (iso ? "yes" : "no")
        << '\t' << nx.comparison_iso.matrix.str() << '\n';
  }
  return 0;
}

int cmd_trace(const Workspace& ws, std::ostream& out) {
  auto fs = frobenius_of(ws);
  out << "projective\tmodule\tdim_hom\tgram\trank\tmodified_dimension\n";
  for (const auto& p : catalog_projectives(ws)) {
    TwistedProjective tp = twisted_projective(p);
    std::string dm = "n/a: " + frob_reason(fs);
    if (auto* f = std::get_if<FrobStructure>(&fs)) dm = modified_trace(*f, identity_map(p.module)).str();
    for (const auto& x : ws.modules) {
      auto fsb = hom_space(p.module, x);
      auto gsb = hom_space(x, tp.image.module);
      Matrix gram(ws.algebra->field(), fsb.size(), gsb.size());
      for (std::size_t i = 0; i < fsb.size(); ++i)
        for (std::size_t j = 0; j < gsb.size(); ++j) gram(i, j) = trace_pairing(tp, fsb[i], gsb[j]);
      out << p.module->name() << '\t' << x->name() << '\t' << fsb.size() << '\t' << gram.str()
          << '\t' << rank(gram) << '\t' << dm << '\n';
    }
  }
  return 0;
}

int cmd_handle(const Workspace& ws, std::ostream& out) {
  auto fs = frobenius_of(ws);
  out << "P\tQ\tdim_hom\txi\tt_xi\n";
  auto* f = std::get_if<FrobStructure>(&fs);
  if (!f) {
    out << ws.algebra->name() << "\t-\t-\t-\tskipped: " << frob_reason(fs) << '\n';
    return 0;
  }
  auto ps = catalog_projectives(ws);
  for (const auto& p : ps)
    for (const auto& q : ps) {
      DualBasisPair d = dual_bases(*f, p.module, q.module);
      ModuleMap xi = handle_element(d);
      out << p.module->name() << '\t' << q.module->name() << '\t' << d.forward.size() << '\t'
          << xi.matrix.str() << '\t' << modified_trace(*f, xi).str() << '\n';
    }
  return 0;
}

int cmd_star(const Workspace& ws, std::ostream& out) {
  auto fs = frobenius_of(ws);
  out << "P\tQ\tclass\tt\n";
  auto* f = std::get_if<FrobStructure>(&fs);
  if (!f) {
    out << ws.algebra->name() << "\t-\t-\tskipped: " << frob_reason(fs) << '\n';
    return 0;
  }
  auto space = hh0(ws.algebra);
  auto ps = catalog_projectives(ws);
  std::vector<HH0Class> classes;
  for (const auto& p : ps) classes.push_back(hs_trace(space, identity_map(p.module)));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      HH0Class c = star(*f, classes[i], classes[j]);
      out << ps[i].module->name() << '\t' << ps[j].module->name() << '\t'
          << c.coords.transpose().str() << '\t' << trace_of_class(*f, c).str() << '\n';
    }
  return 0;
}

int cmd_cartan(const Workspace& ws, std::ostream& out) {
  auto c = cartan_matrix(ws.algebra);
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < c[i].size(); ++j) s += (j ? "," : "") + std::to_string(c[i][j]);
    s += "]";
  }
  s += "]";
  out << "algebra\tcartan\n" << ws.algebra->name() << '\t' << s << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact trace computations over finite-dimensional algebras"};
  std::string verb, example, file, out_path;
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;
  app.add_option("verb", verb, "validate|nakayama|trace|handle|star|cartan|verify")
      ->required()
      ->check(CLI::IsMember({"validate", "nakayama", "trace", "handle", "star", "cartan", "verify"}));
  auto* ex = app.add_option("--example", example, "builtin workspace")
                 ->check(CLI::IsMember(catalog_names()));
  auto* fi = app.add_option("--file", file, "workspace JSON file");
  ex->excludes(fi);
  fi->excludes(ex);
  app.add_option("--seed", seed, "seed for sampled checks")->envname("TRACE_LAB_SEED");
  app.add_option("--samples", samples, "override every sample count");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }
  if (example.empty() && file.empty()) {
    std::cerr << "one of --example or --file is required\n";
    return kInputError;
  }

  Workspace ws;
  try {
    ws = load(example, file);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kInputError;
  }

  std::ostringstream report;
  int rc = 0;
  try {
    if (verb == "validate") {
      rc = cmd_validate(ws, report);
    } else {
      auto violations = validate_workspace(ws);
      if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << v << '\n';
        return kInputError;
      }
      if (verb == "nakayama") rc = cmd_nakayama(ws, report);
      else if (verb == "trace") rc = cmd_trace(ws, report);
      else if (verb == "handle") rc = cmd_handle(ws, report);
      else if (verb == "star") rc = cmd_star(ws, report);
      else if (verb == "cartan") rc = cmd_cartan(ws, report);
      else {
        SuiteOptions opt;
        opt.seed = seed;
        opt.samples = samples;
        VerificationReport r = verify_workspace(ws, opt);
        report << to_tsv(r);
        rc = r.ok() ? 0 : kVerifyFailed;
      }
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    const bool input = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ValidationError ||
                       e.kind() == ErrorKind::MissingIdempotents;
    return input ? kInputError : kVerifyFailed;
  }

  if (out_path.empty()) {
    std::cout << report.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << '\n';
      return kInputError;
    }
    out << report.str();
  }
  return rc;
}
