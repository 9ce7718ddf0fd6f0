#include "tracelab/workspace.hpp"

#include <json.hpp>

#include "tracelab/error.hpp"

namespace tracelab {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, path + ": " + what);
}

const json& field_of(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

const json& array_of(const json& v, const std::string& path, std::optional<std::size_t> size = {}) {
  if (!v.is_array()) fail(path, "expected an array");
  if (size && v.size() != *size)
    fail(path, "expected " + std::to_string(*size) + " entries, found " + std::to_string(v.size()));
  return v;
}

std::size_t index_of(const json& v, const std::string& path, std::size_t bound) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    fail(path, "expected a non-negative integer");
  auto i = v.get<std::size_t>();
  if (i >= bound) fail(path, "index " + std::to_string(i) + " out of range");
  return i;
}

Scalar scalar_of(const json& v, const Field& f, const std::string& path) {
  if (!v.is_string()) fail(path, "scalars must be strings");
  try {
    return Scalar::parse(f, v.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Matrix vector_of(const json& v, const Field& f, std::size_t n, const std::string& path) {
  array_of(v, path, n);
  Matrix m(f, n, 1);
  for (std::size_t i = 0; i < n; ++i) m[i] = scalar_of(v[i], f, path + "[" + std::to_string(i) + "]");
  return m;
}

Matrix matrix_of(const json& v, const Field& f, std::size_t rows, std::size_t cols,
                 const std::string& path) {
  array_of(v, path, rows);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    array_of(v[i], row_path, cols);
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = scalar_of(v[i][j], f, row_path + "[" + std::to_string(j) + "]");
  }
  return m;
}

json vector_json(const Matrix& m) {
  json out = json::array();
  for (auto s : m.entries()) out.push_back(s.str());
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

std::string join(const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s;
}

void render(std::vector<std::string>& out, const std::string& object, const ValidationReport& r) {
  for (const auto& v : r.violations)
    out.push_back(object + ": " + v.law + " (" + join(v.indices) + ")" +
                  (v.detail.empty() ? "" : " " + v.detail));
}

}  // namespace

Workspace parse_workspace(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }

  const json& fj = field_of(doc, "field", "$");
  const json& pj = field_of(fj, "characteristic", "$.field");
  if (!pj.is_number_integer() || pj.get<long long>() < 0 || pj.get<long long>() > 0xffffffffLL)
    fail("$.field.characteristic", "expected 0 or a prime");
  Field f;
  try {
    f = Field(pj.get<std::uint32_t>());
  } catch (const Error& e) {
    fail("$.field.characteristic", e.what());
  }

  const std::string ap = "$.algebra";
  const json& aj = field_of(doc, "algebra", "$");
  const json& dj = field_of(aj, "dim", ap);
  if (!dj.is_number_unsigned() || dj.get<std::size_t>() == 0) fail(ap + ".dim", "expected a positive integer");
  const std::size_t n = dj.get<std::size_t>();
  std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>()
                                                                      : std::string("workspace");

  std::vector<std::string> labels;
  const json& lj = array_of(field_of(aj, "labels", ap), ap + ".labels", n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!lj[i].is_string()) fail(ap + ".labels[" + std::to_string(i) + "]", "expected a string");
    labels.push_back(lj[i].get<std::string>());
  }

  std::vector<Scalar> c(n * n * n, Scalar::zero(f));
  const json& sj = array_of(field_of(aj, "structure", ap), ap + ".structure");
  for (std::size_t t = 0; t < sj.size(); ++t) {
    const std::string p = ap + ".structure[" + std::to_string(t) + "]";
    array_of(sj[t], p, 4);
    std::size_t i = index_of(sj[t][0], p + "[0]", n), j = index_of(sj[t][1], p + "[1]", n),
                k = index_of(sj[t][2], p + "[2]", n);
    c[(i * n + j) * n + k] = scalar_of(sj[t][3], f, p + "[3]");
  }
  Matrix unit = vector_of(field_of(aj, "unit", ap), f, n, ap + ".unit");
  std::vector<Matrix> idem;
  bool complete = false;
  if (aj.contains("idempotents")) {
    const json& ij = array_of(aj["idempotents"], ap + ".idempotents");
    for (std::size_t r = 0; r < ij.size(); ++r)
      idem.push_back(vector_of(ij[r], f, n, ap + ".idempotents[" + std::to_string(r) + "]"));
    complete = aj.value("idempotents_complete", false);
  }
  Workspace ws;
  ws.algebra = std::make_shared<Algebra>(name, f, std::move(labels), std::move(c), std::move(unit),
                                         std::move(idem), complete);

  if (doc.contains("hopf")) {
    const std::string hp = "$.hopf";
    const json& hj = doc["hopf"];
    HopfData h{ws.algebra, Matrix(f, n * n, n), Matrix(f, 1, n), Matrix(f, n, n)};
    const json& cj = array_of(field_of(hj, "coproduct", hp), hp + ".coproduct");
    for (std::size_t t = 0; t < cj.size(); ++t) {
      const std::string p = hp + ".coproduct[" + std::to_string(t) + "]";
      array_of(cj[t], p, 4);
      std::size_t j = index_of(cj[t][0], p + "[0]", n), a = index_of(cj[t][1], p + "[1]", n),
                  b = index_of(cj[t][2], p + "[2]", n);
      h.coproduct(a * n + b, j) = scalar_of(cj[t][3], f, p + "[3]");
    }
    h.counit = vector_of(field_of(hj, "counit", hp), f, n, hp + ".counit").transpose();
    h.antipode = matrix_of(field_of(hj, "antipode", hp), f, n, n, hp + ".antipode");
    if (hj.contains("pivot")) ws.pivot = vector_of(hj["pivot"], f, n, hp + ".pivot");
    if (hj.contains("frobenius"))
      ws.frobenius = vector_of(hj["frobenius"], f, n, hp + ".frobenius");
    ws.hopf = std::move(h);
  }

  if (doc.contains("modules")) {
    const json& mj = array_of(doc["modules"], "$.modules");
    for (std::size_t t = 0; t < mj.size(); ++t) {
      const std::string mp = "$.modules[" + std::to_string(t) + "]";
      const json& m = mj[t];
      const json& nm = field_of(m, "name", mp);
      if (!nm.is_string()) fail(mp + ".name", "expected a string");
      const json& md = field_of(m, "dim", mp);
      if (!md.is_number_unsigned()) fail(mp + ".dim", "expected a non-negative integer");
      const std::size_t d = md.get<std::size_t>();
      const json& acts = array_of(field_of(m, "actions", mp), mp + ".actions", n);
      std::vector<Matrix> act;
      for (std::size_t i = 0; i < n; ++i)
        act.push_back(matrix_of(acts[i], f, d, d, mp + ".actions[" + std::to_string(i) + "]"));
      ws.modules.push_back(
          std::make_shared<AModule>(ws.algebra, d, std::move(act), nm.get<std::string>()));
    }
  }
  return ws;
}

std::string serialize_workspace(const Workspace& ws) {
  const Algebra& a = *ws.algebra;
  const std::size_t n = a.dim();
  json doc;
  doc["name"] = a.name();
  doc["field"]["characteristic"] = a.field().characteristic();
  json& aj = doc["algebra"];
  aj["dim"] = n;
  aj["labels"] = a.labels();
  json st = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.structure(i, j, k).is_zero()) st.push_back({i, j, k, a.structure(i, j, k).str()});
  aj["structure"] = st;
  aj["unit"] = vector_json(a.unit());
  json idem = json::array();
  for (const auto& e : a.idempotents()) idem.push_back(vector_json(e));
  aj["idempotents"] = idem;
  aj["idempotents_complete"] = a.idempotents_complete();

  if (ws.hopf) {
    json& hj = doc["hopf"];
    json cp = json::array();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n * n; ++p)
        if (!ws.hopf->coproduct(p, j).is_zero())
          cp.push_back({j, p / n, p % n, ws.hopf->coproduct(p, j).str()});
    hj["coproduct"] = cp;
    hj["counit"] = vector_json(ws.hopf->counit);
    hj["antipode"] = matrix_json(ws.hopf->antipode);
    if (ws.pivot) hj["pivot"] = vector_json(*ws.pivot);
    if (ws.frobenius) hj["frobenius"] = vector_json(*ws.frobenius);
  }
  json mods = json::array();
  for (const auto& m : ws.modules) {
    json mj;
    mj["name"] = m->name();
    mj["dim"] = m->dim();
    json acts = json::array();
    for (const auto& x : m->actions()) acts.push_back(matrix_json(x));
    mj["actions"] = acts;
    mods.push_back(mj);
  }
  doc["modules"] = mods;
  return doc.dump(2) + "\n";
}

std::vector<std::string> validate_workspace(const Workspace& ws) {
  std::vector<std::string> out;
  render(out, "algebra " + ws.algebra->name(), validate_algebra(*ws.algebra));
  if (ws.hopf) render(out, "hopf", validate_hopf(*ws.hopf));
  for (const auto& m : ws.modules) render(out, "module " + m->name(), validate_module(*m));
  return out;
}

bool structurally_equal(const Workspace& a, const Workspace& b) {
  const Algebra &x = *a.algebra, &y = *b.algebra;
  if (!(x.field() == y.field()) || x.name() != y.name() || x.labels() != y.labels() ||
      x.structure_constants() != y.structure_constants() || !(x.unit() == y.unit()) ||
      x.idempotents() != y.idempotents() || x.idempotents_complete() != y.idempotents_complete())
    return false;
  if (a.hopf.has_value() != b.hopf.has_value()) return false;
  if (a.hopf && !(a.hopf->coproduct == b.hopf->coproduct && a.hopf->counit == b.hopf->counit &&
                  a.hopf->antipode == b.hopf->antipode))
    return false;
  if (a.pivot != b.pivot || a.frobenius != b.frobenius) return false;
  if (a.modules.size() != b.modules.size()) return false;
  for (std::size_t i = 0; i < a.modules.size(); ++i)
    if (a.modules[i]->name() != b.modules[i]->name() || a.modules[i]->dim() != b.modules[i]->dim() ||
        a.modules[i]->actions() != b.modules[i]->actions())
      return false;
  return true;
}

}  // namespace tracelab
