#include <array>
#include <functional>

#include "tracelab/error.hpp"
#include "tracelab/workspace.hpp"

namespace tracelab {

namespace {

using Action = std::function<Matrix(std::size_t)>;

ModulePtr make_module(const AlgebraPtr& a, std::size_t dim, const Action& rho, std::string name) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(rho(i));
  return std::make_shared<AModule>(a, dim, std::move(act), std::move(name));
}

ModulePtr renamed(const ModulePtr& m, std::string name) {
  return std::make_shared<AModule>(m->algebra(), m->dim(), m->actions(), std::move(name));
}

Matrix scalar1(const Scalar& s) {
  Matrix m(s.field(), 1, 1);
  m(0, 0) = s;
  return m;
}

// Group algebra with basis the group elements; element 0 is the identity.
Workspace group_workspace(const std::string& name, const Field& f,
                          std::vector<std::string> labels,
                          const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                          const std::function<std::size_t(std::size_t)>& inv,
                          std::vector<Matrix> idempotents) {
  const std::size_t n = labels.size();
  std::vector<Scalar> c(n * n * n, Scalar::zero(f));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[(i * n + j) * n + mul(i, j)] = Scalar::one(f);
  auto a = std::make_shared<Algebra>(name, f, std::move(labels), std::move(c),
                                     Matrix::unit(f, n, 0), std::move(idempotents), true);
  HopfData h{a, Matrix(f, n * n, n), Matrix(f, 1, n), Matrix(f, n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    h.coproduct(j * n + j, j) = Scalar::one(f);
    h.counit(0, j) = Scalar::one(f);
    h.antipode(inv(j), j) = Scalar::one(f);
  }
  Workspace ws{a, h, Matrix::unit(f, n, 0), Matrix::unit(f, n, 0), {}};
  ws.modules.push_back(trivial_module(h));
  return ws;
}

Workspace triv() {
  const Field q = Field::rationals();
  Workspace ws = group_workspace("Triv", q, {"1"}, [](auto, auto) { return 0; },
                                 [](auto) { return 0; }, {Matrix::column(q, {1})});
  return ws;
}

Workspace grp_f2c2() {
  const Field f = Field::prime(2);
  Workspace ws = group_workspace(
      "GrpF2C2", f, {"1", "g"}, [](std::size_t i, std::size_t j) { return (i + j) % 2; },
      [](std::size_t i) { return i; }, {Matrix::column(f, {1, 0})});
  ws.modules.push_back(regular_module(ws.algebra));
  return ws;
}

Workspace grp_f3c3() {
  const Field f = Field::prime(3);
  Workspace ws = group_workspace(
      "GrpF3C3", f, {"1", "c", "c2"}, [](std::size_t i, std::size_t j) { return (i + j) % 3; },
      [](std::size_t i) { return (3 - i) % 3; }, {Matrix::column(f, {1, 0, 0})});
  const Matrix jordan = Matrix::from_rows(f, {{1, 1}, {0, 1}});
  ws.modules.push_back(make_module(
      ws.algebra, 2,
      [&](std::size_t i) {
        Matrix m = Matrix::identity(f, 2);
        for (std::size_t k = 0; k < i; ++k) m = m * jordan;
        return m;
      },
      "J2"));
  ws.modules.push_back(regular_module(ws.algebra));
  return ws;
}

using Perm = std::array<std::size_t, 3>;

Perm compose_perm(const Perm& p, const Perm& q) { return {p[q[0]], p[q[1]], p[q[2]]}; }

// r^i s^j at index i + 3 j, with r = (0 1 2) and s = (1 2).
Perm s3_element(std::size_t idx) {
  const Perm r{1, 2, 0}, s{0, 2, 1};
  Perm out{0, 1, 2};
  for (std::size_t k = 0; k < idx % 3; ++k) out = compose_perm(r, out);
  if (idx >= 3) out = compose_perm(out, s);
  return out;
}

std::size_t s3_index(const Perm& p) {
  for (std::size_t i = 0; i < 6; ++i)
    if (s3_element(i) == p) return i;
  throw Error(ErrorKind::Internal, "not a permutation of 3 points");
}

Workspace grp_f3s3() {
  const Field f = Field::prime(3);
  // e+ = (1 + s)/2 = 2 + 2s and e- = (1 - s)/2 = 2 + s over F_3.
  Workspace ws = group_workspace(
      "GrpF3S3", f, {"1", "r", "r2", "s", "rs", "r2s"},
      [](std::size_t i, std::size_t j) { return s3_index(compose_perm(s3_element(i), s3_element(j))); },
      [](std::size_t i) {
        Perm p = s3_element(i), q{};
        for (std::size_t x = 0; x < 3; ++x) q[p[x]] = x;
        return s3_index(q);
      },
      {Matrix::column(f, {2, 0, 0, 2, 0, 0}), Matrix::column(f, {2, 0, 0, 1, 0, 0})});
  const auto& a = ws.algebra;
  ws.modules.push_back(make_module(
      a, 1, [&](std::size_t i) { return scalar1(Scalar(f, i >= 3 ? -1 : 1)); }, "sgn"));
  auto perm = [&](std::size_t i) {
    Matrix m(f, 3, 3);
    Perm p = s3_element(i);
    for (std::size_t x = 0; x < 3; ++x) m(p[x], x) = Scalar::one(f);
    return m;
  };
  ws.modules.push_back(make_module(a, 3, perm, "Perm3"));
  const Matrix w = Matrix::from_rows(f, {{1, 0}, {-1, 1}, {0, -1}});
  ws.modules.push_back(
      make_module(a, 2, [&](std::size_t i) { return coordinates(w, perm(i) * w); }, "V2"));
  ws.modules.push_back(renamed(projective(a, a->idempotents()[0]).module, "P+"));
  ws.modules.push_back(renamed(projective(a, a->idempotents()[1]).module, "P-"));
  return ws;
}

Workspace path_a2() {
  const Field q = Field::rationals();
  // e1 = E11, a = E12, e2 = E22 in upper-triangular 2x2 matrices.
  const std::size_t n = 3;
  std::vector<Scalar> c(n * n * n, Scalar::zero(q));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    c[(i * n + j) * n + k] = Scalar::one(q);
  };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 2, 1);
  set(2, 2, 2);
  auto a = std::make_shared<Algebra>(
      "PathA2", q, std::vector<std::string>{"e1", "a", "e2"}, std::move(c),
      Matrix::column(q, {1, 0, 1}),
      std::vector<Matrix>{Matrix::column(q, {1, 0, 0}), Matrix::column(q, {0, 0, 1})}, true);
  Workspace ws{a, std::nullopt, std::nullopt, std::nullopt, {}};
  ws.modules.push_back(
      make_module(a, 1, [&](std::size_t i) { return scalar1(Scalar(q, i == 0 ? 1 : 0)); }, "S1"));
  ws.modules.push_back(
      make_module(a, 1, [&](std::size_t i) { return scalar1(Scalar(q, i == 2 ? 1 : 0)); }, "S2"));
  ws.modules.push_back(renamed(projective(a, a->idempotents()[1]).module, "P2"));
  ws.modules.push_back(regular_module(a));
  return ws;
}

// x -> y x in A (x) A.
Matrix tensor_left(const Algebra& a, const Matrix& y) {
  const std::size_t n = a.dim();
  Matrix m(a.field(), n * n, n * n);
  for (std::size_t p = 0; p < n * n; ++p)
    if (!y[p].is_zero()) m += y[p] * kron(a.left_mult(p / n), a.left_mult(p % n));
  return m;
}

Workspace prod2() {
  // F2[C2] (x) Fun(C2): block a is delta_1, block b is delta_h; as an algebra
  // this is GrpF2C2 x GrpF2C2 with basis 1a, ga, 1b, gb.
  const Field f = Field::prime(2);
  const std::size_t n = 4;
  std::vector<Scalar> c(n * n * n, Scalar::zero(f));
  for (std::size_t blk = 0; blk < 2; ++blk)
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y)
        c[((2 * blk + x) * n + 2 * blk + y) * n + 2 * blk + (x + y) % 2] = Scalar::one(f);
  auto a = std::make_shared<Algebra>(
      "Prod2", f, std::vector<std::string>{"1a", "ga", "1b", "gb"}, std::move(c),
      Matrix::column(f, {1, 0, 1, 0}),
      std::vector<Matrix>{Matrix::column(f, {1, 0, 0, 0}), Matrix::column(f, {0, 0, 1, 0})},
      true);
  HopfData h{a, Matrix(f, n * n, n), Matrix(f, 1, n), Matrix::identity(f, n)};
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t v = 0; v < 2; ++v) {
        const std::size_t w = (u + v) % 2;  // delta_u = sum_{v w = u} delta_v (x) delta_w
        h.coproduct((2 * v + x) * n + 2 * w + x, 2 * u + x) = Scalar::one(f);
      }
  h.counit(0, 0) = h.counit(0, 1) = Scalar::one(f);
  Workspace ws{a, h, Matrix::column(f, {1, 0, 1, 0}), Matrix::column(f, {1, 0, 1, 0}), {}};
  ws.modules.push_back(trivial_module(h));
  ws.modules.push_back(make_module(
      a, 1, [&](std::size_t i) { return scalar1(Scalar(f, i >= 2 ? 1 : 0)); }, "kb"));
  ws.modules.push_back(regular_module(a));
  return ws;
}

Scalar power(const Scalar& q, std::size_t k) {
  Scalar out = Scalar::one(q.field());
  for (std::size_t i = 0; i < k; ++i) out *= q;
  return out;
}

}  // namespace

Workspace taft_workspace(std::string name, const Field& f, std::size_t n, const Scalar& q) {
  const std::size_t dim = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return j * n + i; };
  std::vector<std::string> labels(dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::string g = i == 0 ? "" : (i == 1 ? "g" : "g" + std::to_string(i));
      std::string x = j == 0 ? "" : (j == 1 ? "x" : "x" + std::to_string(j));
      labels[idx(i, j)] = (g + x).empty() ? "1" : g + x;
    }
  // (g^a x^b)(g^c x^d) = q^(bc) g^(a+c) x^(b+d), zero when b + d >= n.
  std::vector<Scalar> c(dim * dim * dim, Scalar::zero(f));
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t b1 = 0; b1 < n; ++b1)
      for (std::size_t a2 = 0; a2 < n; ++a2)
        for (std::size_t b2 = 0; b2 < n; ++b2)
          if (b1 + b2 < n)
            c[(idx(a1, b1) * dim + idx(a2, b2)) * dim + idx((a1 + a2) % n, b1 + b2)] =
                power(q, b1 * a2);

  const Scalar inv_n = Scalar(f, static_cast<long>(n)).inverse();
  std::vector<Matrix> idem;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix e(f, dim, 1);
    for (std::size_t i = 0; i < n; ++i) e[idx(i, 0)] = inv_n * power(q, (n - k) * i % n);
    idem.push_back(std::move(e));
  }
  auto a = std::make_shared<Algebra>(std::move(name), f, std::move(labels), std::move(c),
                                     Matrix::unit(f, dim, 0), idem, true);

  const Matrix g = a->basis(idx(1 % n, 0)), x = a->basis(idx(0, 1));
  const Matrix one = a->unit();
  const Matrix dg = kron(g, g);
  const Matrix dx = kron(x, one) + kron(g, x);
  const Matrix ginv = a->basis(idx(n - 1, 0));
  const Matrix sx = -(a->multiply(ginv, x));
  HopfData h{a, Matrix(f, dim * dim, dim), Matrix(f, 1, dim), Matrix(f, dim, dim)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix d = kron(one, one), s = one;
      for (std::size_t k = 0; k < i; ++k) d = tensor_left(*a, d) * dg;
      for (std::size_t k = 0; k < j; ++k) d = tensor_left(*a, d) * dx;
      for (std::size_t k = 0; k < j; ++k) s = a->multiply(s, sx);
      for (std::size_t k = 0; k < i; ++k) s = a->multiply(s, ginv);
      h.coproduct.set_block(0, idx(i, j), d);
      h.antipode.set_block(0, idx(i, j), s);
      if (j == 0) h.counit(0, idx(i, j)) = Scalar::one(f);
    }
  Workspace ws{a, h, ginv, a->basis(dim - 1), {}};
  ws.modules.push_back(trivial_module(h));
  for (std::size_t k = 1; k < n; ++k) {
    Matrix chi(f, 1, dim);
    for (std::size_t i = 0; i < n; ++i) chi(0, idx(i, 0)) = power(q, k * i);
    ws.modules.push_back(
        character_module(a, chi, n == 2 ? std::string("sgn") : "chi" + std::to_string(k)));
  }
  for (std::size_t k = 0; k < n; ++k)
    ws.modules.push_back(renamed(projective(a, idem[k]).module, "P" + std::to_string(k)));
  ws.modules.push_back(regular_module(a));
  return ws;
}

std::vector<std::string> catalog_names() {
  return {"Triv", "GrpF2C2", "GrpF3C3", "GrpF3S3", "PathA2", "Sweedler", "Prod2"};
}

Workspace catalog_workspace(const std::string& name) {
  if (name == "Triv") return triv();
  if (name == "GrpF2C2") return grp_f2c2();
  if (name == "GrpF3C3") return grp_f3c3();
  if (name == "GrpF3S3") return grp_f3s3();
  if (name == "PathA2") return path_a2();
  if (name == "Sweedler") {
    const Field q = Field::rationals();
    return taft_workspace("Sweedler", q, 2, Scalar(q, -1));
  }
  if (name == "Prod2") return prod2();
  throw Error(ErrorKind::ValidationError, "unknown example '" + name + "'");
}

}  // namespace tracelab
