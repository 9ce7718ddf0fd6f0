#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace tracelab;
using namespace testing;

namespace {

const char* const kFrob[] = {"Triv", "GrpF2C2", "GrpF3C3", "GrpF3S3", "Prod2"};

// Number of conjugacy classes read off the multiplication table: for a group
// algebra, HH0 has the classes as a basis.
std::size_t conjugacy_classes(const Algebra& a) {
  const std::size_t n = a.dim();
  auto mul = [&](std::size_t i, std::size_t j) {
    Matrix p = a.multiply(a.basis(i), a.basis(j));
    for (std::size_t k = 0; k < n; ++k)
      if (!p[k].is_zero()) return k;
    return n;
  };
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (mul(i, j) == 0) inv[i] = j;
  std::set<std::set<std::size_t>> classes;
  for (std::size_t x = 0; x < n; ++x) {
    std::set<std::size_t> c;
    for (std::size_t g = 0; g < n; ++g) c.insert(mul(mul(g, x), inv[g]));
    classes.insert(c);
  }
  return classes.size();
}

}  // namespace

TEST_CASE("HH0 dimensions") {
  CHECK(hh0(example("GrpF2C2").algebra)->dim() == 2);
  CHECK(hh0(example("Prod2").algebra)->dim() == 4);
  CHECK(hh0(example("PathA2").algebra)->dim() == 2);
  for (const char* name : {"GrpF2C2", "GrpF3C3", "GrpF3S3"}) {
    const Algebra& a = *example(name).algebra;
    CAPTURE(name);
    CHECK(hh0(example(name).algebra)->dim() == conjugacy_classes(a));
  }
  CHECK(hh0(example("GrpF3S3").algebra)->dim() == 3);
}

TEST_CASE("Hattori-Stallings trace") {
  Rng rng(14);
  for (const char* name : {"PathA2", "GrpF3S3", "Sweedler", "Prod2"}) {
    const Workspace& ws = example(name);
    auto space = hh0(ws.algebra);
    for (const auto& e : ws.algebra->idempotents()) {
      ProjectiveModule p = projective(ws.algebra, e);
      CHECK(hs_trace(space, identity_map(p.module)) == hh0_class(space, e));
      CHECK(hs_trace(space, zero_map(p.module, p.module)).coords.is_zero());
    }
    auto projs = catalog_projectives(ws);
    for (const auto& p : projs)
      for (const auto& q : projs)
        for (int t = 0; t < 5; ++t) {
          auto f = random_map(hom_space(p.module, q.module), p.module, q.module, rng);
          auto g = random_map(hom_space(q.module, p.module), q.module, p.module, rng);
          CHECK(hs_trace(space, compose(g, f)) == hs_trace(space, compose(f, g)));
        }
  }
  CHECK(kind_of([] {
          const Workspace& ws = example("GrpF2C2");
          hs_trace(hh0(ws.algebra), identity_map(ws.modules[0]));
        }) == ErrorKind::NotProjective);
}

TEST_CASE("dual bases over F2[C2]") {
  const Workspace& ws = example("GrpF2C2");
  FrobStructure fs = frob("GrpF2C2");
  const Field& f = ws.algebra->field();
  ModulePtr a = regular_module(ws.algebra);
  // End(A) is right multiplication; 1 and y = 1 + g.
  ModuleMap one{a, a, Matrix::identity(f, 2)};
  ModuleMap y{a, a, ws.algebra->right_mult(Matrix::column(f, {1, 1}))};
  CHECK(y.is_intertwiner());
  std::vector<ModuleMap> basis{one, y};
  CHECK(trace_gram(fs, a, basis, basis) == Matrix::from_rows(f, {{1, 1}, {1, 0}}));
  DualBasisPair d = dual_bases(fs, a, a, basis, basis);
  REQUIRE(d.forward.size() == 2);
  CHECK(d.forward[0] == y);
  CHECK(d.forward[1] == one + y);
  CHECK(trace_gram(fs, a, d.forward, d.backward) == Matrix::identity(f, 2));
  CHECK(handle_element(d).is_zero());
  CHECK(handle_element(fs, a, a).is_zero());
  CHECK(modified_trace(fs, handle_element(d)).is_zero());
}

TEST_CASE("dual bases: degenerate and empty cases") {
  const Workspace& path = example("GrpF2C2");
  FrobStructure fs = frob("GrpF2C2");
  ModulePtr a = regular_module(path.algebra);
  ModuleMap one = identity_map(a);
  CHECK(kind_of([&] { dual_bases(fs, a, a, {one, one}, {one, one}); }) ==
        ErrorKind::DegenerateGram);

  const Workspace& prod = example("Prod2");
  FrobStructure fp = frob("Prod2");
  auto projs = catalog_projectives(prod);
  REQUIRE(projs.size() == 2);
  DualBasisPair d = dual_bases(fp, projs[0].module, projs[1].module);
  CHECK(d.forward.empty());
  CHECK(d.backward.empty());
  CHECK(handle_element(d).is_zero());
}

TEST_CASE("handle elements") {
  for (const char* name : kFrob) {
    const Workspace& ws = example(name);
    FrobStructure fs = frob(name);
    auto projs = catalog_projectives(ws);
    auto c = cartan_matrix(ws.algebra);
    for (std::size_t i = 0; i < projs.size(); ++i)
      for (std::size_t j = 0; j < projs.size(); ++j) {
        CAPTURE(name);
        CAPTURE(i);
        CAPTURE(j);
        DualBasisPair d = dual_bases(fs, projs[i].module, projs[j].module);
        CHECK(trace_gram(fs, projs[i].module, d.forward, d.backward) ==
              Matrix::identity(ws.algebra->field(), d.forward.size()));
        ModuleMap xi = handle_element(d);
        CHECK(xi.is_intertwiner());
        CHECK(modified_trace(fs, xi) == Scalar(ws.algebra->field(), static_cast<long>(c[i][j])));
        for (const auto& z : hom_space(projs[i].module, projs[i].module))
          CHECK(compose(z, xi) == compose(xi, z));
        // id * id is the handle element.
        CHECK(star(d, identity_map(projs[i].module), identity_map(projs[j].module)) == xi);
      }
  }
}

TEST_CASE("Gram matrices transpose under swapping P and Q") {
  for (const char* name : {"GrpF3S3", "GrpF3C3", "Prod2"}) {
    const Workspace& ws = example(name);
    FrobStructure fs = frob(name);
    auto projs = catalog_projectives(ws);
    for (const auto& p : projs)
      for (const auto& q : projs) {
        auto pq = hom_space(p.module, q.module), qp = hom_space(q.module, p.module);
        // G(P,Q)_ij = t_P(b_i a_j) and G(Q,P)_ji = t_Q(a_j b_i).
        CHECK(trace_gram(fs, p.module, pq, qp) == trace_gram(fs, q.module, qp, pq).transpose());
      }
  }
}

TEST_CASE("star does not depend on the hom bases") {
  const Workspace& ws = example("GrpF3S3");
  FrobStructure fs = frob("GrpF3S3");
  auto projs = catalog_projectives(ws);
  Rng rng(41);
  for (const auto& p : projs)
    for (const auto& q : projs) {
      auto fwd = hom_space(p.module, q.module), bwd = hom_space(q.module, p.module);
      DualBasisPair d1 = dual_bases(fs, p.module, q.module);
      // A second basis choice: reversed and sheared.
      std::vector<ModuleMap> fwd2(fwd.rbegin(), fwd.rend()), bwd2(bwd.rbegin(), bwd.rend());
      for (std::size_t i = 1; i < fwd2.size(); ++i) fwd2[i] = fwd2[i] + fwd2[0];
      for (std::size_t i = 1; i < bwd2.size(); ++i) bwd2[i] = bwd2[i] + Scalar(p.module->field(), 2) * bwd2[0];
      DualBasisPair d2 = dual_bases(fs, p.module, q.module, fwd2, bwd2);
      for (int t = 0; t < 5; ++t) {
        auto f = random_map(hom_space(p.module, p.module), p.module, p.module, rng);
        auto g = random_map(hom_space(q.module, q.module), q.module, q.module, rng);
        CHECK(star(d1, f, g) == star(d2, f, g));
        CHECK(star(d1, f, g) == star(fs, f, g));
      }
    }
}

TEST_CASE("block diagonality on Prod2") {
  const Workspace& ws = example("Prod2");
  FrobStructure fs = frob("Prod2");
  auto projs = catalog_projectives(ws);
  auto space = hh0(ws.algebra);
  Rng rng(8);
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t j = 1 - i;
    for (int t = 0; t < 10; ++t) {
      auto f = random_map(hom_space(projs[i].module, projs[i].module), projs[i].module,
                          projs[i].module, rng);
      auto g = random_map(hom_space(projs[j].module, projs[j].module), projs[j].module,
                          projs[j].module, rng);
      CHECK(star(fs, f, g).is_zero());
    }
    HH0Class a = hs_trace(space, identity_map(projs[i].module));
    HH0Class b = hs_trace(space, identity_map(projs[j].module));
    CHECK(star(fs, a, b).coords.is_zero());
  }
}

TEST_CASE("class-level star and the trace field identity") {
  for (const char* name : kFrob) {
    const Workspace& ws = example(name);
    FrobStructure fs = frob(name);
    auto projs = catalog_projectives(ws);
    auto space = hh0(ws.algebra);
    auto c = cartan_matrix(ws.algebra);
    for (std::size_t i = 0; i < projs.size(); ++i)
      for (std::size_t j = 0; j < projs.size(); ++j) {
        HH0Class a = hs_trace(space, identity_map(projs[i].module));
        HH0Class b = hs_trace(space, identity_map(projs[j].module));
        CHECK(trace_of_class(fs, star(fs, a, b)) ==
              Scalar(ws.algebra->field(), static_cast<long>(c[i][j])));
        ModuleMap xi = handle_element(fs, projs[i].module, projs[j].module);
        CHECK(star(fs, a, b) == hs_trace(space, xi));
      }
  }
}

TEST_CASE("trace field suites") {
  for (const char* name : kFrob) {
    CAPTURE(name);
    VerificationReport r = verify_trace_field(frob(name), 7, 20);
    for (const auto& c : r.checks) {
      CAPTURE(c.check);
      CAPTURE(c.subject);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
  }
  Workspace t = taft3();
  CHECK(kind_of([&] { symmetric_frobenius(*t.hopf, *t.pivot, *t.frobenius); }) ==
        ErrorKind::NotUnimodular);
}
