#include <doctest.h>

#include "helpers.hpp"

using namespace tracelab;
using namespace testing;

namespace {

const char* const kHopf[] = {"Triv", "GrpF2C2", "GrpF3C3", "GrpF3S3", "Sweedler", "Prod2"};
const char* const kUnimodular[] = {"Triv", "GrpF2C2", "GrpF3C3", "GrpF3S3", "Prod2"};

ModuleMap random_end(const ModulePtr& m, Rng& rng) {
  return random_map(hom_space(m, m), m, m, rng);
}

}  // namespace

TEST_CASE("Hopf axioms") {
  for (const char* name : kHopf) {
    CAPTURE(name);
    CHECK(validate_hopf(*example(name).hopf).ok());
  }
  CHECK(validate_hopf(*taft3().hopf).ok());

  HopfData bad = *example("Sweedler").hopf;
  for (std::size_t r = 0; r < 4; ++r) bad.antipode(r, 2) = -bad.antipode(r, 2);
  ValidationReport v = validate_hopf(bad);
  CHECK(v.mentions("antipode_left", {2}));
  CHECK(v.mentions("antipode_right", {2}));
  CHECK_FALSE(v.mentions("antipode_left", {0}));
}

TEST_CASE("tensor products") {
  SUBCASE("unit law") {
    for (const char* name : kHopf) {
      const Workspace& ws = example(name);
      ModulePtr k = trivial_module(*ws.hopf);
      for (const auto& x : ws.modules) {
        ModulePtr kx = tensor_module(*ws.hopf, k, x), xk = tensor_module(*ws.hopf, x, k);
        CHECK(kx->dim() == x->dim());
        CHECK(validate_module(*kx).ok());
        CHECK(find_isomorphism(kx, x).has_value());
        CHECK(find_isomorphism(xk, x).has_value());
      }
    }
  }
  SUBCASE("Jordan(2) x Jordan(2) over F3[C3] has the regular module as a summand") {
    const Workspace& ws = example("GrpF3C3");
    ModulePtr j2 = module_named(ws, "J2");
    ModulePtr t = tensor_module(*ws.hopf, j2, j2);
    CHECK(t->dim() == 4);
    CHECK(validate_module(*t).ok());
    ModulePtr a = regular_module(ws.algebra);
    // A -> T -> A composing to the identity exhibits the summand.
    bool split = false;
    for (const auto& i : hom_space(a, t))
      for (const auto& p : hom_space(t, a))
        if (compose(p, i) == identity_map(a)) split = true;
    if (!split) {
      Rng rng(2);
      auto in = hom_space(a, t), out = hom_space(t, a);
      for (int k = 0; k < 200 && !split; ++k) {
        auto i = random_map(in, a, t, rng), p = random_map(out, t, a, rng);
        auto c = compose(p, i);
        split = inverse(c.matrix).has_value();
      }
    }
    CHECK(split);
    CHECK(kind_of([&] { split_projective(t); }) == ErrorKind::NotProjective);
  }
  SUBCASE("projectives form a tensor ideal") {
    for (const char* name : {"Sweedler", "GrpF3C3", "GrpF3S3"}) {
      const Workspace& ws = example(name);
      for (const auto& p : catalog_projectives(ws))
        for (const auto& x : ws.modules) {
          CAPTURE(name);
          CAPTURE(x->name());
          ModulePtr px = tensor_module(*ws.hopf, p.module, x);
          ProjectivePresentation pres = split_projective(px);
          CHECK(compose(pres.pi, pres.iota) == identity_map(px));
          CHECK_NOTHROW(split_projective(tensor_module(*ws.hopf, x, p.module)));
        }
    }
  }
  SUBCASE("tensor of maps is an intertwiner and functorial") {
    const Workspace& ws = example("Sweedler");
    Rng rng(6);
    for (const auto& x : ws.modules)
      for (const auto& y : ws.modules) {
        auto f = random_end(x, rng), g = random_end(y, rng);
        auto f2 = random_end(x, rng), g2 = random_end(y, rng);
        ModuleMap fg = tensor_map(*ws.hopf, f, g);
        CHECK(fg.is_intertwiner());
        CHECK(compose(tensor_map(*ws.hopf, f2, g2), fg).matrix ==
              tensor_map(*ws.hopf, compose(f2, f), compose(g2, g)).matrix);
      }
  }
  SUBCASE("mismatched algebras") {
    CHECK(kind_of([] {
            tensor_module(*example("GrpF2C2").hopf, example("GrpF3C3").modules[0],
                          example("GrpF3C3").modules[0]);
          }) == ErrorKind::HopfMismatch);
  }
}

TEST_CASE("duals satisfy the zigzag identities") {
  for (const char* name : kHopf) {
    const Workspace& ws = example(name);
    for (const auto& x : ws.modules)
      for (Side side : {Side::Left, Side::Right}) {
        CAPTURE(name);
        CAPTURE(x->name());
        DualData d = dual_module(*ws.hopf, x, side);
        CHECK(validate_module(*d.dual).ok());
        CHECK(validate_duality(*ws.hopf, d).ok());
      }
  }
  const Workspace& ws = example("GrpF3S3");
  DualData d = dual_module(*ws.hopf, ws.modules[0], Side::Left);
  CHECK(d.dual->action(1) == Matrix::identity(ws.algebra->field(), 1));
  CHECK(d.ev.matrix == Matrix::identity(ws.algebra->field(), 1));
  CHECK(d.coev.matrix == Matrix::identity(ws.algebra->field(), 1));

  HopfData singular = *example("GrpF2C2").hopf;
  singular.antipode = Matrix(singular.antipode.field(), 2, 2);
  CHECK(kind_of([&] { dual_module(singular, example("GrpF2C2").modules[0], Side::Right); }) ==
        ErrorKind::AntipodeNotInvertible);
}

TEST_CASE("distinguished object") {
  SUBCASE("Sweedler") {
    const Workspace& ws = example("Sweedler");
    const Field& q = ws.algebra->field();
    DistinguishedObject d = distinguished_object(*ws.hopf);
    // Basis order 1, g, x, gx; the integral is proportional to x + gx.
    CHECK(rank(hstack({d.integral, Matrix::column(q, {0, 0, 1, 1})}, q, 4)) == 1);
    CHECK(d.modular_character == Matrix::from_rows(q, {{1, -1, 0, 0}}));
    CHECK_FALSE(d.unimodular(ws.hopf->counit));
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(ws.algebra->left_mult(i) * d.integral == ws.hopf->counit(0, i) * d.integral);
    NakayamaImage nk = nakayama_object(trivial_module(*ws.hopf));
    CHECK(find_isomorphism(nk.module, d.inverse_module).has_value());
  }
  SUBCASE("group algebras are unimodular") {
    for (const char* name : {"GrpF2C2", "GrpF3C3", "GrpF3S3", "Prod2"}) {
      const Workspace& ws = example(name);
      DistinguishedObject d = distinguished_object(*ws.hopf);
      CHECK(d.unimodular(ws.hopf->counit));
      CHECK(find_isomorphism(d.module, trivial_module(*ws.hopf)).has_value());
    }
  }
  SUBCASE("Taft n=3 separates D from its inverse") {
    Workspace t = taft3();
    DistinguishedObject d = distinguished_object(*t.hopf);
    CHECK_FALSE(d.modular_character == d.character_inverse);
    NakayamaImage nk = nakayama_object(trivial_module(*t.hopf));
    CHECK(find_isomorphism(nk.module, d.inverse_module).has_value());
    CHECK_FALSE(find_isomorphism(nk.module, d.module).has_value());
  }
}

TEST_CASE("symmetric Frobenius structure: error order") {
  const Workspace& s3 = example("GrpF3S3");
  const Field& f3 = s3.algebra->field();
  CHECK_NOTHROW(frob("GrpF2C2"));
  CHECK_NOTHROW(frob("GrpF3S3"));
  CHECK(kind_of([] { frob("Sweedler"); }) == ErrorKind::NotUnimodular);
  const Workspace& sw = example("Sweedler");
  // The unit is not a pivot for Sweedler, and NotPivotal is reported first.
  CHECK(kind_of([&] { symmetric_frobenius(*sw.hopf, sw.algebra->unit(), *sw.frobenius); }) ==
        ErrorKind::NotPivotal);
  CHECK(kind_of([&] { symmetric_frobenius(*s3.hopf, Matrix(f3, 6, 1), *s3.frobenius); }) ==
        ErrorKind::NotPivotal);
  CHECK(kind_of([&] {
          symmetric_frobenius(*s3.hopf, *s3.pivot, Matrix::column(f3, {0, 1, 0, 0, 0, 0}));
        }) == ErrorKind::NotSymmetric);
  CHECK(kind_of([&] { symmetric_frobenius(*s3.hopf, *s3.pivot, Matrix(f3, 6, 1)); }) ==
        ErrorKind::Degenerate);
  // Symmetric but degenerate: the class sum of the transpositions.
  CHECK(kind_of([&] {
          symmetric_frobenius(*s3.hopf, *s3.pivot, Matrix::column(f3, {0, 0, 0, 1, 1, 1}));
        }) == ErrorKind::Degenerate);
  CHECK(pivotal_structure(*sw.hopf, Matrix::column(sw.algebra->field(), {0, 1, 0, 0}))
            .pivot_inverse == Matrix::column(sw.algebra->field(), {0, 1, 0, 0}));
}

TEST_CASE("modified trace") {
  {
    const Workspace& ws = example("GrpF2C2");
    FrobStructure fs = frob("GrpF2C2");
    ModulePtr a = regular_module(ws.algebra);
    CHECK(modified_trace(fs, identity_map(a)).is_one());
    CHECK(modified_trace(fs, zero_map(a, a)).is_zero());
    CHECK(kind_of([&] { modified_trace(fs, identity_map(ws.modules[0])); }) ==
          ErrorKind::NotProjective);
  }
  {
    const Workspace& ws = example("GrpF3S3");
    FrobStructure fs = frob("GrpF3S3");
    auto projs = catalog_projectives(ws);
    // lambda(e+) = lambda(2 + 2s) = 2.
    CHECK(modified_trace(fs, identity_map(projs[0].module)) == Scalar(ws.algebra->field(), 2));
    CHECK(modified_trace(fs, identity_map(projs[1].module)) == Scalar(ws.algebra->field(), 2));
  }
}

TEST_CASE("modified trace: presentation independence and cyclicity") {
  Rng rng(17);
  for (const char* name : kUnimodular) {
    const Workspace& ws = example(name);
    FrobStructure fs = frob(name);
    auto projs = catalog_projectives(ws);
    std::vector<ModulePtr> ps;
    for (const auto& p : projs) ps.push_back(p.module);
    ps.push_back(regular_module(ws.algebra));
    for (const auto& p : ps) {
      ProjectivePresentation basis_cover = split_projective(p);
      ProjectivePresentation small_cover = split_projective(p, Matrix::identity(p->field(), p->dim()));
      for (int t = 0; t < 5; ++t) {
        ModuleMap f = random_end(p, rng);
        CHECK(modified_trace(fs, basis_cover, f) == modified_trace(fs, small_cover, f));
        CHECK(modified_trace(fs, f) == modified_trace(fs, basis_cover, f));
      }
      for (const auto& q : ps)
        for (int t = 0; t < 5; ++t) {
          auto f = random_map(hom_space(p, q), p, q, rng);
          auto g = random_map(hom_space(q, p), q, p, rng);
          CHECK(modified_trace(fs, compose(g, f)) == modified_trace(fs, compose(f, g)));
        }
    }
  }
}

TEST_CASE("partial trace") {
  SUBCASE("trivial X gives back f") {
    const Workspace& ws = example("GrpF3S3");
    FrobStructure fs = frob("GrpF3S3");
    ModulePtr k = ws.modules[0];
    Rng rng(3);
    for (const auto& p : catalog_projectives(ws)) {
      ModulePtr pk = tensor_module(*ws.hopf, p.module, k);
      ModuleMap f = random_end(pk, rng);
      ModuleMap tr = partial_trace(fs, p.module, k, f);
      CHECK(tr.matrix == f.matrix);
    }
  }
  SUBCASE("identity") {
    const Workspace& ws = example("GrpF3C3");
    FrobStructure fs = frob("GrpF3C3");
    ModulePtr a = regular_module(ws.algebra), j2 = module_named(ws, "J2");
    ModulePtr aj = tensor_module(*ws.hopf, a, j2);
    ModuleMap tr = partial_trace(fs, a, j2, identity_map(aj));
    // Pivot 1: the quantum dimension of J2 is 2.
    CHECK(tr.matrix == Matrix::identity(a->field(), 3) * Scalar(a->field(), 2));
    CHECK(modified_trace(fs, tr) == modified_trace(fs, identity_map(aj)));
    CHECK(kind_of([&] { partial_trace(fs, a, j2, identity_map(a)); }) == ErrorKind::ShapeMismatch);
  }
  SUBCASE("suites") {
    for (const char* name : kUnimodular) {
      const Workspace& ws = example(name);
      FrobStructure fs = frob(name);
      for (const auto& p : catalog_projectives(ws))
        for (const auto& x : ws.modules) {
          CAPTURE(name);
          CAPTURE(x->name());
          CHECK(verify_partial_trace(fs, p.module, x, 5, 11).ok());
        }
      for (const auto& x : ws.modules)
        for (const auto& y : ws.modules) CHECK(verify_pivot_monoidal(fs, x, y).ok());
    }
  }
}
