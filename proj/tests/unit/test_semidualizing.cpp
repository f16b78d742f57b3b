#include <doctest.h>

#include "gcdim/workspace.hpp"
#include "support/generators.hpp"

using namespace gcdim;

namespace {

struct Example {
  Workspace ws = load_workspace(GCDIM_EXAMPLE_WORKSPACE);
  SemidualizingDatum c1 = make_semidualizing(ws.candidate("C1"), 2);
  SemidualizingDatum c2 = make_semidualizing(ws.candidate("C2"), 2);
};

const Example& example() {
  static Example e;
  return e;
}

}  // namespace

TEST_CASE("candidate statuses on 1 -> 2") {
  const auto& e = example();
  CHECK(e.c1.verification.status == Status::verified_exact);
  CHECK(e.c2.verification.status == Status::verified_exact);
  CHECK(e.c2.verification.homothety_left_bijective);
  CHECK(e.c2.verification.homothety_right_bijective);
  SemidualizingDatum bad = make_semidualizing(e.ws.candidate("S1S1"), 2);
  CHECK(bad.verification.status == Status::refuted);
  CHECK(bad.s_op->dim() == 4);
  CHECK_FALSE(bad.verification.homothety_left_bijective);
}

TEST_CASE("candidates over a self-injective algebra are checked to the bound") {
  auto a = testgen::dual_numbers();
  SemidualizingDatum d = make_semidualizing(Module::regular(a.pa.algebra), 3);
  CHECK(d.verification.status != Status::refuted);
  CHECK(d.verification.ext_r_vanishing_checked_to >= 3);
  Module k = simple_module(a.pa.algebra, 0);
  CHECK(make_semidualizing(k, 3).verification.status == Status::refuted);
}

TEST_CASE("mirror swaps the two sides") {
  const auto& e = example();
  SemidualizingDatum m = mirror(e.c2);
  CHECK(m.c.dim() == e.c2.c.dim());
  CHECK(m.r_algebra->dim() == e.c2.s_op->dim());
  CHECK(m.verification.status == Status::verified_exact);
  SemidualizingDatum back = mirror(m);
  CHECK(back.c == e.c2.c);
  SemidualizingDatum bad = make_semidualizing(e.ws.candidate("S1S1"), 2);
  CHECK_THROWS_AS(mirror(bad), PreconditionError);
}

TEST_CASE("duals of free modules and functoriality of Hom(-, C)") {
  const auto& e = example();
  for (const auto* d : {&e.c1, &e.c2}) {
    CHECK(dualize(Module::regular(e.ws.algebra), *d).dim() == d->c.dim());
    CHECK(dualize(Module::free(e.ws.algebra, 2), *d).dim() == 2 * d->c.dim());
    CHECK(dualize(Module::zero(e.ws.algebra), *d).dim() == 0);
  }
  testgen::Gen gen(17);
  auto alg = testgen::algebras()[1];
  auto data = testgen::semidualizing_pool(alg.pa, 3);
  for (int t = 0; t < 8; ++t) {
    const auto& d = data[static_cast<std::size_t>(t) % data.size()];
    Module a = gen.module(alg.pa, 4), b = gen.module(alg.pa, 4), c = gen.module(alg.pa, 4);
    ModuleHom f = gen.hom(a, b), g = gen.hom(b, c);
    const Matrix lhs = dualize(g.compose(f), d).matrix();
    const Matrix rhs = dualize(f, d).compose(dualize(g, d)).matrix();
    CHECK(lhs == rhs);
    CHECK(dualize(ModuleHom::identity(a), d).matrix() == Matrix::identity(a.field(), dualize(a, d).dim()));
  }
}

TEST_CASE("reflexivity and G_C-dimension of small modules") {
  const auto& e = example();
  const Module& i2 = e.ws.module("I2");
  ReflexivityReport yes = is_reflexive(i2, e.c2, 2);
  CHECK(yes.verdict == Reflexivity::yes);
  REQUIRE(yes.biduality_bijective.has_value());
  CHECK(*yes.biduality_bijective);
  CHECK(is_reflexive(i2, e.c1, 2).verdict == Reflexivity::no);
  CHECK(biduality_map(e.ws.module("R"), e.c1).is_bijective());

  GcDimResult zero = gc_dim_module(Module::zero(e.ws.algebra), e.c1, 3);
  CHECK(zero.finite);
  CHECK(zero.value == 0);
  GcDimResult free = gc_dim_module(Module::free(e.ws.algebra, 2), e.c2, 3);
  CHECK(free.finite);
  CHECK(free.value == 0);
}

TEST_CASE("G_C-dimension drops by one along a syzygy") {
  testgen::Gen gen(29);
  for (const auto& alg : testgen::algebras()) {
    auto data = testgen::semidualizing_pool(alg.pa, default_ext_bound(alg.pa.algebra));
    for (int t = 0; t < 3; ++t) {
      const auto& d = data[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(data.size()) - 1))];
      Module m = gen.module(alg.pa, 4);
      GcDimResult whole = gc_dim_module(m, d, 3);
      if (!whole.finite) continue;
      GcDimResult next = gc_dim_module(syzygy(m, 1), d, 3);
      CAPTURE(alg.name);
      REQUIRE(next.finite);
      CHECK(next.value == (whole.value == 0 ? 0 : whole.value - 1));
    }
  }
}

TEST_CASE("cosyzygy sequences are short exact") {
  const auto& e = example();
  for (const auto* d : {&e.c1, &e.c2}) {
    for (const auto* name : {"R", "P1", "C2"}) {
      const Module& x = e.ws.module(name);
      if (is_reflexive(x, *d, 2).verdict != Reflexivity::yes) continue;
      Cosyzygy s = cosyzygy(x, *d, 2);
      CHECK(s.embedding.is_injective());
      CHECK(s.projection.is_surjective());
      CHECK(s.projection.compose(s.embedding).matrix().is_zero());
      CHECK(s.embedding.target().dim() == s.copies * d->c.dim());
      CHECK(x.dim() + s.cokernel.dim() == s.copies * d->c.dim());
    }
  }
}
