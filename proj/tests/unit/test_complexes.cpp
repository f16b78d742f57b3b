#include <doctest.h>

#include "gcdim/workspace.hpp"
#include "support/generators.hpp"

using namespace gcdim;

namespace {

std::vector<std::size_t> homology_profile(const BoundedComplex& c, int from, int to) {
  std::vector<std::size_t> out;
  for (int n = from; n <= to; ++n) out.push_back(homology_dim(c, n));
  return out;
}

}  // namespace

TEST_CASE("shift moves homology and twists signs") {
  testgen::Gen gen(2);
  auto alg = testgen::algebras()[1];
  for (int t = 0; t < 10; ++t) {
    BoundedComplex c = gen.complex(alg.pa, -1, 2, 4);
    const int m = gen.uniform(-3, 3);
    BoundedComplex s = shift(c, m);
    CHECK(s.lo() == c.lo() - m);
    for (int n = c.lo() - 1; n <= c.hi() + 1; ++n) CHECK(homology_dim(s, n - m) == homology_dim(c, n));
    CHECK(shift(s, -m) == c);
    if (m % 2 != 0) CHECK(s.differential(c.lo() + 1 - m) == c.differential(c.lo() + 1).scaled(Scalar(-1)));
  }
}

TEST_CASE("cones") {
  testgen::Gen gen(4);
  for (const auto& alg : testgen::algebras()) {
    BoundedComplex c = gen.complex(alg.pa, 0, 2, 4);
    Cone id = cone(ChainMap::identity(c));
    CHECK(is_exact(id.complex));
    CHECK(is_quasi_isomorphism(ChainMap::identity(c)));
    CHECK_FALSE(is_exact(c) != (sia(c).acyclic()));
    // The zero map out of a shift of c: cone is c[1] + c.
    BoundedComplex z = BoundedComplex::zero(alg.pa.algebra);
    Cone from_zero = cone(ChainMap(z, c, {}));
    CHECK(homology_profile(from_zero.complex, -1, 3) == homology_profile(c, -1, 3));
  }
}

TEST_CASE("truncations keep homology on their side") {
  testgen::Gen gen(6);
  auto alg = testgen::algebras()[4];
  for (int t = 0; t < 10; ++t) {
    BoundedComplex c = gen.complex(alg.pa, -2, 2, 5);
    const int n = gen.uniform(-2, 2);
    BoundedComplex above = smart_truncate_above(c, n), below = smart_truncate_below(c, n);
    for (int k = -3; k <= 3; ++k) {
      CHECK(homology_dim(above, k) == (k <= n ? homology_dim(c, k) : 0));
      CHECK(homology_dim(below, k) == (k >= n ? homology_dim(c, k) : 0));
    }
    CHECK(truncate_above(c, n).hi() <= n);
    CHECK(truncate_below(c, n).lo() >= n);
  }
}

TEST_CASE("standard resolutions are free and quasi-isomorphic") {
  testgen::Gen gen(8);
  for (const auto& alg : testgen::algebras()) {
    BoundedComplex c = gen.complex(alg.pa, -1, 1, 4);
    StandardResolution r = standard_projective_resolution(c, c.lo() - 3);
    CHECK(r.p.is_free());
    SIA h = sia(c);
    if (!h.acyclic()) CHECK(r.p.hi() <= *h.s);
    for (int n = r.valid_from; n <= c.hi() + 1; ++n) CHECK(homology_dim(r.p, n) == homology_dim(c, n));
    if (r.complete) CHECK(is_quasi_isomorphism(r.qis));
  }
}

TEST_CASE("omega agrees with its bounded model") {
  testgen::Gen gen(10);
  for (const auto& alg : testgen::algebras()) {
    BoundedComplex c = gen.complex(alg.pa, -1, 1, 4);
    SIA h = sia(c);
    if (h.acyclic()) continue;
    StandardResolution r = standard_projective_resolution(c, *h.i - 4);
    FreeWindow w = omega(FreeWindow{r.p, r.valid_from});
    BoundedComplex model = omega_model(c);
    for (int n = w.valid_from; n <= *h.s + 2; ++n) CHECK(homology_dim(w.p, n) == homology_dim(model, n));
  }
}

TEST_CASE("trunk of a module in degree zero is the module") {
  testgen::Gen gen(12);
  for (const auto& alg : testgen::algebras()) {
    Module m = gen.module(alg.pa, 4);
    Trunk t = trunk(BoundedComplex::concentrated(m, 0));
    CHECK(t.b == 0);
    CHECK(t.i == 0);
    auto iso = find_isomorphism(t.t, m);
    CHECK((iso && iso->is_bijective()));
  }
}

TEST_CASE("total Hom computes Hom into a concentrated module") {
  Workspace ws = load_workspace(GCDIM_EXAMPLE_WORKSPACE);
  SemidualizingDatum d = make_semidualizing(ws.candidate("C2"), 1);
  const Module& c = d.c;
  BimoduleComplex cc = BimoduleComplex::concentrated(c, d.c_as_sop, 0);
  TotalHom h = total_hom_complex(BoundedComplex::concentrated(Module::free(ws.algebra, 2), 1), cc);
  CHECK(homology_dim(h.complex, -1) == 2 * c.dim());
  CHECK(homology_dim(h.complex, 0) == 0);
}

TEST_CASE("validating constructors reject bad data") {
  Workspace ws = load_workspace(GCDIM_EXAMPLE_WORKSPACE);
  const Module& p1 = ws.module("P1");
  const Module& p2 = ws.module("P2");
  const Field q = ws.field;
  // Not a module map: P2 -> P1 is zero.
  CHECK_THROWS_AS(BoundedComplex(ws.algebra, 0, {p2, p1}, {Matrix(q, 1, 2, {Scalar(1), Scalar(0)})}), InputError);
  // d o d != 0: P1 -> P2 -> P2 by the inclusion then the identity.
  Matrix inc(q, 2, 1, {Scalar(1), Scalar(0)});
  CHECK_THROWS_AS(BoundedComplex(ws.algebra, 0, {p1, p2, p2}, {inc, Matrix::identity(q, 2)}), InputError);
  // Wrong number of differentials.
  CHECK_THROWS_AS(BoundedComplex(ws.algebra, 0, {p1, p2}, {}), InputError);
  BoundedComplex c(ws.algebra, 0, {p1, p2}, {inc});
  // A chain map that does not commute with the differentials.
  CHECK_THROWS_AS(ChainMap(c, c, {{0, Matrix(q, 1, 1, {Scalar(1)})}}), InputError);
}
