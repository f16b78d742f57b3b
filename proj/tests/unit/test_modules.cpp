#include <doctest.h>

#include "gcdim/resolution.hpp"
#include "oracles/f2_bruteforce.hpp"
#include "oracles/fraction_free.hpp"
#include "support/generators.hpp"

using namespace gcdim;

namespace {

/// The linear system whose solutions are the endomorphisms of m, in the
/// oracle's own format: unknowns X (n x n, row-major), one block of rows
/// per action matrix for X*A - A*X.
oracle::RationalMatrix commutation_system(const Module& m) {
  const std::size_t n = m.dim();
  oracle::RationalMatrix rows;
  for (const auto& a : m.actions()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<oracle::Rational> row(n * n, 0);
        for (std::size_t k = 0; k < n; ++k) {
          row[i * n + k] += oracle::parse_rational(a(k, j).get_str());
          row[k * n + j] -= oracle::parse_rational(a(i, k).get_str());
        }
        rows.push_back(row);
      }
  }
  return rows;
}

}  // namespace

TEST_CASE("indecomposables of 1 -> 2") {
  auto a = testgen::a2();
  const auto& pa = a.pa;
  Module p1 = indecomposable_projective(pa.algebra, pa.idempotents[0]);
  Module p2 = indecomposable_projective(pa.algebra, pa.idempotents[1]);
  Module i1 = indecomposable_injective(pa.algebra, pa.idempotents[0]);
  Module i2 = indecomposable_injective(pa.algebra, pa.idempotents[1]);
  CHECK(p1.dim() == 1);
  CHECK(p2.dim() == 2);
  CHECK(i1.dim() == 2);
  CHECK(i2.dim() == 1);
  CHECK(find_isomorphism(p2, i1).has_value());
  CHECK(find_isomorphism(i2, simple_module(pa.algebra, 1)).has_value());
  CHECK(is_projective(p1));
  CHECK_FALSE(is_projective(i2));
  CHECK(projective_dimension(i2, 4) == std::optional<std::size_t>(1));
  CHECK(hom_dim(p1, p2) == 1);
  CHECK(hom_dim(p2, p1) == 0);
}

TEST_CASE("End(S1 + S1) has dimension 4 by the fraction-free oracle") {
  auto a = testgen::a2();
  Module s1 = simple_module(a.pa.algebra, 0);
  Module m = direct_sum(s1, s1);
  const std::size_t n = m.dim();
  const std::size_t oracle_dim = n * n - oracle::rank(commutation_system(m));
  CHECK(oracle_dim == 4);
  CHECK(hom_dim(m, m) == oracle_dim);
  CHECK(endomorphism_algebra(m).algebra->dim() == 4);
}

TEST_CASE("End dimensions agree with the oracle on random modules") {
  testgen::Gen gen(41);
  for (const auto& a : testgen::algebras()) {
    for (int t = 0; t < 5; ++t) {
      Module m = gen.module(a.pa, 6);
      CHECK(hom_dim(m, m) == m.dim() * m.dim() - oracle::rank(commutation_system(m)));
    }
  }
}

TEST_CASE("module constructions") {
  testgen::Gen gen(5);
  auto algs = testgen::algebras();
  for (const auto& a : algs) {
    Module m = gen.module(a.pa, 6), n = gen.module(a.pa, 6);
    DirectSum s = direct_sum(std::vector<Module>{m, n});
    CHECK(s.sum.dim() == m.dim() + n.dim());
    CHECK(s.projections[0].compose(s.inclusions[0]).matrix() == Matrix::identity(m.field(), m.dim()));
    CHECK(hom_dim(s.sum, n) == hom_dim(m, n) + hom_dim(n, n));
    ModuleHom f = gen.hom(m, n);
    Submodule k = kernel_of(f);
    Quotient c = cokernel_of(f);
    Image im = image_of(f);
    CHECK(k.module.dim() + im.module.dim() == m.dim());
    CHECK(c.module.dim() + im.module.dim() == n.dim());
    CHECK(f.compose(k.inclusion).matrix().is_zero());
    CHECK(c.projection.compose(f).matrix().is_zero());
    CHECK(im.inclusion.compose(im.corestriction).matrix() == f.matrix());
    for (const auto& h : hom_basis(m, n)) CHECK(intertwines(m, n, h.matrix()));
  }
}

TEST_CASE("validation rejects bad modules and homs") {
  auto a = testgen::a2();
  Field q = Field::rationals();
  std::vector<Matrix> wrong(3, Matrix::identity(q, 1));
  CHECK_THROWS_AS(Module(a.pa.algebra, wrong), InputError);
  Module p1 = indecomposable_projective(a.pa.algebra, a.pa.idempotents[0]);
  Module p2 = indecomposable_projective(a.pa.algebra, a.pa.idempotents[1]);
  CHECK_THROWS_AS(ModuleHom(p2, p1, Matrix(q, 1, 2, {Scalar(1), Scalar(1)})), InputError);
  CHECK_THROWS_AS(from_representation(a.pa.algebra, {1, 1}, {Matrix(q, 2, 1)}), InputError);
}

TEST_CASE("free resolutions are exact and Ext is independent of the cover") {
  testgen::Gen gen(9);
  for (const auto& a : testgen::algebras()) {
    for (int t = 0; t < 3; ++t) {
      Module m = gen.module(a.pa, 6);
      FreeResolution res = FreeResolution(m).extended(4);
      CHECK(res.augmentation().is_surjective());
      CHECK(res.augmentation().compose(res.differential(1)).matrix().is_zero());
      for (std::size_t k = 1; k + 1 <= res.length(); ++k) {
        const Matrix dk = res.differential(k).matrix(), dk1 = res.differential(k + 1).matrix();
        CHECK((dk * dk1).is_zero());
        CHECK(rank(dk1) == dk.cols() - rank(dk));
      }
      Module n = gen.module(a.pa, 6);
      FreeResolution padded = FreeResolution(m, 2).extended(4);
      CHECK(ext_profile(res, n, 3) == ext_profile(padded, n, 3));
      CHECK(ext_dim(m, n, 0) == hom_dim(m, n));
      // Dimension shifting along 0 -> syzygy -> P_0 -> m -> 0.
      CHECK(ext_dim(m, n, 2) == ext_dim(syzygy(m, 1), n, 1));
    }
  }
}

TEST_CASE("Ext over F2 matches the brute-force solver on small A2 modules") {
  const Field f2 = Field::prime(2);
  auto a = testgen::a2(f2);
  auto reps = oracle::all_reps(2);
  for (const auto& rm : reps) {
    for (const auto& rn : reps) {
      auto mk = [&](const oracle::F2Rep& r) {
        Matrix arrow(f2, std::size_t(r.d0), std::size_t(r.d1));
        for (int i = 0; i < r.d0; ++i)
          for (int j = 0; j < r.d1; ++j) arrow(i, j) = r.arrow[i][j];
        return from_representation(a.pa.algebra, {std::size_t(r.d0), std::size_t(r.d1)}, {arrow});
      };
      Module m = mk(rm), n = mk(rn);
      CHECK(hom_dim(m, n) == std::size_t(oracle::hom_dim(rm, rn)));
      CHECK(ext_dim(m, n, 1) == std::size_t(oracle::ext1_dim(rm, rn)));
    }
  }
}

TEST_CASE("Euler form on a hereditary algebra over Q") {
  // hom - ext1 = sum_v m_v n_v - sum_{a: u->v} m_v n_u for representations of
  // the linear quiver (arrow maps go from the space at v to the space at u).
  testgen::Gen gen(23);
  auto a3 = testgen::algebras()[1];
  for (int t = 0; t < 10; ++t) {
    Module m = gen.module(a3.pa, 6), n = gen.module(a3.pa, 6);
    auto dims = [&](const Module& x) {
      std::vector<long> d;
      for (const auto& e : a3.pa.idempotents) d.push_back(static_cast<long>(rank(x.action_of(e))));
      return d;
    };
    auto dm = dims(m), dn = dims(n);
    long euler = 0;
    for (std::size_t v = 0; v < 3; ++v) euler += dm[v] * dn[v];
    euler -= dm[1] * dn[0] + dm[2] * dn[1];
    auto ext = ext_profile(m, n, 2);
    CHECK(static_cast<long>(ext[0]) - static_cast<long>(ext[1]) == euler);
    CHECK(ext[2] == 0);
  }
}
