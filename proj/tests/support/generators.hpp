#pragma once

// Seeded random algebras, modules and complexes for property tests.

#include <random>
#include <string>
#include <vector>

#include "gcdim/gcdim_complex.hpp"

namespace testgen {

using namespace gcdim;

struct NamedAlgebra {
  std::string name;
  PathAlgebra pa;
  bool hereditary = false;
};

inline Quiver linear_quiver(std::size_t n) {
  Quiver q;
  q.vertices = n;
  for (std::size_t v = 0; v + 1 < n; ++v) q.arrows.push_back({v, v + 1, "a" + std::to_string(v)});
  return q;
}

inline NamedAlgebra a2(Field f = Field::rationals()) { return {"A2", build_path_algebra(linear_quiver(2), f), true}; }

inline NamedAlgebra dual_numbers(Field f = Field::rationals()) {
  Quiver q;
  q.vertices = 1;
  q.arrows = {{0, 0, "x"}};
  q.nilpotency_bound = 2;
  return {"k[x]/(x^2)", build_path_algebra(q, f), false};
}

/// Hereditary algebras and k[x]/(x^2)-type algebras of dimension at most 6.
inline std::vector<NamedAlgebra> algebras(Field f = Field::rationals()) {
  std::vector<NamedAlgebra> out;
  out.push_back(a2(f));
  out.push_back({"A3", build_path_algebra(linear_quiver(3), f), true});
  {
    Quiver q;
    q.vertices = 3;
    q.arrows = {{0, 1, "a"}, {2, 1, "b"}};
    out.push_back({"A3 sink", build_path_algebra(q, f), true});
  }
  out.push_back(dual_numbers(f));
  {
    Quiver q = linear_quiver(3);
    q.relations = {{PathTerm{Scalar(1), {0, 1}}}};
    q.nilpotency_bound = 3;
    out.push_back({"A3/rad^2", build_path_algebra(q, f), false});
  }
  {
    Quiver q;
    q.vertices = 2;
    q.arrows = {{0, 0, "x"}, {0, 1, "a"}};
    q.relations = {{PathTerm{Scalar(1), {0, 0}}}};
    q.nilpotency_bound = 3;
    out.push_back({"loop x^2 + arrow", build_path_algebra(q, f), false});
  }
  return out;
}

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937& engine() { return rng_; }

  Scalar scalar(const Field& f) { return f.from_int(uniform(-2, 2)); }

  /// Random combination of a hom basis; the zero map when Hom vanishes.
  ModuleHom hom(const Module& a, const Module& b) {
    auto basis = hom_basis(a, b);
    Matrix m(a.field(), b.dim(), a.dim());
    for (const auto& h : basis) m = m + h.matrix().scaled(scalar(a.field()));
    return ModuleHom::trusted(a, b, m);
  }

  /// Direct sum of indecomposable projectives (or injectives) of total
  /// dimension at most max_dim; possibly zero.
  Module sum_of_indecomposables(const PathAlgebra& pa, std::size_t max_dim, bool injective) {
    std::vector<Module> parts;
    std::size_t total = 0;
    const std::size_t n = pa.idempotents.size();
    for (int tries = 0; tries < 4; ++tries) {
      const std::size_t v = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1));
      Module m = injective ? indecomposable_injective(pa.algebra, pa.idempotents[v])
                           : indecomposable_projective(pa.algebra, pa.idempotents[v]);
      if (total + m.dim() > max_dim) continue;
      total += m.dim();
      parts.push_back(m);
      if (coin()) break;
    }
    if (parts.empty()) return Module::zero(pa.algebra);
    return direct_sum(parts).sum;
  }

  /// Cokernel of a random map between projectives, or kernel of one between
  /// injectives.
  Module module(const PathAlgebra& pa, std::size_t max_dim) {
    for (;;) {
      const bool inj = coin();
      Module target = sum_of_indecomposables(pa, max_dim, inj);
      Module source = sum_of_indecomposables(pa, max_dim, inj);
      Module m = inj ? kernel_of(hom(target, source)).module : cokernel_of(hom(source, target)).module;
      if (m.dim() > 0 && m.dim() <= max_dim) return m;
    }
  }

  /// Bounded complex with components in degrees lo..hi and d o d == 0.
  BoundedComplex complex(const PathAlgebra& pa, int lo, int hi, std::size_t max_dim) {
    std::vector<Module> comps;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
      Module m = module(pa, max_dim);
      if (!comps.empty()) diffs.push_back(differential(comps.back(), diffs.empty() ? nullptr : &diffs.back(), m));
      comps.push_back(m);
    }
    return BoundedComplex(pa.algebra, lo, std::move(comps), std::move(diffs));
  }

  /// Bounded complex of free modules with components in degrees lo..hi.
  BoundedComplex free_complex(const PathAlgebra& pa, int lo, int hi, std::size_t max_rank) {
    std::vector<Module> comps;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
      Module m = Module::free(pa.algebra, static_cast<std::size_t>(uniform(1, static_cast<int>(max_rank))));
      if (!comps.empty()) diffs.push_back(differential(comps.back(), diffs.empty() ? nullptr : &diffs.back(), m));
      comps.push_back(m);
    }
    return BoundedComplex(pa.algebra, lo, std::move(comps), std::move(diffs));
  }

 private:
  /// A random map from `from` to `to` vanishing on the image of `incoming`.
  Matrix differential(const Module& from, const Matrix* incoming, const Module& to) {
    if (!incoming) return hom(from, to).matrix();
    Quotient q = quotient(from, *incoming);
    return hom(q.module, to).matrix() * q.projection.matrix();
  }

  std::mt19937 rng_;
};

/// Semidualizing data over an algebra from a fixed pool of candidates: the
/// regular module, the injective cogenerator and sums of projectives and
/// injectives covering every vertex. Refuted candidates are dropped.
inline std::vector<SemidualizingDatum> semidualizing_pool(const PathAlgebra& pa, std::size_t ext_bound) {
  const AlgebraPtr& a = pa.algebra;
  std::vector<Module> cands{Module::regular(a), dual_of_right_regular(a)};
  const std::size_t n = pa.idempotents.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<Module> parts;
    for (std::size_t v = 0; v < n; ++v) {
      parts.push_back(((mask >> v) & 1) ? indecomposable_projective(a, pa.idempotents[v])
                                        : indecomposable_injective(a, pa.idempotents[v]));
    }
    cands.push_back(direct_sum(parts).sum);
  }
  std::vector<SemidualizingDatum> out;
  for (const auto& c : cands) {
    SemidualizingDatum d = make_semidualizing(c, ext_bound);
    if (d.verification.status == Status::refuted) continue;
    bool seen = false;
    for (const auto& e : out) seen = seen || find_isomorphism(e.c, d.c).has_value();
    if (!seen) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace testgen
