#include "gcdim/gcdim_complex.hpp"

#include <algorithm>

namespace gcdim {

BimoduleComplex datum_complex(const SemidualizingDatum& d) { return BimoduleComplex::concentrated(d.c, d.c_as_sop, 0); }

namespace {

struct Analysis {
  GcDimComplexResult result;
  std::optional<StandardResolution> res;
  std::optional<TotalHom> hom;
};

Analysis analyse(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound) {
  if (!same_algebra(m.algebra(), d.r_algebra)) throw InputError("complex is over a different algebra");
  Analysis a;
  auto& r = a.result;
  r.bound = bound;
  SIA h = sia(m);
  if (h.acyclic()) {
    r.degenerate = r.member = r.exact = true;
    return a;
  }
  const int i = *h.i;
  a.res = standard_projective_resolution(m, i - static_cast<int>(bound) - 2);
  Module t = cokernel_of(a.res->p.differential_hom(i)).module;
  GcDimResult gt = gc_dim_module(t, d, bound);
  r.trunk = t;
  r.i_inf = i;
  if (!gt.finite) return a;
  r.member = true;
  r.exact = gt.exact;
  r.trunk_value = gt.value;
  const auto& res = *a.res;
  a.hom = total_hom_complex(res.p, datum_complex(d), res.complete ? std::nullopt : std::optional<int>(res.valid_from));
  const BoundedComplex& hc = a.hom->complex;
  SIA sh = sia(hc, hc.lo(), a.hom->valid_to.value_or(hc.hi()));
  if (sh.acyclic()) throw InternalError("Hom into c vanishes on a nonzero member");
  r.s_rhom = *sh.s;
  r.value = *sh.s;
  if (*r.value != static_cast<int>(gt.value) - i) {
    throw InternalError("the two routes to the G_C-dimension of a complex disagree");
  }
  if (*r.value + i < 0) throw InternalError("G_C-dimension of a complex fell below -inf(m)");
  return a;
}

BoundedComplex dual_from(const Analysis& a, const SemidualizingDatum& d) {
  if (a.result.degenerate) return BoundedComplex::zero(d.s_op);
  return smart_truncate_above(a.hom->complex, *a.result.value).trimmed();
}

ChainMap zero_map(const BoundedComplex& x, const BoundedComplex& y) { return ChainMap::trusted(x, y, {}); }

}  // namespace

GcDimComplexResult gc_dim_complex(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound) {
  return analyse(m, d, bound).result;
}

GcDimComplexResult in_rrc(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound) {
  return gc_dim_complex(m, d, bound);
}

OmegaStep omega_step_check(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound) {
  GcDimComplexResult whole = gc_dim_complex(m, d, bound);
  BoundedComplex om = omega_model(m);
  GcDimComplexResult part = gc_dim_complex(om, d, bound);
  if (whole.member && part.member && whole.value && part.value && *whole.value != *part.value + 1) {
    throw InternalError("G_C-dimension does not drop by one under omega");
  }
  return {std::move(whole), std::move(part), std::move(om)};
}

ReflexiveResolution reflexive_resolution(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound) {
  Analysis a = analyse(m, d, bound);
  if (a.result.degenerate) {
    BoundedComplex z = BoundedComplex::zero(m.algebra());
    return {z, zero_map(z, m)};
  }
  if (!a.result.member) throw PreconditionError("reflexive resolution of a complex outside the Auslander class");
  const int i = *a.result.i_inf;
  const int n = static_cast<int>(*a.result.trunk_value);
  BoundedComplex mt = m.trimmed();
  if (mt.lo() == mt.hi() && n == 0) return {mt, ChainMap::identity(mt)};
  const int low = std::min(i - n, mt.lo() - 1);
  StandardResolution res = a.res->p.lo() <= low - 1 || a.res->complete ? *a.res
                                                                       : standard_projective_resolution(m, low - 1);
  BoundedComplex x = smart_truncate_below(res.p, low);
  std::map<int, Matrix> maps;
  for (int k = x.lo(); k <= x.hi(); ++k) {
    maps.emplace(k, k == low ? Matrix(m.field(), m.dim_at(k), x.dim_at(k)) : res.qis.at(k));
  }
  return {x, ChainMap::trusted(x, m, std::move(maps))};
}

BoundedComplex naive_dual(const BoundedComplex& x, const SemidualizingDatum& d) {
  if (!same_algebra(x.algebra(), d.r_algebra)) throw InputError("dualize: complex is over a different algebra");
  if (x.empty()) return BoundedComplex::zero(d.s_op);
  std::vector<DualModule> duals;
  for (int k = x.lo(); k <= x.hi(); ++k) duals.push_back(dual_of(x.at(k), d));
  auto dual_at = [&](int k) -> const DualModule& { return duals[static_cast<std::size_t>(k - x.lo())]; };
  std::vector<Module> comps;
  std::vector<Matrix> diffs;
  for (int n = -x.hi(); n <= -x.lo(); ++n) {
    comps.push_back(dual_at(-n).module);
    if (n > -x.hi()) {
      // d^n: Hom(x^{1-n}, c) -> Hom(x^{-n}, c)
      ModuleHom dh = dualize(x.differential_hom(1 - n), dual_at(1 - n), dual_at(-n), d);
      const int sign = (n - 1) % 2 == 0 ? -1 : 1;
      diffs.push_back(dh.matrix().scaled(sign));
    }
  }
  return BoundedComplex::trusted(d.s_op, -x.hi(), std::move(comps), std::move(diffs));
}

BoundedComplex dual_complex(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound) {
  Analysis a = analyse(m, d, bound);
  if (!a.result.member) throw PreconditionError("dual of a complex outside the Auslander class");
  return dual_from(a, d);
}

DualityRoundTrip dual_round_trip(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound) {
  DualityRoundTrip out{dual_complex(m, d, bound), BoundedComplex::zero(m.algebra()), false, {}, false};
  SemidualizingDatum md = mirror(d);
  Analysis b = analyse(out.dual, md, bound);
  out.dual_member = b.result.member;
  if (!out.dual_member) return out;
  out.double_dual = dual_from(b, md);
  const BoundedComplex& nn = out.double_dual;
  int lo = std::min(m.lo(), nn.lo()), hi = std::max(m.hi(), nn.hi());
  out.ok = true;
  for (int n = lo; n <= hi; ++n) {
    std::size_t a = homology_dim(m, n), c = homology_dim(nn, n);
    if (a == 0 && c == 0) continue;
    out.homology.emplace(n, std::make_pair(a, c));
    if (a != c) out.ok = false;
  }
  return out;
}

Approximation approximate(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound) {
  Analysis a = analyse(m, d, bound);
  if (!a.result.member) throw PreconditionError("approximation of a complex outside the Auslander class");
  const AlgebraPtr& r = m.algebra();
  if (a.result.degenerate) {
    BoundedComplex z = BoundedComplex::zero(r);
    return {z, z, Module::zero(r), 0, z, zero_map(z, z), zero_map(z, z), zero_map(z, z), zero_map(z, z), {}};
  }
  BoundedComplex n = dual_from(a, d);
  SemidualizingDatum md = mirror(d);
  Analysis b = analyse(n, md, bound);
  if (!b.result.member) throw InternalError("the dual of a member left the Auslander class");
  const int k = *b.result.i_inf - static_cast<int>(*b.result.trunk_value);
  const BoundedComplex qs = smart_truncate_below(b.res->p, k);
  BoundedComplex e = naive_dual(qs, md);
  const int xd = -k;

  Approximation out{BoundedComplex::zero(r), BoundedComplex::zero(r), Module::zero(r), xd, e,
                    zero_map(e, e), zero_map(e, e), zero_map(e, e), zero_map(e, e), {}};
  out.x_module = e.at(xd);
  out.x = BoundedComplex::concentrated(out.x_module, xd);
  BoundedComplex g = truncate_above(e, xd - 1);
  out.f = shift(g, -1);
  out.f_to_x = ChainMap::trusted(out.f, out.x, {{xd, e.differential(xd)}});
  out.x_to_middle = ChainMap::trusted(out.x, e, {{xd, Matrix::identity(e.field(), out.x_module.dim())}});
  std::map<int, Matrix> back;
  for (int j = g.lo(); j <= g.hi(); ++j) back.emplace(j, Matrix::identity(e.field(), g.dim_at(j)));
  out.middle_to_shifted_f = ChainMap::trusted(e, shift(out.f, 1), std::move(back));
  Cone cn = cone(out.f_to_x);
  std::map<int, Matrix> iso;
  for (int j = e.lo(); j <= e.hi(); ++j) iso.emplace(j, Matrix::identity(e.field(), e.dim_at(j)));
  out.cone_to_middle = ChainMap::trusted(cn.complex, e, std::move(iso));
  for (int j = out.f.lo(); j <= out.f.hi(); ++j) {
    const auto& fr = qs.at(-(j - 1)).free_rank();
    if (!fr) throw InternalError("approximation component is not a power of c");
    out.copies.emplace(j, *fr);
  }
  return out;
}

namespace {

HomothetyReport homothety(const BimoduleComplex& ccpx, std::size_t bound) {
  const BoundedComplex& left = ccpx.left();
  const BoundedComplex& right = ccpx.right();
  const AlgebraPtr& a = left.algebra();
  const AlgebraPtr& b = right.algebra();
  const Field& f = left.field();
  SIA h = sia(left);
  if (h.acyclic()) throw InputError("a semidualizing complex must have nonzero homology");
  StandardResolution res = standard_projective_resolution(left, left.lo() - static_cast<int>(bound) - 2);
  TotalHom tot = total_hom_complex(res.p, ccpx, res.complete ? std::nullopt : std::optional<int>(res.valid_from));
  const BoundedComplex& hc = tot.complex;
  HomothetyReport rep;
  rep.expected_dim = b->dim();
  const int to = tot.valid_to.value_or(std::max(hc.hi(), 0));
  rep.checked_to = to;
  rep.concentrated = true;
  for (int n = std::min(hc.lo(), 0); n <= to; ++n) {
    std::size_t dim = homology_dim(hc, n);
    if (dim != 0) rep.homology.emplace(n, dim);
    if ((n == 0 && dim != rep.expected_dim) || (n != 0 && dim != 0)) rep.concentrated = false;
  }
  // Homothety classes: b acting on the components of the comparison map P -> C.
  const std::size_t d0 = hc.dim_at(0);
  Matrix classes(f, d0, b->dim());
  if (d0 > 0) {
    std::size_t offset = 0;
    const Vector unit = a->unit();
    for (int i = res.p.lo(); i <= res.p.hi(); ++i) {
      const std::size_t g = *res.p.at(i).free_rank();
      const std::size_t cd = right.dim_at(i);
      if (g == 0 || cd == 0) continue;
      Matrix psi = res.qis.at(i);
      for (std::size_t j = 0; j < g; ++j) {
        Matrix gen(f, res.p.dim_at(i), 1);
        for (std::size_t u = 0; u < unit.size(); ++u) gen(j * a->dim() + u, 0) = unit[u];
        Matrix img = psi * gen;
        for (std::size_t t = 0; t < b->dim(); ++t) classes.set_block(offset + j * cd, t, right.at(i).action(t) * img);
      }
      offset += g * cd;
    }
  }
  if (!(hc.differential(1) * classes).is_zero()) throw InternalError("homothety classes are not cycles");
  Matrix boundaries = hc.differential(0);
  const std::size_t rb = rank(boundaries);
  rep.bijective = rep.homology.count(0) && rep.homology.at(0) == b->dim() &&
                  rank(boundaries.hstack(classes)) - rb == b->dim();
  std::optional<std::size_t> gl;
  try {
    gl = global_dimension(a, std::max<std::size_t>(bound, 6));
  } catch (const PreconditionError&) {
  }
  const int amp = left.hi() - left.lo();
  rep.exact = res.complete || (gl && static_cast<int>(*gl) + amp <= to);
  return rep;
}

}  // namespace

SemidualizingComplexDatum make_semidualizing_complex(const BimoduleComplex& ccpx, std::size_t bound) {
  SemidualizingComplexDatum out{ccpx.left().algebra(), ccpx.right().algebra(), ccpx, {}, {}, Status::refuted};
  out.left = homothety(ccpx, bound);
  out.right = homothety(ccpx.swapped(), bound);
  const bool ok = out.left.concentrated && out.left.bijective && out.right.concentrated && out.right.bijective;
  if (!ok) {
    out.status = Status::refuted;
  } else if (out.left.exact && out.right.exact) {
    out.status = Status::verified_exact;
  } else {
    out.status = Status::verified_to_bound;
  }
  return out;
}

}  // namespace gcdim
