#include "gcdim/semidualizing.hpp"

#include <algorithm>

namespace gcdim {

const char* to_string(Status s) {
  switch (s) {
    case Status::verified_exact: return "verified_exact";
    case Status::verified_to_bound: return "verified_to_bound";
    case Status::refuted: return "refuted";
  }
  return "?";
}

const char* to_string(Side s) { return s == Side::r ? "R" : "S"; }

const char* to_string(Reflexivity r) {
  switch (r) {
    case Reflexivity::yes: return "yes";
    case Reflexivity::no: return "no";
    case Reflexivity::yes_to_bound: return "yes_to_bound";
  }
  return "?";
}

namespace {

std::optional<std::size_t> certified_gldim(const AlgebraPtr& a, std::size_t limit) {
  try {
    return global_dimension(a, limit);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

Matrix flat_columns(const Field& f, const std::vector<ModuleHom>& homs, std::size_t len) {
  std::vector<Vector> cols;
  cols.reserve(homs.size());
  for (const auto& h : homs) cols.push_back(h.matrix().entries());
  return Matrix::from_columns(f, len, cols);
}

/// Coordinates of the given matrices in a hom basis with flattened columns `flat`.
Matrix coordinates(const Matrix& flat, const std::vector<Matrix>& targets) {
  std::vector<Vector> cols;
  cols.reserve(targets.size());
  for (const auto& t : targets) cols.push_back(t.entries());
  auto x = solve(flat, Matrix::from_columns(flat.field(), flat.rows(), cols));
  if (!x) throw InternalError("map lies outside the hom space");
  return *x;
}

bool certified(const std::optional<std::size_t>& gl, std::size_t bound) { return gl && *gl <= bound; }

}  // namespace

std::size_t default_ext_bound(const AlgebraPtr& a) {
  auto gl = certified_gldim(a, 8);
  return std::max<std::size_t>(4, gl.value_or(0));
}

SemidualizingDatum make_semidualizing(const Module& c, std::size_t ext_bound) {
  if (c.dim() == 0) throw InputError("a semidualizing candidate must be nonzero");
  if (ext_bound == 0) throw InputError("ext bound must be at least 1");
  const AlgebraPtr& r = c.algebra();
  const Field& f = c.field();
  SemidualizingDatum d{r, c, nullptr, nullptr, c, {}, std::nullopt, std::nullopt, ext_bound, nullptr};
  EndomorphismAlgebra e = endomorphism_algebra(c);
  d.s_op = e.algebra;
  d.s_algebra = opposite(*e.algebra);
  d.c_as_sop = module_over_endomorphisms(c, e);
  d.r_op = opposite(*r);

  auto& v = d.verification;
  v.homothety_right_bijective = true;
  {
    std::vector<Vector> cols;
    for (const auto& a : c.actions()) cols.push_back(a.entries());
    bool injective = rank(Matrix::from_columns(f, c.dim() * c.dim(), cols)) == r->dim();
    v.homothety_left_bijective = injective && hom_dim(d.c_as_sop, d.c_as_sop) == r->dim();
  }
  auto ext_r = ext_profile(c, c, ext_bound);
  auto ext_s = ext_profile(d.c_as_sop, d.c_as_sop, ext_bound);
  for (std::size_t i = 1; i <= ext_bound; ++i) {
    if (ext_r[i] != 0) v.ext_failures.emplace_back(Side::r, i);
  }
  for (std::size_t i = 1; i <= ext_bound; ++i) {
    if (ext_s[i] != 0) v.ext_failures.emplace_back(Side::s, i);
  }
  v.ext_r_vanishing_checked_to = ext_bound;
  v.ext_s_vanishing_checked_to = ext_bound;

  const std::size_t limit = std::max<std::size_t>(ext_bound, 6);
  d.r_gldim = certified_gldim(r, limit);
  d.s_op_gldim = certified_gldim(d.s_op, limit);
  if (!v.homothety_left_bijective || !v.homothety_right_bijective || !v.ext_failures.empty()) {
    v.status = Status::refuted;
  } else if (certified(d.r_gldim, ext_bound) && certified(d.s_op_gldim, ext_bound)) {
    v.status = Status::verified_exact;
  } else {
    v.status = Status::verified_to_bound;
  }
  return d;
}

SemidualizingDatum mirror(const SemidualizingDatum& d) {
  if (!d.verification.homothety_left_bijective) {
    throw PreconditionError("mirror needs R to be the full endomorphism algebra of c over S^op");
  }
  SemidualizingDatum m{d.s_op, d.c_as_sop, d.r_op, d.r_algebra, d.c, {}, d.s_op_gldim, d.r_gldim,
                       d.ext_bound, d.s_algebra};
  const auto& v = d.verification;
  auto& w = m.verification;
  w.homothety_left_bijective = v.homothety_right_bijective;
  w.homothety_right_bijective = v.homothety_left_bijective;
  w.ext_r_vanishing_checked_to = v.ext_s_vanishing_checked_to;
  w.ext_s_vanishing_checked_to = v.ext_r_vanishing_checked_to;
  for (const auto& [side, i] : v.ext_failures) w.ext_failures.emplace_back(side == Side::r ? Side::s : Side::r, i);
  w.status = v.status;
  return m;
}

DualModule dual_of(const Module& m, const SemidualizingDatum& d) {
  if (!same_algebra(m.algebra(), d.r_algebra)) throw InputError("dualize: module is over a different algebra");
  auto basis = hom_basis(m, d.c);
  const std::size_t k = basis.size();
  if (k == 0) return {Module::zero(d.s_op), {}};
  const Field& f = m.field();
  Matrix flat = flat_columns(f, basis, d.c.dim() * m.dim());
  std::vector<Matrix> targets;
  const std::size_t ns = d.s_op->dim();
  targets.reserve(ns * k);
  for (std::size_t t = 0; t < ns; ++t) {
    for (const auto& phi : basis) targets.push_back(d.c_as_sop.action(t) * phi.matrix());
  }
  Matrix coords = coordinates(flat, targets);
  std::vector<Matrix> action;
  action.reserve(ns);
  for (std::size_t t = 0; t < ns; ++t) action.push_back(coords.submatrix(0, k, t * k, k));
  return {Module::trusted(d.s_op, k, std::move(action)), std::move(basis)};
}

Module dualize(const Module& m, const SemidualizingDatum& d) { return dual_of(m, d).module; }

ModuleHom dualize(const ModuleHom& f, const SemidualizingDatum& d) {
  return dualize(f, dual_of(f.target(), d), dual_of(f.source(), d), d);
}

ModuleHom dualize(const ModuleHom& f, const DualModule& src, const DualModule& tgt, const SemidualizingDatum& d) {
  Matrix mat(f.matrix().field(), tgt.basis.size(), src.basis.size());
  if (!src.basis.empty() && !tgt.basis.empty()) {
    std::vector<Matrix> targets;
    for (const auto& psi : src.basis) targets.push_back(psi.matrix() * f.matrix());
    mat = coordinates(flat_columns(f.matrix().field(), tgt.basis, d.c.dim() * f.source().dim()), targets);
  }
  return ModuleHom::trusted(src.module, tgt.module, std::move(mat));
}

ModuleHom biduality_map(const Module& m, const SemidualizingDatum& d) {
  DualModule first = dual_of(m, d);
  SemidualizingDatum md = mirror(d);
  DualModule second = dual_of(first.module, md);
  const Field& f = m.field();
  Matrix mat(f, second.basis.size(), m.dim());
  if (!second.basis.empty()) {
    const std::size_t k = first.basis.size();
    std::vector<Matrix> evals;
    evals.reserve(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
      Matrix ev(f, d.c.dim(), k);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t row = 0; row < d.c.dim(); ++row) ev(row, j) = first.basis[j].matrix()(row, r);
      }
      evals.push_back(std::move(ev));
    }
    mat = coordinates(flat_columns(f, second.basis, d.c.dim() * k), evals);
  }
  return ModuleHom::trusted(m, second.module, std::move(mat));
}

ReflexivityReport is_reflexive(const Module& m, const SemidualizingDatum& d, std::size_t ext_bound, bool stop_early) {
  if (!same_algebra(m.algebra(), d.r_algebra)) throw InputError("is_reflexive: module is over a different algebra");
  if (ext_bound == 0) throw InputError("ext bound must be at least 1");
  ReflexivityReport rep;
  rep.bound = ext_bound;
  const bool exact = certified(d.r_gldim, ext_bound) && certified(d.s_op_gldim, ext_bound);
  auto pass = [&] { rep.verdict = exact ? Reflexivity::yes : Reflexivity::yes_to_bound; };
  if (m.dim() == 0) {
    rep.ext_m.assign(ext_bound, 0);
    rep.ext_dual.assign(ext_bound, 0);
    rep.biduality_bijective = true;
    pass();
    return rep;
  }
  auto fail = [&](std::string why) {
    if (rep.reason.empty()) rep.reason = std::move(why);
    rep.verdict = Reflexivity::no;
  };
  auto ext_m = ext_profile(m, d.c, ext_bound);
  rep.ext_m.assign(ext_m.begin() + 1, ext_m.end());
  for (std::size_t i = 1; i <= ext_bound; ++i) {
    if (ext_m[i] != 0) {
      fail("Ext^" + std::to_string(i) + "(M, C) != 0");
      break;
    }
  }
  if (stop_early && rep.verdict == Reflexivity::no && !rep.reason.empty()) return rep;

  Module dual = dualize(m, d);
  if (dual.dim() == 0) {
    rep.ext_dual.assign(ext_bound, 0);
  } else {
    auto ext_d = ext_profile(dual, d.c_as_sop, ext_bound);
    rep.ext_dual.assign(ext_d.begin() + 1, ext_d.end());
    for (std::size_t i = 1; i <= ext_bound; ++i) {
      if (ext_d[i] != 0) {
        fail("Ext^" + std::to_string(i) + "(Hom(M, C), C) != 0");
        break;
      }
    }
  }
  if (stop_early && !rep.reason.empty()) return rep;

  ModuleHom bid = biduality_map(m, d);
  rep.biduality_bijective = bid.is_bijective();
  if (!*rep.biduality_bijective) fail("biduality map is not bijective");
  if (rep.reason.empty()) pass();
  return rep;
}

GcDimResult gc_dim_module(const Module& m, const SemidualizingDatum& d, std::size_t bound) {
  GcDimResult out;
  if (m.dim() == 0) {
    out.finite = true;
    out.exact = true;
    return out;
  }
  const std::size_t eb = d.ext_bound;
  for (std::size_t n = 0; n <= bound; ++n) {
    Module omega = syzygy(m, n);
    auto rep = is_reflexive(omega, d, eb, true);
    if (rep.verdict == Reflexivity::no) continue;
    out.finite = true;
    out.value = n;
    out.exact = rep.verdict == Reflexivity::yes;
    out.ext_profile = ext_profile(m, d.c, n + eb);
    std::size_t top = 0;
    for (std::size_t i = 1; i < out.ext_profile.size(); ++i) {
      if (out.ext_profile[i] != 0) top = i;
    }
    if (top != n) {
      throw InternalError("G_C-dimension " + std::to_string(n) + " disagrees with top nonvanishing Ext degree " +
                          std::to_string(top));
    }
    return out;
  }
  out.value = bound;
  return out;
}

Cosyzygy cosyzygy(const Module& x, const SemidualizingDatum& d, std::size_t ext_bound) {
  if (is_reflexive(x, d, ext_bound, true).verdict == Reflexivity::no) {
    throw PreconditionError("cosyzygy needs a C-reflexive module");
  }
  DualModule y = dual_of(x, d);
  FreeCover cover = free_cover(y.module);
  const std::size_t g = cover.generators.size();
  const Field& f = x.field();
  Module cg = power(d.c, g);
  Matrix emb(f, g * d.c.dim(), x.dim());
  for (std::size_t j = 0; j < g; ++j) {
    Matrix phi(f, d.c.dim(), x.dim());
    for (std::size_t t = 0; t < y.basis.size(); ++t) {
      const Scalar& coef = cover.generators[j][t];
      if (coef != 0) phi = phi + y.basis[t].matrix().scaled(coef);
    }
    emb.set_block(j * d.c.dim(), 0, phi);
  }
  ModuleHom embedding = ModuleHom::trusted(x, cg, std::move(emb));
  if (!embedding.is_injective()) throw InternalError("cosyzygy embedding is not injective");
  Quotient q = cokernel_of(embedding);
  return {embedding, q.module, q.projection, g};
}

}  // namespace gcdim
