#include "gcdim/complexes.hpp"

#include <algorithm>

namespace gcdim {

namespace {

void check_shapes(const AlgebraPtr& a, const std::vector<Module>& comps, const std::vector<Matrix>& diffs) {
  if (!a) throw InputError("complex without an algebra");
  if (comps.empty() ? !diffs.empty() : diffs.size() != comps.size() - 1) {
    throw InputError("a complex needs one differential between each pair of adjacent components");
  }
  for (const auto& m : comps) {
    if (!same_algebra(m.algebra(), a)) throw InputError("complex component over a different algebra");
  }
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    if (diffs[k].rows() != comps[k + 1].dim() || diffs[k].cols() != comps[k].dim()) {
      throw InputError("differential has wrong shape");
    }
  }
  for (std::size_t k = 0; k + 1 < diffs.size(); ++k) {
    if (!(diffs[k + 1] * diffs[k]).is_zero()) throw InputError("differentials do not compose to zero");
  }
}

Matrix zero_matrix(const Field& f, std::size_t r, std::size_t c) { return Matrix(f, r, c); }

}  // namespace

BoundedComplex::BoundedComplex(AlgebraPtr algebra, int lo, std::vector<Module> components,
                               std::vector<Matrix> differentials, Unchecked)
    : algebra_(std::move(algebra)),
      lo_(components.empty() ? 0 : lo),
      components_(std::move(components)),
      differentials_(std::move(differentials)),
      zero_(Module::zero(algebra_)) {
  check_shapes(algebra_, components_, differentials_);
}

BoundedComplex::BoundedComplex(AlgebraPtr algebra, int lo, std::vector<Module> components,
                               std::vector<Matrix> differentials)
    : BoundedComplex(std::move(algebra), lo, std::move(components), std::move(differentials), Unchecked{}) {
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    if (!intertwines(components_[k], components_[k + 1], differentials_[k])) {
      throw InputError("differential into degree " + std::to_string(lo_ + static_cast<int>(k) + 1) +
                       " is not a module map");
    }
  }
}

BoundedComplex BoundedComplex::trusted(AlgebraPtr algebra, int lo, std::vector<Module> components,
                                       std::vector<Matrix> differentials) {
  return BoundedComplex(std::move(algebra), lo, std::move(components), std::move(differentials), Unchecked{});
}

BoundedComplex BoundedComplex::zero(AlgebraPtr algebra) { return trusted(std::move(algebra), 0, {}, {}); }

BoundedComplex BoundedComplex::concentrated(const Module& m, int degree) {
  return trusted(m.algebra(), degree, {m}, {});
}

const Module& BoundedComplex::at(int n) const {
  if (n < lo_ || n > hi()) return zero_;
  return components_[static_cast<std::size_t>(n - lo_)];
}

Matrix BoundedComplex::differential(int n) const {
  if (n > lo_ && n <= hi()) return differentials_[static_cast<std::size_t>(n - lo_ - 1)];
  return zero_matrix(field(), dim_at(n), dim_at(n - 1));
}

ModuleHom BoundedComplex::differential_hom(int n) const {
  return ModuleHom::trusted(at(n - 1), at(n), differential(n));
}

bool BoundedComplex::is_free() const {
  return std::all_of(components_.begin(), components_.end(), [](const Module& m) { return m.free_rank().has_value(); });
}

BoundedComplex BoundedComplex::trimmed() const {
  int a = lo_, b = hi();
  while (a <= b && dim_at(a) == 0) ++a;
  while (b >= a && dim_at(b) == 0) --b;
  if (a > b) return zero(algebra_);
  std::vector<Module> comps;
  std::vector<Matrix> diffs;
  for (int n = a; n <= b; ++n) {
    comps.push_back(at(n));
    if (n > a) diffs.push_back(differential(n));
  }
  return trusted(algebra_, a, std::move(comps), std::move(diffs));
}

bool BoundedComplex::operator==(const BoundedComplex& o) const {
  return same_algebra(algebra_, o.algebra_) && lo_ == o.lo_ && components_ == o.components_ &&
         differentials_ == o.differentials_;
}

ChainMap::ChainMap(BoundedComplex source, BoundedComplex target, std::map<int, Matrix> maps, Unchecked)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
  for (const auto& [n, m] : maps_) {
    if (m.rows() != target_.dim_at(n) || m.cols() != source_.dim_at(n)) {
      throw InputError("chain map component in degree " + std::to_string(n) + " has wrong shape");
    }
  }
}

ChainMap::ChainMap(BoundedComplex source, BoundedComplex target, std::map<int, Matrix> maps)
    : ChainMap(std::move(source), std::move(target), std::move(maps), Unchecked{}) {
  if (!same_algebra(source_.algebra(), target_.algebra())) throw InputError("chain map between different algebras");
  for (const auto& [n, m] : maps_) {
    if (!intertwines(source_.at(n), target_.at(n), m)) {
      throw InputError("chain map component in degree " + std::to_string(n) + " is not a module map");
    }
  }
  int lo = std::min(source_.lo(), target_.lo()), hi = std::max(source_.hi(), target_.hi()) + 1;
  for (int n = lo; n <= hi; ++n) {
    if (at(n) * source_.differential(n) != target_.differential(n) * at(n - 1)) {
      throw InputError("chain map does not commute with the differentials in degree " + std::to_string(n));
    }
  }
}

ChainMap ChainMap::trusted(BoundedComplex source, BoundedComplex target, std::map<int, Matrix> maps) {
  return ChainMap(std::move(source), std::move(target), std::move(maps), Unchecked{});
}

ChainMap ChainMap::identity(const BoundedComplex& c) {
  std::map<int, Matrix> maps;
  for (int n = c.lo(); n <= c.hi(); ++n) maps.emplace(n, Matrix::identity(c.field(), c.dim_at(n)));
  return trusted(c, c, std::move(maps));
}

Matrix ChainMap::at(int n) const {
  auto it = maps_.find(n);
  if (it != maps_.end()) return it->second;
  return zero_matrix(source_.field(), target_.dim_at(n), source_.dim_at(n));
}

ChainMap ChainMap::compose(const ChainMap& other) const {
  std::map<int, Matrix> maps;
  const auto& src = other.source();
  for (int n = src.lo(); n <= src.hi(); ++n) maps.emplace(n, at(n) * other.at(n));
  return trusted(other.source(), target_, std::move(maps));
}

std::size_t homology_dim(const BoundedComplex& c, int n) {
  std::size_t d = c.dim_at(n);
  if (d == 0) return 0;
  return d - rank(c.differential(n + 1)) - rank(c.differential(n));
}

Module homology(const BoundedComplex& c, int n) {
  const Module& m = c.at(n);
  if (m.dim() == 0) return m;
  Matrix k = kernel_basis(c.differential(n + 1));
  Submodule z = submodule(m, k);
  if (k.cols() == 0) return z.module;
  Matrix b = c.differential(n);
  Matrix coords(c.field(), k.cols(), 0);
  if (b.cols() > 0) {
    auto x = solve(k, b);
    if (!x) throw InternalError("boundaries are not cycles");
    coords = *x;
  }
  return quotient(z.module, coords).module;
}

bool is_exact(const BoundedComplex& c) {
  for (int n = c.lo(); n <= c.hi(); ++n) {
    if (homology_dim(c, n) != 0) return false;
  }
  return true;
}

SIA sia(const BoundedComplex& c, int from, int to) {
  SIA out;
  for (int n = std::max(c.lo(), from); n <= std::min(c.hi(), to); ++n) {
    if (homology_dim(c, n) == 0) continue;
    if (!out.i) out.i = n;
    out.s = n;
  }
  if (out.s) out.a = *out.s - *out.i;
  return out;
}

SIA sia(const BoundedComplex& c) { return sia(c, c.lo(), c.hi()); }

BoundedComplex shift(const BoundedComplex& c, int m) {
  if (c.empty()) return c;
  std::vector<Module> comps;
  std::vector<Matrix> diffs;
  const bool negate = (m % 2) != 0;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    comps.push_back(c.at(n));
    if (n > c.lo()) diffs.push_back(negate ? c.differential(n).scaled(-1) : c.differential(n));
  }
  return BoundedComplex::trusted(c.algebra(), c.lo() - m, std::move(comps), std::move(diffs));
}

ChainMap shift(const ChainMap& f, int m) {
  std::map<int, Matrix> maps;
  for (int n = f.source().lo(); n <= f.source().hi(); ++n) maps.emplace(n - m, f.at(n));
  return ChainMap::trusted(shift(f.source(), m), shift(f.target(), m), std::move(maps));
}

Cone cone(const ChainMap& f) {
  const BoundedComplex& x = f.source();
  const BoundedComplex& y = f.target();
  const AlgebraPtr& alg = x.algebra();
  const Field& fld = x.field();
  int lo = std::min(x.empty() ? y.lo() : x.lo() - 1, y.empty() ? x.lo() - 1 : y.lo());
  int hi = std::max(x.empty() ? y.hi() : x.hi() - 1, y.empty() ? x.hi() - 1 : y.hi());
  if (x.empty() && y.empty()) {
    BoundedComplex z = BoundedComplex::zero(alg);
    return {z, ChainMap::trusted(y, z, {}), ChainMap::trusted(z, shift(x, 1), {})};
  }
  std::vector<Module> comps;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    comps.push_back(direct_sum(x.at(n + 1), y.at(n)));
    if (n == lo) continue;
    const std::size_t xa = x.dim_at(n), ya = y.dim_at(n - 1), xb = x.dim_at(n + 1), yb = y.dim_at(n);
    Matrix d(fld, xb + yb, xa + ya);
    d.set_block(0, 0, x.differential(n + 1).scaled(-1));
    d.set_block(xb, 0, f.at(n));
    d.set_block(xb, xa, y.differential(n));
    diffs.push_back(std::move(d));
  }
  BoundedComplex c = BoundedComplex::trusted(alg, lo, std::move(comps), std::move(diffs));
  std::map<int, Matrix> inc, proj;
  for (int n = lo; n <= hi; ++n) {
    const std::size_t xd = x.dim_at(n + 1), yd = y.dim_at(n);
    Matrix i(fld, xd + yd, yd), p(fld, xd, xd + yd);
    for (std::size_t k = 0; k < yd; ++k) i(xd + k, k) = 1;
    for (std::size_t k = 0; k < xd; ++k) p(k, k) = 1;
    inc.emplace(n, std::move(i));
    proj.emplace(n, std::move(p));
  }
  return {c, ChainMap::trusted(y, c, std::move(inc)), ChainMap::trusted(c, shift(x, 1), std::move(proj))};
}

bool is_quasi_isomorphism(const ChainMap& f) { return is_exact(cone(f).complex); }

namespace {

BoundedComplex slice(const BoundedComplex& c, int a, int b) {
  a = std::max(a, c.lo());
  b = std::min(b, c.hi());
  if (a > b) return BoundedComplex::zero(c.algebra());
  std::vector<Module> comps;
  std::vector<Matrix> diffs;
  for (int n = a; n <= b; ++n) {
    comps.push_back(c.at(n));
    if (n > a) diffs.push_back(c.differential(n));
  }
  return BoundedComplex::trusted(c.algebra(), a, std::move(comps), std::move(diffs));
}

}  // namespace

BoundedComplex truncate_above(const BoundedComplex& c, int n) { return slice(c, c.lo(), n); }
BoundedComplex truncate_below(const BoundedComplex& c, int n) { return slice(c, n, c.hi()); }

BoundedComplex smart_truncate_above(const BoundedComplex& c, int n) {
  if (c.empty() || n >= c.hi()) return c;
  if (n < c.lo()) return BoundedComplex::zero(c.algebra());
  Matrix k = kernel_basis(c.differential(n + 1));
  Submodule z = submodule(c.at(n), k);
  std::vector<Module> comps;
  std::vector<Matrix> diffs;
  for (int j = c.lo(); j < n; ++j) {
    comps.push_back(c.at(j));
    if (j > c.lo()) diffs.push_back(c.differential(j));
  }
  comps.push_back(z.module);
  if (n > c.lo()) {
    Matrix coords(c.field(), k.cols(), c.dim_at(n - 1));
    if (k.cols() > 0) {
      auto x = solve(k, c.differential(n));
      if (!x) throw InternalError("boundaries are not cycles");
      coords = *x;
    }
    diffs.push_back(std::move(coords));
  }
  return BoundedComplex::trusted(c.algebra(), c.lo(), std::move(comps), std::move(diffs));
}

BoundedComplex smart_truncate_below(const BoundedComplex& c, int n) {
  if (c.empty() || n <= c.lo()) return c;
  if (n > c.hi()) return BoundedComplex::zero(c.algebra());
  Quotient q = quotient(c.at(n), c.differential(n));
  std::vector<Module> comps{q.module};
  std::vector<Matrix> diffs;
  for (int j = n + 1; j <= c.hi(); ++j) {
    comps.push_back(c.at(j));
    if (j == n + 1) {
      // d^{n+1} vanishes on the boundaries, so it factors through the quotient.
      const Matrix& pr = q.projection.matrix();
      Matrix d = c.differential(j);
      Matrix induced(c.field(), d.rows(), pr.rows());
      if (pr.rows() > 0 && d.rows() > 0) {
        auto x = solve(pr.transpose(), d.transpose());
        if (!x) throw InternalError("differential does not factor through the cokernel");
        induced = x->transpose();
      }
      diffs.push_back(std::move(induced));
    } else {
      diffs.push_back(c.differential(j));
    }
  }
  return BoundedComplex::trusted(c.algebra(), n, std::move(comps), std::move(diffs));
}

StandardResolution standard_projective_resolution(const BoundedComplex& c, int bottom) {
  SIA h = sia(c);
  if (h.acyclic()) throw InputError("no standard resolution of an acyclic complex");
  const int s = *h.s;
  if (c.is_free() && c.hi() <= s) {
    BoundedComplex p = c.trimmed();
    return {p, ChainMap::identity(p), p.lo(), true};
  }
  bottom = std::min(bottom, s);
  const AlgebraPtr& alg = c.algebra();
  const Field& f = c.field();
  // Built top-down; index k holds degree s - k.
  std::vector<Module> comps;
  std::vector<Matrix> up;   // d_P^{n+1}: P^n -> P^{n+1}
  std::vector<Matrix> phi;  // P^n -> c^n
  bool complete = false;
  int n = s;
  for (; n >= bottom; --n) {
    const std::size_t k = comps.size();
    Module p1 = k >= 1 ? comps[k - 1] : Module::zero(alg);
    const std::size_t p1d = p1.dim(), cn = c.dim_at(n), cn1 = c.dim_at(n + 1);
    const std::size_t p2d = k >= 2 ? comps[k - 2].dim() : 0;
    Matrix constraint(f, p2d + cn1, p1d + cn);
    if (k >= 2) constraint.set_block(0, 0, up[k - 1]);
    if (k >= 1) constraint.set_block(p2d, 0, phi[k - 1]);
    constraint.set_block(p2d, p1d, c.differential(n + 1).scaled(-1));
    Matrix w = kernel_basis(constraint);
    Module ambient = direct_sum(p1, c.at(n));
    Module pn = Module::free(alg, 0);
    Matrix map(f, p1d + cn, 0);
    if (w.cols() > 0) {
      Submodule wm = submodule(ambient, w);
      Matrix bnd(f, p1d + cn, c.dim_at(n - 1));
      bnd.set_block(p1d, 0, c.differential(n));
      auto coords = solve(w, bnd);
      if (!coords) throw InternalError("boundaries fall outside the cover space");
      FreeCover cover = free_cover_modulo(wm.module, *coords);
      pn = cover.free;
      map = w * cover.surjection.matrix();
    }
    comps.push_back(pn);
    up.push_back(map.submatrix(0, p1d, 0, map.cols()));
    phi.push_back(map.submatrix(p1d, cn, 0, map.cols()));
    if (pn.dim() == 0 && n < c.lo()) {
      complete = true;
      break;
    }
  }
  // Degrees present: s down to the last built one.
  const int built_low = s - static_cast<int>(comps.size()) + 1;
  const int first = complete ? built_low + 1 : built_low;
  std::vector<Module> pcomps;
  std::vector<Matrix> pdiffs;
  std::map<int, Matrix> maps;
  for (int d = first; d <= s; ++d) {
    const std::size_t idx = static_cast<std::size_t>(s - d);
    pcomps.push_back(comps[idx]);
    if (d > first) pdiffs.push_back(up[idx + 1]);
    maps.emplace(d, phi[idx]);
  }
  BoundedComplex p = BoundedComplex::trusted(alg, first, std::move(pcomps), std::move(pdiffs));
  ChainMap q = ChainMap::trusted(p, c, std::move(maps));
  return {p, q, complete ? first : built_low + 1, complete};
}

FreeWindow omega(const FreeWindow& w) {
  SIA h = sia(w.p, w.valid_from, w.p.hi());
  if (h.acyclic()) throw InputError("omega of a complex without homology");
  const int s = *h.s;
  if (!w.p.is_free()) throw InputError("omega needs a complex of free modules");
  for (int n = s + 1; n <= w.p.hi(); ++n) {
    if (w.p.dim_at(n) != 0) throw InputError("omega needs a complex vanishing above its top homology");
  }
  return {shift(truncate_above(w.p, s - 1), -1), w.valid_from + 1};
}

BoundedComplex omega_model(const BoundedComplex& c) {
  SIA h = sia(c);
  if (h.acyclic()) throw InputError("omega of an acyclic complex");
  const int s = *h.s;
  StandardResolution res = standard_projective_resolution(c, s);
  BoundedComplex top = BoundedComplex::concentrated(res.p.at(s), s);
  ChainMap f = ChainMap::trusted(top, c, {{s, res.qis.at(s)}});
  return shift(cone(f).complex, -1).trimmed();
}

Trunk trunk(const BoundedComplex& c) {
  SIA h = sia(c);
  if (h.acyclic()) throw InputError("no trunk module of an acyclic complex");
  const int i = *h.i;
  StandardResolution res = standard_projective_resolution(c, i - 1);
  Trunk out{cokernel_of(res.p.differential_hom(i)).module, 0, i, -i, 0};
  BoundedComplex model = c;
  int a = *h.a;
  while (a > 0) {
    model = omega_model(model);
    SIA hm = sia(model);
    if (hm.acyclic() || *hm.a >= a) throw InternalError("omega did not lower the amplitude");
    a = *hm.a;
    ++out.b;
  }
  out.omega_shift = -(i + static_cast<int>(out.b));
  return out;
}

BimoduleComplex::BimoduleComplex(BoundedComplex left, BoundedComplex right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.lo() != right_.lo() || left_.hi() != right_.hi()) throw InputError("bimodule sides have different ranges");
  for (int n = left_.lo(); n <= left_.hi(); ++n) {
    const Module& l = left_.at(n);
    const Module& r = right_.at(n);
    if (l.dim() != r.dim()) throw InputError("bimodule sides have different dimensions");
    if (left_.differential(n) != right_.differential(n)) throw InputError("bimodule sides have different differentials");
    for (auto g : l.algebra()->generators()) {
      for (auto h : r.algebra()->generators()) {
        if (l.action(g) * r.action(h) != r.action(h) * l.action(g)) {
          throw InputError("left and right actions do not commute in degree " + std::to_string(n));
        }
      }
    }
  }
}

BimoduleComplex BimoduleComplex::concentrated(const Module& left, const Module& right, int degree) {
  return BimoduleComplex(BoundedComplex::concentrated(left, degree), BoundedComplex::concentrated(right, degree));
}

BimoduleComplex BimoduleComplex::shifted(int m) const { return BimoduleComplex(shift(left_, m), shift(right_, m), true); }

TotalHom total_hom_complex(const BoundedComplex& p, const BimoduleComplex& c, std::optional<int> p_valid_from) {
  const BoundedComplex& cl = c.left();
  const BoundedComplex& cr = c.right();
  const AlgebraPtr& b = cr.algebra();
  std::optional<int> valid_to;
  if (p_valid_from) valid_to = cl.lo() - *p_valid_from;
  if (p.empty() || cl.empty()) return {BoundedComplex::zero(b), valid_to};
  if (!p.is_free()) throw InputError("total Hom needs a complex of free modules");
  if (!same_algebra(p.algebra(), cl.algebra())) throw InputError("total Hom between complexes over different algebras");
  const Field& f = p.field();
  const int nlo = cl.lo() - p.hi(), nhi = cl.hi() - p.lo();

  struct Part {
    std::size_t offset, size;
  };
  std::vector<std::map<int, Part>> parts;
  std::vector<Module> comps;
  for (int n = nlo; n <= nhi; ++n) {
    std::map<int, Part> layout;
    std::vector<Module> pieces;
    std::size_t offset = 0;
    for (int i = p.lo(); i <= p.hi(); ++i) {
      const std::size_t g = *p.at(i).free_rank();
      const Module& cm = cr.at(i + n);
      if (g == 0 || cm.dim() == 0) continue;
      layout.emplace(i, Part{offset, g * cm.dim()});
      offset += g * cm.dim();
      pieces.push_back(power(cm, g));
    }
    parts.push_back(std::move(layout));
    comps.push_back(pieces.empty() ? Module::zero(b) : direct_sum(pieces).sum);
  }
  std::vector<Matrix> diffs;
  for (int n = nlo; n < nhi; ++n) {
    const auto& src = parts[static_cast<std::size_t>(n - nlo)];
    const auto& tgt = parts[static_cast<std::size_t>(n + 1 - nlo)];
    Matrix d(f, comps[static_cast<std::size_t>(n + 1 - nlo)].dim(), comps[static_cast<std::size_t>(n - nlo)].dim());
    for (const auto& [i, sp] : src) {
      const std::size_t g = *p.at(i).free_rank();
      auto same = tgt.find(i);
      if (same != tgt.end()) {
        Matrix dc = cl.differential(i + n + 1);
        std::vector<Matrix> blocks(g, dc);
        d.set_block(same->second.offset, sp.offset, Matrix::block_diagonal(f, blocks));
      }
      auto lower = tgt.find(i - 1);
      if (lower != tgt.end()) {
        Matrix pre = precompose_free(p.differential_hom(i), cl.at(i + n));
        d.set_block(lower->second.offset, sp.offset, (n % 2 == 0) ? pre.scaled(-1) : pre);
      }
    }
    diffs.push_back(std::move(d));
  }
  return {BoundedComplex::trusted(b, nlo, std::move(comps), std::move(diffs)), valid_to};
}

}  // namespace gcdim
