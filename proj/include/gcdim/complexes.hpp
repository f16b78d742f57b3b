#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gcdim/resolution.hpp"

namespace gcdim {

/// Cochain complex M^lo -> ... -> M^hi with differentials d^n: M^{n-1} -> M^n.
/// Components outside [lo, hi] are zero.
class BoundedComplex {
 public:
  /// components[k] sits in degree lo + k; differentials[k] is d^{lo+k+1}.
  /// Checks shapes, the intertwining identity and d o d == 0.
  BoundedComplex(AlgebraPtr algebra, int lo, std::vector<Module> components, std::vector<Matrix> differentials);
  /// Checks shapes and d o d == 0 only.
  static BoundedComplex trusted(AlgebraPtr algebra, int lo, std::vector<Module> components,
                                std::vector<Matrix> differentials);
  static BoundedComplex zero(AlgebraPtr algebra);
  static BoundedComplex concentrated(const Module& m, int degree);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  /// No components at all; lo() > hi() then.
  bool empty() const { return components_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(components_.size()) - 1; }
  const Module& at(int n) const;
  std::size_t dim_at(int n) const { return at(n).dim(); }
  /// d^n: M^{n-1} -> M^n (a zero matrix outside the stored range).
  Matrix differential(int n) const;
  ModuleHom differential_hom(int n) const;
  /// Every component is literally a free module.
  bool is_free() const;
  /// Drops zero components at both ends.
  BoundedComplex trimmed() const;

  bool operator==(const BoundedComplex& o) const;

 private:
  struct Unchecked {};
  BoundedComplex(AlgebraPtr algebra, int lo, std::vector<Module> components, std::vector<Matrix> differentials,
                 Unchecked);
  AlgebraPtr algebra_;
  int lo_ = 0;
  std::vector<Module> components_;
  std::vector<Matrix> differentials_;
  Module zero_;
};

class ChainMap {
 public:
  /// Missing degrees are zero. Checks commutation with the differentials.
  ChainMap(BoundedComplex source, BoundedComplex target, std::map<int, Matrix> maps);
  static ChainMap trusted(BoundedComplex source, BoundedComplex target, std::map<int, Matrix> maps);
  static ChainMap identity(const BoundedComplex& c);

  const BoundedComplex& source() const { return source_; }
  const BoundedComplex& target() const { return target_; }
  Matrix at(int n) const;
  /// this after other.
  ChainMap compose(const ChainMap& other) const;

 private:
  struct Unchecked {};
  ChainMap(BoundedComplex source, BoundedComplex target, std::map<int, Matrix> maps, Unchecked);
  BoundedComplex source_;
  BoundedComplex target_;
  std::map<int, Matrix> maps_;
};

std::size_t homology_dim(const BoundedComplex& c, int n);
/// ker d^{n+1} / im d^n.
Module homology(const BoundedComplex& c, int n);
bool is_exact(const BoundedComplex& c);

/// Supremum, infimum and amplitude of the homology. nullopt stands for the
/// infinite values of an acyclic complex (s = -inf, i = +inf, a = -inf).
struct SIA {
  std::optional<int> s;
  std::optional<int> i;
  std::optional<int> a;
  bool acyclic() const { return !s.has_value(); }
};
SIA sia(const BoundedComplex& c);
/// Only degrees n with from <= n <= to are inspected.
SIA sia(const BoundedComplex& c, int from, int to);

/// M[m]^n = M^{m+n}, d_{M[m]}^n = (-1)^m d_M^{m+n}.
BoundedComplex shift(const BoundedComplex& c, int m);
ChainMap shift(const ChainMap& f, int m);

/// cone^n = X^{n+1} + Y^n with differential [[-d_X, 0], [f, d_Y]].
struct Cone {
  BoundedComplex complex;
  ChainMap inclusion;   // Y -> cone
  ChainMap projection;  // cone -> X[1]
};
Cone cone(const ChainMap& f);
bool is_quasi_isomorphism(const ChainMap& f);

/// Brutal truncations: components outside the range dropped.
BoundedComplex truncate_above(const BoundedComplex& c, int n);  // degrees <= n
BoundedComplex truncate_below(const BoundedComplex& c, int n);  // degrees >= n
/// Smart truncations: the kernel of d^{n+1} (resp. the cokernel of d^n) at n.
BoundedComplex smart_truncate_above(const BoundedComplex& c, int n);
BoundedComplex smart_truncate_below(const BoundedComplex& c, int n);

/// Free complex P with P^n = 0 for n > s(c), built down to a bottom degree,
/// and a chain map P -> c inducing isomorphisms on H^n for n >= valid_from.
/// When complete, P is exact below and the map is a quasi-isomorphism.
struct StandardResolution {
  BoundedComplex p;
  ChainMap qis;
  int valid_from = 0;
  bool complete = false;
};
StandardResolution standard_projective_resolution(const BoundedComplex& c, int bottom);

/// A free complex together with the lowest degree where its homology is
/// meaningful (everything below is a truncation artifact).
struct FreeWindow {
  BoundedComplex p;
  int valid_from = 0;
};
/// (truncate_above(P, s - 1))[-1] with s the top homology degree in the window.
FreeWindow omega(const FreeWindow& p);

/// A bounded complex quasi-isomorphic to omega of the standard resolution:
/// the shifted cone of P^s[-s] -> c. Its homology is computed exactly.
BoundedComplex omega_model(const BoundedComplex& c);

struct Trunk {
  Module t;
  /// Number of omega steps that bring the amplitude to 0.
  std::size_t b = 0;
  int i = 0;
  /// The truncation at i, shifted by truncation_shift, has T as its only
  /// homology, in degree 0; omega^b lands on T[-omega_shift].
  int truncation_shift = 0;
  int omega_shift = 0;
};
/// Coker(P^{i-1} -> P^i) for a standard resolution P and i = i(c).
Trunk trunk(const BoundedComplex& c);

/// Two actions on the same spaces, a left one over R and a left one over a
/// second algebra B (standing for a right action), commuting with each
/// other and with the differentials.
class BimoduleComplex {
 public:
  BimoduleComplex(BoundedComplex left, BoundedComplex right);
  static BimoduleComplex concentrated(const Module& left, const Module& right, int degree);
  const BoundedComplex& left() const { return left_; }
  const BoundedComplex& right() const { return right_; }
  BimoduleComplex shifted(int m) const;
  /// Swaps the two sides.
  BimoduleComplex swapped() const { return BimoduleComplex(right_, left_, true); }

 private:
  BimoduleComplex(BoundedComplex left, BoundedComplex right, bool) : left_(std::move(left)), right_(std::move(right)) {}
  BoundedComplex left_;
  BoundedComplex right_;
};

/// Hom_R(P, C) over B: degree n is the product of Hom(P^i, C^{i+n}) with
/// d(f) = d_C f - (-1)^n f d_P. Homology is meaningful up to valid_to when the
/// free complex was only known from a valid_from degree upwards.
struct TotalHom {
  BoundedComplex complex;
  std::optional<int> valid_to;
};
TotalHom total_hom_complex(const BoundedComplex& p, const BimoduleComplex& c,
                           std::optional<int> p_valid_from = std::nullopt);

}  // namespace gcdim
