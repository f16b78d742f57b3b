#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gcdim/complexes.hpp"
#include "gcdim/semidualizing.hpp"

namespace gcdim {

/// c as a one-term complex of bimodules in degree 0.
BimoduleComplex datum_complex(const SemidualizingDatum& d);

struct GcDimComplexResult {
  /// Acyclic input: a member whose value is -infinity.
  bool degenerate = false;
  bool member = false;
  /// The membership answer rests on exact reflexivity checks.
  bool exact = false;
  std::size_t bound = 0;
  /// Absent for non-members (+infinity) and degenerate inputs (-infinity).
  std::optional<int> value;
  std::optional<int> s_rhom;
  std::optional<std::size_t> trunk_value;
  std::optional<int> i_inf;
  std::optional<Module> trunk;
};

/// Membership through the trunk module: finite G_C-dimension of
/// Coker(P^{i-1} -> P^i) within `bound` syzygies. For members the value is
/// s(Hom(P, C)), and it must equal trunk_value - i; a mismatch throws.
GcDimComplexResult gc_dim_complex(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound);
GcDimComplexResult in_rrc(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound);

struct OmegaStep {
  GcDimComplexResult whole;
  GcDimComplexResult omega;
  BoundedComplex omega_complex;
};
/// Compares gc_dim(m) with gc_dim(omega m) + 1; throws when they differ.
OmegaStep omega_step_check(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound);

struct ReflexiveResolution {
  BoundedComplex x;
  ChainMap qis;  // x -> m
};
/// A bounded complex of C-reflexive modules with a quasi-isomorphism onto m:
/// the standard resolution cut off at a degree where its cokernel is an
/// n-th syzygy of the trunk module, n = its G_C-dimension.
ReflexiveResolution reflexive_resolution(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound);

/// Hom(x, c) computed componentwise, with the sign of the total Hom complex.
/// Degree n holds Hom(x^{-n}, c).
BoundedComplex naive_dual(const BoundedComplex& x, const SemidualizingDatum& d);

/// Bounded complex over S^op quasi-isomorphic to RHom_R(m, c): the total Hom
/// complex out of a standard resolution, truncated above the G_C-dimension.
BoundedComplex dual_complex(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound);

struct DualityRoundTrip {
  BoundedComplex dual;
  BoundedComplex double_dual;
  bool dual_member = false;
  /// degree -> (dim H^n(m), dim H^n(double dual)).
  std::map<int, std::pair<std::size_t, std::size_t>> homology;
  bool ok = false;
};
DualityRoundTrip dual_round_trip(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound);

/// F -> X -> E -> F[1], where X is a C-reflexive module placed in one
/// degree, every component of F is c^n, and E is a complex quasi-isomorphic
/// to m (the dual of a resolution of the dual of m). The cone of F -> X is
/// identified with E by `cone_to_middle`.
struct Approximation {
  BoundedComplex f;
  BoundedComplex x;
  Module x_module;
  int x_degree = 0;
  BoundedComplex middle;
  ChainMap f_to_x;
  ChainMap x_to_middle;
  ChainMap middle_to_shifted_f;
  ChainMap cone_to_middle;
  /// degree -> number of copies of c in F.
  std::map<int, std::size_t> copies;
};
Approximation approximate(const BoundedComplex& m, const SemidualizingDatum& d, std::size_t bound);

struct HomothetyReport {
  /// degree -> dim H^n of the Hom complex, over the checked window.
  std::map<int, std::size_t> homology;
  std::size_t expected_dim = 0;
  bool concentrated = false;
  bool bijective = false;
  int checked_to = 0;
  bool exact = false;
};

struct SemidualizingComplexDatum {
  AlgebraPtr r_algebra;
  AlgebraPtr s_op;
  BimoduleComplex ccpx;
  HomothetyReport left;   // S^op -> RHom_R(C, C)
  HomothetyReport right;  // R -> RHom_{S^op}(C, C)
  Status status = Status::refuted;
};
/// Checks both homothety morphisms in degree 0 of the Hom complexes out of
/// standard resolutions; `bound` sets how far below they are built.
SemidualizingComplexDatum make_semidualizing_complex(const BimoduleComplex& ccpx, std::size_t bound);

}  // namespace gcdim
