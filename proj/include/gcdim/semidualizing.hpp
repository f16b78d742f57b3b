#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcdim/resolution.hpp"

namespace gcdim {

enum class Side { r, s };
enum class Status { verified_exact, verified_to_bound, refuted };

const char* to_string(Status s);
const char* to_string(Side s);

struct VerificationReport {
  bool homothety_left_bijective = false;
  bool homothety_right_bijective = false;
  std::size_t ext_r_vanishing_checked_to = 0;
  std::size_t ext_s_vanishing_checked_to = 0;
  std::vector<std::pair<Side, std::size_t>> ext_failures;
  Status status = Status::refuted;
};

/// An (R, S)-bimodule candidate. S^op is End_R(c) acting on c by evaluation,
/// so right S-modules are left modules over s_op throughout.
struct SemidualizingDatum {
  AlgebraPtr r_algebra;
  Module c;
  AlgebraPtr s_algebra;
  AlgebraPtr s_op;
  Module c_as_sop;
  VerificationReport verification;
  /// Global dimensions when certified (up to the limit tried).
  std::optional<std::size_t> r_gldim;
  std::optional<std::size_t> s_op_gldim;
  std::size_t ext_bound = 0;
  AlgebraPtr r_op;
};

/// max(4, certified global dimension).
std::size_t default_ext_bound(const AlgebraPtr& a);

SemidualizingDatum make_semidualizing(const Module& c, std::size_t ext_bound);

/// Swaps the roles of (R, c) and (S^op, c_as_sop). Needs the left homothety
/// to be bijective, so that R is the endomorphism algebra on the other side.
SemidualizingDatum mirror(const SemidualizingDatum& d);

/// Hom_R(m, c) with its hom basis; the S^op-action is post-composition.
struct DualModule {
  Module module;
  std::vector<ModuleHom> basis;
};
DualModule dual_of(const Module& m, const SemidualizingDatum& d);
Module dualize(const Module& m, const SemidualizingDatum& d);
/// Hom(f, c): dual(target) -> dual(source).
ModuleHom dualize(const ModuleHom& f, const SemidualizingDatum& d);
/// Same, with both duals already computed.
ModuleHom dualize(const ModuleHom& f, const DualModule& target_dual, const DualModule& source_dual,
                  const SemidualizingDatum& d);

/// Evaluation m -> Hom_{S^op}(Hom_R(m, c), c) in hom-basis coordinates.
ModuleHom biduality_map(const Module& m, const SemidualizingDatum& d);

enum class Reflexivity { yes, no, yes_to_bound };
const char* to_string(Reflexivity r);

struct ReflexivityReport {
  Reflexivity verdict = Reflexivity::no;
  std::size_t bound = 0;
  /// dim Ext^i(m, c) and dim Ext^i(dual m, c) for i = 1..bound. Shorter when
  /// the check stopped early.
  std::vector<std::size_t> ext_m;
  std::vector<std::size_t> ext_dual;
  std::optional<bool> biduality_bijective;
  std::string reason;
};

/// With stop_early the first failed condition ends the check.
ReflexivityReport is_reflexive(const Module& m, const SemidualizingDatum& d, std::size_t ext_bound,
                               bool stop_early = false);

struct GcDimResult {
  bool finite = false;
  /// The G_C-dimension when finite; the bound tried otherwise.
  std::size_t value = 0;
  /// The finite value rests on an exact reflexivity answer.
  bool exact = false;
  /// dim Ext^i(m, c) for i = 0..value + ext_bound when finite.
  std::vector<std::size_t> ext_profile;
};

/// Least n <= bound with the n-th syzygy C-reflexive. A finite value is
/// checked against the top nonvanishing Ext^i(m, c); a mismatch throws.
GcDimResult gc_dim_module(const Module& m, const SemidualizingDatum& d, std::size_t bound);

struct Cosyzygy {
  ModuleHom embedding;  // x -> c^g
  Module cokernel;
  ModuleHom projection;  // c^g -> cokernel
  std::size_t copies = 0;
};
/// 0 -> x -> c^g -> X1 -> 0 obtained by dualizing a free cover of Hom_R(x, c).
Cosyzygy cosyzygy(const Module& x, const SemidualizingDatum& d, std::size_t ext_bound);

}  // namespace gcdim
