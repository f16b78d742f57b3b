#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gcdim/module.hpp"

namespace gcdim {

/// Surjection A^g -> m sending the j-th free generator to generators[j].
struct FreeCover {
  Module free;
  ModuleHom surjection;
  std::vector<Vector> generators;
};

/// Greedy cover: walk the basis of m in order and take each vector not yet in
/// the submodule generated by the earlier choices, then fold later choices
/// into earlier ones while the sums still generate. extra_generators appends
/// redundant zero generators, which change the resolution but no Ext group.
FreeCover free_cover(const Module& m, std::size_t extra_generators = 0);

/// Cover of m modulo the subspace spanned by the columns of `covered`: the
/// chosen generators together with `covered` generate m.
FreeCover free_cover_modulo(const Module& m, const Matrix& covered);

/// Free resolution prefix ... -> P_2 -> P_1 -> P_0 -> m built from greedy
/// covers of successive kernels. Immutable; extend() returns a longer copy.
class FreeResolution {
 public:
  explicit FreeResolution(Module m, std::size_t extra_generators = 0);

  /// Copy with at least `length` differentials (P_0 .. P_length).
  FreeResolution extended(std::size_t length) const;

  const Module& module() const { return module_; }
  std::size_t length() const { return free_.size() - 1; }
  const Module& free_module(std::size_t k) const { return free_[k]; }
  std::size_t rank(std::size_t k) const { return *free_[k].free_rank(); }
  /// P_0 -> m.
  const ModuleHom& augmentation() const { return augmentation_; }
  /// P_k -> P_{k-1} for 1 <= k <= length.
  const ModuleHom& differential(std::size_t k) const { return differentials_[k - 1]; }
  /// Omega^k m as the kernel of P_{k-1} -> Omega^{k-1}; Omega^0 == m.
  const Module& syzygy(std::size_t k) const { return syzygies_[k]; }

 private:
  void push_step();
  Module module_;
  std::size_t extra_;
  std::vector<Module> free_;
  std::vector<ModuleHom> differentials_;
  std::vector<Module> syzygies_;
  std::vector<ModuleHom> syzygy_inclusions_;  // Omega^k -> P_{k-1}
  std::vector<ModuleHom> covers_;             // P_k -> Omega^k
  ModuleHom augmentation_;
};

Module syzygy(const Module& m, std::size_t n);

/// Matrix of phi -> phi o d : Hom(A^{g_target}, n) -> Hom(A^{g_source}, n),
/// where a hom out of A^g is recorded by the images of its g generators.
Matrix precompose_free(const ModuleHom& d, const Module& n);
/// Hom(A^g, n) in generator-image coordinates as a module hom matrix.
Matrix hom_from_generator_images(const Module& free, const Module& n, const Vector& images);

/// dim Ext^i_A(m, n), from a cached free resolution of m.
std::size_t ext_dim(const Module& m, const Module& n, std::size_t i);
/// dim Ext^i for i = 0..max_degree using the given resolution.
std::vector<std::size_t> ext_profile(const FreeResolution& res, const Module& n, std::size_t max_degree);
std::vector<std::size_t> ext_profile(const Module& m, const Module& n, std::size_t max_degree);

/// Syzygies larger than this stop projective_dimension with a PreconditionError.
inline constexpr std::size_t kSyzygyBudget = 24;
/// Projective dimension when it is at most `limit` (needs a certified radical).
std::optional<std::size_t> projective_dimension(const Module& m, std::size_t limit);
/// Global dimension when it is at most `limit`: pd of A / rad A.
std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::size_t limit);
/// Projectivity test: the free cover splits.
bool is_projective(const Module& m);

}  // namespace gcdim
