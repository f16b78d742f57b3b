#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "gcdim/algebra.hpp"

namespace gcdim {

class FreeResolution;

/// Finite-dimensional left module: one action matrix per algebra basis
/// element, acting on column vectors. Cheap to copy; the data is shared and
/// immutable apart from a lazily extended free resolution.
class Module {
 public:
  /// Validates that the action is multiplicative and unital.
  Module(AlgebraPtr algebra, std::vector<Matrix> action);

  static Module zero(AlgebraPtr algebra);
  static Module regular(AlgebraPtr algebra);
  /// A^rank with basis (block j, basis element k) in block-major order.
  static Module free(AlgebraPtr algebra, std::size_t rank);
  /// Skips validation; for modules whose action was derived from a valid one.
  static Module trusted(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action,
                        std::optional<std::size_t> free_rank = std::nullopt);

  const AlgebraPtr& algebra() const { return d_->algebra; }
  const Field& field() const { return d_->algebra->field(); }
  std::size_t dim() const { return d_->dim; }
  bool is_zero() const { return d_->dim == 0; }
  const Matrix& action(std::size_t i) const { return d_->action[i]; }
  const std::vector<Matrix>& actions() const { return d_->action; }
  Matrix action_of(const Vector& element) const;
  /// Set when the module is literally A^rank with the standard basis.
  std::optional<std::size_t> free_rank() const { return d_->free_rank; }

  /// Free resolution prefix of at least the given length, extended on demand
  /// and shared by all copies of this module. Earlier snapshots stay valid.
  std::shared_ptr<const FreeResolution> resolution(std::size_t length) const;

  /// Structural identity: same algebra and identical action matrices.
  bool operator==(const Module& o) const;
  bool operator!=(const Module& o) const { return !(*this == o); }

 private:
  struct Data {
    AlgebraPtr algebra;
    std::size_t dim = 0;
    std::vector<Matrix> action;
    std::optional<std::size_t> free_rank;
    mutable std::mutex resolution_mutex;
    mutable std::shared_ptr<const FreeResolution> resolution;
  };
  explicit Module(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A matrix intertwining two module actions.
class ModuleHom {
 public:
  /// Validates shape and the intertwining identity on algebra generators.
  ModuleHom(Module source, Module target, Matrix matrix);
  static ModuleHom trusted(Module source, Module target, Matrix matrix);
  static ModuleHom identity(const Module& m);
  static ModuleHom zero(const Module& source, const Module& target);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  /// this after other.
  ModuleHom compose(const ModuleHom& other) const;
  std::size_t rank() const { return gcdim::rank(matrix_); }
  bool is_injective() const { return rank() == source_.dim(); }
  bool is_surjective() const { return rank() == target_.dim(); }
  bool is_bijective() const { return source_.dim() == target_.dim() && is_injective(); }

 private:
  struct Unchecked {};
  ModuleHom(Module source, Module target, Matrix matrix, Unchecked);
  Module source_;
  Module target_;
  Matrix matrix_;
};

bool intertwines(const Module& source, const Module& target, const Matrix& matrix);

/// Basis of Hom_A(m, n), deterministic.
std::vector<ModuleHom> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

struct DirectSum {
  Module sum;
  std::vector<ModuleHom> inclusions;
  std::vector<ModuleHom> projections;
};
DirectSum direct_sum(std::span<const Module> parts);
Module direct_sum(const Module& a, const Module& b);
Module power(const Module& m, std::size_t copies);

/// Submodule spanned by the columns of `basis` (full column rank, invariant).
struct Submodule {
  Module module;
  ModuleHom inclusion;
};
Submodule submodule(const Module& m, const Matrix& basis);

struct Quotient {
  Module module;
  ModuleHom projection;
};
/// m modulo the invariant subspace spanned by the columns of `span`.
Quotient quotient(const Module& m, const Matrix& span);

Submodule kernel_of(const ModuleHom& f);
Quotient cokernel_of(const ModuleHom& f);
struct Image {
  Module module;
  ModuleHom inclusion;   // image -> target
  ModuleHom corestriction;  // source -> image
};
Image image_of(const ModuleHom& f);

/// Searches Hom(m, n) for a bijection: basis elements first, then fixed
/// pseudo-random integer combinations. A miss is only conclusive when the
/// dimensions differ.
std::optional<ModuleHom> find_isomorphism(const Module& m, const Module& n, std::size_t attempts = 64);

struct EndomorphismAlgebra {
  AlgebraPtr algebra;
  std::vector<ModuleHom> basis;
};
/// End_A(m) with product s*t = "apply t, then s". m is a left module over the
/// result through the identity action matrices.
EndomorphismAlgebra endomorphism_algebra(const Module& m);

/// m as a left module over End_A(m), i.e. the action matrices are the
/// endomorphism basis.
Module module_over_endomorphisms(const Module& m, const EndomorphismAlgebra& e);

// Modules over quiver-presented algebras.

/// Representation with a space of dims[v] at each vertex; arrow a: u->v is
/// given as a dims[u] x dims[v] matrix (from the space at v to the space at u).
Module from_representation(AlgebraPtr algebra, const std::vector<std::size_t>& dims,
                           const std::vector<Matrix>& arrow_maps);
Module simple_module(AlgebraPtr algebra, std::size_t vertex);
/// A e_v.
Module indecomposable_projective(AlgebraPtr algebra, const Vector& idempotent);
/// Hom_k(e_v A, k).
Module indecomposable_injective(AlgebraPtr algebra, const Vector& idempotent);
/// Hom_k(A_A, k), the injective cogenerator.
Module dual_of_right_regular(AlgebraPtr algebra);
/// A / rad A, when the radical is certified.
std::optional<Module> top_of_regular(AlgebraPtr algebra);

}  // namespace gcdim
