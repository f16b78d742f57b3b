#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcdim/matrix.hpp"

namespace gcdim {

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string name;
};

/// One term of a relation: coefficient times a path, arrows listed in the
/// order they are traversed.
struct PathTerm {
  Scalar coeff;
  std::vector<std::size_t> arrows;
};

struct Quiver {
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<std::vector<PathTerm>> relations;
  std::optional<std::size_t> nilpotency_bound;
};

/// Path labels of a basis produced by build_path_algebra (or its opposite).
struct PathBasis {
  struct Element {
    std::size_t start = 0;
    std::size_t end = 0;
    std::vector<std::size_t> arrows;  // empty for the trivial path at `start`
  };
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<Element> elements;
  std::vector<std::size_t> idempotent_index;  // basis index of e_v
};

/// Finite-dimensional associative unital algebra given by structure constants
/// on a basis b_0..b_{d-1}. Construction checks associativity and the unit.
class Algebra {
 public:
  /// structure[(i*d + j)*d + k] is the coefficient of b_k in b_i*b_j.
  Algebra(Field f, std::size_t dim, std::vector<Scalar> structure, Vector unit,
          std::vector<std::string> labels = {}, std::optional<PathBasis> paths = std::nullopt,
          std::optional<Matrix> radical = std::nullopt);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Scalar& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& structure_constants() const { return structure_; }
  const Vector& unit() const { return unit_; }
  Vector basis_vector(std::size_t i) const;
  Vector product(const Vector& a, const Vector& b) const;

  /// Matrix of x -> b_i x on coordinate vectors.
  const Matrix& left_multiplication(std::size_t i) const { return left_[i]; }
  /// Matrix of x -> x b_i.
  const Matrix& right_multiplication(std::size_t i) const { return right_[i]; }
  Matrix left_multiplication(const Vector& a) const;

  /// Basis indices that generate the algebra (greedy in basis order).
  const std::vector<std::size_t>& generators() const { return generators_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<PathBasis>& path_basis() const { return paths_; }

  /// Basis (as columns) of the Jacobson radical when it can be certified:
  /// from the path grading, or from the trace form in characteristic 0.
  std::optional<Matrix> radical() const;

  bool operator==(const Algebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && structure_ == o.structure_ && unit_ == o.unit_;
  }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Scalar> structure_;
  Vector unit_;
  std::vector<std::string> labels_;
  std::optional<PathBasis> paths_;
  std::optional<Matrix> radical_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
  std::vector<std::size_t> generators_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

struct PathAlgebra {
  AlgebraPtr algebra;
  std::vector<Vector> idempotents;  // e_v in basis coordinates
};

/// kQ modulo the ideal generated by the relations (or by all paths of length
/// nilpotency_bound when no relations are given).
///
/// Paths concatenate left to right: for a: u->v and b: v->w the product a*b
/// is the path "a, then b", and e_u*a == a == a*e_v. A left module therefore
/// carries, for each arrow a: u->v, a linear map from the space at v to the
/// space at u.
PathAlgebra build_path_algebra(const Quiver& q, Field f);

AlgebraPtr opposite(const Algebra& a);

/// Linear bijection phi (columns: images of a's basis in b's coordinates)
/// with phi(xy) == phi(x)phi(y) and phi(1) == 1.
bool is_algebra_isomorphism(const Algebra& a, const Algebra& b, const Matrix& phi);

/// Exhaustive search for an isomorphism a -> b. Images of a's generators are
/// tried with integer coordinates in [-max_coeff, max_coeff].
std::optional<Matrix> find_algebra_isomorphism(const Algebra& a, const Algebra& b, int max_coeff = 1);

}  // namespace gcdim
