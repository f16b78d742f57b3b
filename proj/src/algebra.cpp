#include "gcdim/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gcdim {

namespace {

std::vector<std::size_t> greedy_generators(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t d = a.dim();
  std::vector<std::size_t> gens;
  // Span of all words in the chosen generators (including the empty word).
  auto closure = [&](const std::vector<std::size_t>& g) {
    EchelonBasis span(f, d);
    std::vector<Vector> frontier{a.unit()};
    span.add(a.unit());
    while (!frontier.empty()) {
      std::vector<Vector> next;
      for (const auto& v : frontier) {
        for (auto gi : g) {
          Vector w = a.left_multiplication(gi).apply(v);
          if (span.add(w)) next.push_back(std::move(w));
        }
      }
      frontier = std::move(next);
    }
    return span;
  };
  EchelonBasis span = closure(gens);
  for (std::size_t i = 0; i < d && span.dim() < d; ++i) {
    if (span.contains(a.basis_vector(i))) continue;
    gens.push_back(i);
    span = closure(gens);
  }
  return gens;
}

}  // namespace

Algebra::Algebra(Field f, std::size_t dim, std::vector<Scalar> structure, Vector unit,
                 std::vector<std::string> labels, std::optional<PathBasis> paths, std::optional<Matrix> radical)
    : field_(f),
      dim_(dim),
      structure_(std::move(structure)),
      unit_(std::move(unit)),
      labels_(std::move(labels)),
      paths_(std::move(paths)),
      radical_(std::move(radical)) {
  if (structure_.size() != dim_ * dim_ * dim_) throw InputError("structure constant tensor has wrong size");
  if (unit_.size() != dim_) throw InputError("unit vector has wrong length");
  for (auto& s : structure_) field_.normalize(s);
  for (auto& s : unit_) field_.normalize(s);
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
  }
  if (labels_.size() != dim_) throw InputError("basis label count does not match dimension");

  left_.reserve(dim_);
  right_.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Matrix l(field_, dim_, dim_), r(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        l(k, j) = this->structure(i, j, k);
        r(k, j) = this->structure(j, i, k);
      }
    }
    left_.push_back(std::move(l));
    right_.push_back(std::move(r));
  }

  // (b_i b_j) b_k == b_i (b_j b_k), i.e. R(b_k) L(b_i) == L(b_i) R(b_k).
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      if (right_[k] * left_[i] != left_[i] * right_[k]) {
        throw InputError("structure constants are not associative (basis elements " + labels_[i] + ", " +
                         labels_[k] + ")");
      }
    }
  }
  const Matrix id = Matrix::identity(field_, dim_);
  Matrix lu(field_, dim_, dim_), ru(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (unit_[i] == 0) continue;
    lu = lu + left_[i].scaled(unit_[i]);
    ru = ru + right_[i].scaled(unit_[i]);
  }
  if (dim_ > 0 && (lu != id || ru != id)) throw InputError("unit vector is not a two-sided identity");
  generators_ = greedy_generators(*this);
}

Vector Algebra::basis_vector(std::size_t i) const {
  Vector v(dim_);
  v[i] = 1;
  return v;
}

Vector Algebra::product(const Vector& a, const Vector& b) const {
  return left_multiplication(a).apply(b);
}

Matrix Algebra::left_multiplication(const Vector& a) const {
  if (a.size() != dim_) throw InputError("algebra element has wrong length");
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] != 0) m = m + left_[i].scaled(a[i]);
  }
  return m;
}

std::optional<Matrix> Algebra::radical() const {
  if (radical_) return radical_;
  if (!field_.is_rational()) return std::nullopt;
  // Characteristic 0: rad A = {x : tr L(xy) = 0 for all y}.
  Matrix form(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      Scalar tr = 0;
      for (std::size_t k = 0; k < dim_; ++k) {
        // L(b_i b_j) = sum_k c_ij^k L(b_k); tr L(b_k) = sum_m c_km^m.
        if (structure(i, j, k) == 0) continue;
        Scalar t = 0;
        for (std::size_t m = 0; m < dim_; ++m) t += structure(k, m, m);
        tr += structure(i, j, k) * t;
      }
      form(i, j) = tr;
    }
  }
  return kernel_basis(form.transpose());
}

PathAlgebra build_path_algebra(const Quiver& q, Field f) {
  const std::size_t nv = q.vertices;
  if (nv == 0) throw InputError("quiver has no vertices");
  for (const auto& a : q.arrows) {
    if (a.source >= nv || a.target >= nv) throw InputError("arrow '" + a.name + "' has an endpoint out of range");
  }

  struct Path {
    std::size_t start, end;
    std::vector<std::size_t> arrows;
  };
  auto extend_all = [&](std::size_t max_len, bool& truncated) {
    std::vector<Path> all;
    for (std::size_t v = 0; v < nv; ++v) all.push_back({v, v, {}});
    std::size_t begin = 0;
    truncated = false;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t end = all.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
          if (q.arrows[ai].source != all[i].end) continue;
          Path p = all[i];
          p.arrows.push_back(ai);
          p.end = q.arrows[ai].target;
          all.push_back(std::move(p));
        }
      }
      begin = end;
      if (begin == all.size()) return all;
    }
    truncated = begin != all.size();
    return all;
  };

  const bool has_relations = !q.relations.empty();
  if (has_relations && !q.nilpotency_bound) throw InputError("relations require a nilpotency bound");
  std::size_t bound = 0;  // paths of length >= bound vanish
  std::vector<Path> paths;
  bool cyclic = false;
  if (q.nilpotency_bound) {
    bound = *q.nilpotency_bound;
    if (bound == 0) throw InputError("nilpotency bound must be positive");
    paths = extend_all(bound, cyclic);
  } else {
    // Acyclic check: a path longer than the vertex count must revisit a vertex.
    paths = extend_all(nv, cyclic);
    if (cyclic) throw InputError("quiver has an oriented cycle: relations or a nilpotency bound are required");
    bound = nv + 1;
  }

  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[{paths[i].start, paths[i].arrows}] = i;
  const std::size_t W = paths.size();
  auto len = [&](std::size_t i) { return paths[i].arrows.size(); };
  // Concatenation in the working space kQ / J^{bound+1}; nullopt means zero.
  auto concat = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
    if (paths[i].end != paths[j].start) return std::nullopt;
    if (len(i) + len(j) > bound) return std::nullopt;
    std::vector<std::size_t> arrows = paths[i].arrows;
    arrows.insert(arrows.end(), paths[j].arrows.begin(), paths[j].arrows.end());
    auto it = index.find({paths[i].start, arrows});
    return it == index.end() ? std::nullopt : std::optional<std::size_t>(it->second);
  };

  // Ideal I inside the working space, closed under multiplication by arrows
  // and vertex idempotents on both sides. ideal_span records a spanning set.
  EchelonBasis ideal(f, W);
  std::vector<Vector> ideal_span;
  std::vector<Vector> queue;
  auto push = [&](Vector v) {
    if (!ideal.add(v)) return;
    ideal_span.push_back(v);
    queue.push_back(std::move(v));
  };
  if (has_relations) {
    for (const auto& rel : q.relations) {
      Vector v(W);
      for (const auto& term : rel) {
        if (term.arrows.size() < 2) throw InputError("relation paths must have length at least 2");
        for (auto a : term.arrows) {
          if (a >= q.arrows.size()) throw InputError("relation refers to an unknown arrow");
        }
        for (std::size_t k = 1; k < term.arrows.size(); ++k) {
          if (q.arrows[term.arrows[k - 1]].target != q.arrows[term.arrows[k]].source) {
            throw InputError("relation path is not composable");
          }
        }
        if (term.arrows.size() > bound) continue;
        auto it = index.find({q.arrows[term.arrows.front()].source, term.arrows});
        if (it == index.end()) throw InternalError("relation path missing from enumeration");
        v[it->second] = f.add(v[it->second], f.from_rational(term.coeff));
      }
      push(std::move(v));
    }
  } else if (q.nilpotency_bound) {
    for (std::size_t i = 0; i < W; ++i) {
      if (len(i) != bound) continue;
      Vector v(W);
      v[i] = 1;
      push(std::move(v));
    }
  }
  std::vector<std::size_t> multipliers;  // trivial paths and arrows
  for (std::size_t i = 0; i < W; ++i) {
    if (len(i) <= 1) multipliers.push_back(i);
  }
  while (!queue.empty()) {
    Vector v = std::move(queue.back());
    queue.pop_back();
    for (auto m : multipliers) {
      Vector left(W), right(W);
      for (std::size_t i = 0; i < W; ++i) {
        if (v[i] == 0) continue;
        if (auto p = concat(m, i)) left[*p] = f.add(left[*p], v[i]);
        if (auto p = concat(i, m)) right[*p] = f.add(right[*p], v[i]);
      }
      push(std::move(left));
      push(std::move(right));
    }
  }
  if (has_relations) {
    for (std::size_t i = 0; i < W; ++i) {
      if (len(i) != bound) continue;
      Vector v(W);
      v[i] = 1;
      if (!ideal.contains(v)) throw InputError("relations are not admissible at the given nilpotency bound");
    }
  }

  // Normal forms: eliminate longest paths first so the quotient basis consists
  // of the shortest surviving paths.
  std::vector<std::size_t> order(W);
  for (std::size_t i = 0; i < W; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return len(a) > len(b); });

  Matrix rel(f, ideal_span.size(), W);
  for (std::size_t r = 0; r < ideal_span.size(); ++r)
    for (std::size_t c = 0; c < W; ++c) rel(r, c) = ideal_span[r][order[c]];
  RrefResult red = ideal_span.empty() ? RrefResult{rel, {}} : rref(rel);
  std::vector<bool> is_pivot(W, false);
  for (auto p : red.pivots) is_pivot[order[p]] = true;

  std::vector<std::size_t> basis;  // working-space indices of surviving paths
  for (std::size_t i = 0; i < W; ++i) {
    if (!is_pivot[i] && len(i) < bound) basis.push_back(i);
  }
  std::stable_sort(basis.begin(), basis.end(), [&](std::size_t a, std::size_t b) { return len(a) < len(b); });
  std::vector<long> coord(W, -1);
  for (std::size_t k = 0; k < basis.size(); ++k) coord[basis[k]] = static_cast<long>(k);
  const std::size_t d = basis.size();

  auto normal_form = [&](std::size_t path) {
    Vector v(W);
    v[path] = 1;
    // One pass suffices: rows are fully reduced.
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      std::size_t pc = order[red.pivots[r]];
      if (v[pc] == 0) continue;
      Scalar c = v[pc];
      for (std::size_t col = 0; col < W; ++col) {
        const Scalar& e = red.reduced(r, col);
        if (e == 0) continue;
        v[order[col]] = f.sub(v[order[col]], f.mul(c, e));
      }
    }
    Vector out(d);
    for (std::size_t i = 0; i < W; ++i) {
      if (v[i] == 0) continue;
      if (coord[i] < 0) throw InternalError("normal form left a non-basis path");
      out[static_cast<std::size_t>(coord[i])] = v[i];
    }
    return out;
  };

  std::vector<Scalar> structure(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto p = concat(basis[i], basis[j]);
      if (!p || len(*p) >= bound) continue;
      Vector nf = normal_form(*p);
      for (std::size_t k = 0; k < d; ++k) structure[(i * d + j) * d + k] = nf[k];
    }
  }

  PathBasis pb;
  pb.vertices = nv;
  pb.arrows = q.arrows;
  std::vector<std::string> labels;
  Vector unit(d);
  std::vector<Vector> idempotents;
  pb.idempotent_index.resize(nv);
  std::vector<Vector> radical_cols;
  for (std::size_t k = 0; k < d; ++k) {
    const Path& p = paths[basis[k]];
    pb.elements.push_back({p.start, p.end, p.arrows});
    if (p.arrows.empty()) {
      labels.push_back("e" + std::to_string(p.start + 1));
      unit[k] = 1;
      pb.idempotent_index[p.start] = k;
    } else {
      std::string name;
      for (std::size_t a = 0; a < p.arrows.size(); ++a) {
        if (a) name += "*";
        name += q.arrows[p.arrows[a]].name;
      }
      labels.push_back(name);
      Vector col(d);
      col[k] = 1;
      radical_cols.push_back(std::move(col));
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    Vector e(d);
    e[pb.idempotent_index[v]] = 1;
    idempotents.push_back(std::move(e));
  }
  Matrix radical = Matrix::from_columns(f, d, radical_cols);
  auto alg = std::make_shared<const Algebra>(f, d, std::move(structure), std::move(unit), std::move(labels),
                                             std::move(pb), std::move(radical));
  return {alg, std::move(idempotents)};
}

AlgebraPtr opposite(const Algebra& a) {
  const std::size_t d = a.dim();
  std::vector<Scalar> s(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) s[(i * d + j) * d + k] = a.structure(j, i, k);
  std::optional<PathBasis> paths;
  if (a.path_basis()) {
    PathBasis pb = *a.path_basis();
    for (auto& arrow : pb.arrows) std::swap(arrow.source, arrow.target);
    for (auto& e : pb.elements) {
      std::swap(e.start, e.end);
      std::reverse(e.arrows.begin(), e.arrows.end());
    }
    paths = std::move(pb);
  }
  std::optional<Matrix> rad;
  if (a.path_basis()) rad = a.radical();
  return std::make_shared<const Algebra>(a.field(), d, std::move(s), a.unit(), a.labels(), std::move(paths),
                                         std::move(rad));
}

bool is_algebra_isomorphism(const Algebra& a, const Algebra& b, const Matrix& phi) {
  if (a.dim() != b.dim() || phi.rows() != b.dim() || phi.cols() != a.dim()) return false;
  if (rank(phi) != a.dim()) return false;
  if (phi.apply(a.unit()) != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vector pi = phi.column_vector(i);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector lhs = phi.apply(a.product(a.basis_vector(i), a.basis_vector(j)));
      Vector rhs = b.product(pi, phi.column_vector(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::optional<Matrix> find_algebra_isomorphism(const Algebra& a, const Algebra& b, int max_coeff) {
  if (a.dim() != b.dim() || a.field() != b.field()) return std::nullopt;
  const Field& f = a.field();
  const std::size_t d = a.dim();
  const auto& gens = a.generators();

  // Words in the generators whose values form a basis of a.
  std::vector<std::vector<std::size_t>> words;
  std::vector<Vector> values;
  {
    EchelonBasis span(f, d);
    std::vector<std::pair<std::vector<std::size_t>, Vector>> frontier{{{}, a.unit()}};
    span.add(a.unit());
    words.push_back({});
    values.push_back(a.unit());
    while (!frontier.empty()) {
      std::vector<std::pair<std::vector<std::size_t>, Vector>> next;
      for (const auto& [w, v] : frontier) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
          Vector nv = a.left_multiplication(gens[g]).apply(v);
          if (!span.add(nv)) continue;
          std::vector<std::size_t> nw{g};
          nw.insert(nw.end(), w.begin(), w.end());
          words.push_back(nw);
          values.push_back(nv);
          next.emplace_back(std::move(nw), std::move(nv));
        }
      }
      frontier = std::move(next);
    }
  }
  if (values.size() != d) throw InternalError("generator words do not span the algebra");
  Matrix word_values = Matrix::from_columns(f, d, values);

  const std::size_t per = static_cast<std::size_t>(2 * max_coeff + 1);
  std::size_t candidates = 1;
  for (std::size_t k = 0; k < d; ++k) candidates *= per;
  std::vector<std::size_t> choice(gens.size(), 0);
  auto candidate_vector = [&](std::size_t code) {
    Vector v(d);
    for (std::size_t k = 0; k < d; ++k) {
      v[k] = f.from_int(static_cast<long long>(code % per) - max_coeff);
      code /= per;
    }
    return v;
  };

  std::function<std::optional<Matrix>(std::size_t)> search = [&](std::size_t g) -> std::optional<Matrix> {
    if (g == gens.size()) {
      std::vector<Vector> images;
      for (std::size_t k = 0; k < gens.size(); ++k) images.push_back(candidate_vector(choice[k]));
      std::vector<Vector> word_images;
      for (const auto& w : words) {
        Vector v = b.unit();
        for (auto it = w.rbegin(); it != w.rend(); ++it) v = b.product(images[*it], v);
        word_images.push_back(std::move(v));
      }
      Matrix img = Matrix::from_columns(f, d, word_images);
      if (rank(img) != d) return std::nullopt;
      auto phi = solve(word_values.transpose(), img.transpose());
      if (!phi) return std::nullopt;
      Matrix m = phi->transpose();
      if (is_algebra_isomorphism(a, b, m)) return m;
      return std::nullopt;
    }
    for (std::size_t c = 0; c < candidates; ++c) {
      choice[g] = c;
      if (auto r = search(g + 1)) return r;
    }
    return std::nullopt;
  };
  return search(0);
}

}  // namespace gcdim
