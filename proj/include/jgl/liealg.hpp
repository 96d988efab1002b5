#pragma once

// Graded Lie algebras, the standard imbedding and the TKK construction,
// Euler operators, exp(ad x) and elementary group orbits of filtrations.

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "identity.hpp"
#include "jordan.hpp"
#include "subspace.hpp"

namespace jgl {

/// Degree of each basis vector; modulus 0 means a Z-grading, 2 a Z/2-grading.
struct Grading {
  int modulus = 0;
  std::vector<int> degree;

  int reduce(int d) const {
    if (modulus == 0) return d;
    int r = d % modulus;
    return r < 0 ? r + modulus : r;
  }
  /// Largest |degree| (Z-gradings).
  int k() const {
    int m = 0;
    for (int d : degree) m = std::max(m, std::abs(d));
    return m;
  }
  std::vector<std::size_t> block(int j) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degree.size(); ++i) {
      if (reduce(degree[i]) == reduce(j)) out.push_back(i);
    }
    return out;
  }
  friend bool operator==(const Grading&, const Grading&) = default;
};

class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;
  GradedLieAlgebra(MultilinearMap bracket, Grading grading, std::optional<Vector> euler = std::nullopt)
      : bracket_(std::move(bracket)), grading_(std::move(grading)), euler_(std::move(euler)) {
    const auto n = bracket_.target_dim();
    if (bracket_.arity() != 2 || bracket_.slot_dims() != std::vector<std::size_t>{n, n}) {
      throw Error("Lie bracket must be g x g -> g");
    }
    if (grading_.degree.size() != n) throw Error("grading has wrong length");
    if (euler_ && euler_->size() != n) throw Error("Euler vector has wrong length");
  }

  const Ring& ring() const { return bracket_.ring(); }
  std::size_t dim() const { return bracket_.target_dim(); }
  const MultilinearMap& bracket() const { return bracket_; }
  const Grading& grading() const { return grading_; }
  const std::optional<Vector>& euler() const { return euler_; }
  GradedLieAlgebra with_euler(std::optional<Vector> e) const { return GradedLieAlgebra(bracket_, grading_, std::move(e)); }
  GradedLieAlgebra with_grading(Grading gr, std::optional<Vector> e = std::nullopt) const {
    return GradedLieAlgebra(bracket_, std::move(gr), std::move(e));
  }

  Vector br(const Vector& x, const Vector& y) const { return bracket_.evaluate(x, y); }
  Vector basis(std::size_t i) const { return unit_vector(ring(), dim(), i); }
  /// Matrix of y -> [x, y].
  Matrix ad(const Vector& x) const { return bracket_.linear_in_slot(1, {x, Vector{}}); }

  /// Subspace spanned by the basis vectors of degree j.
  Subspace block_space(int j) const { return Subspace::coordinate(ring(), dim(), grading_.block(j)); }

 private:
  MultilinearMap bracket_;
  Grading grading_;
  std::optional<Vector> euler_;
};

enum class MapKind { automorphism, derivation, involution };

struct AlgebraMap {
  Matrix m;
  MapKind kind = MapKind::automorphism;
};

/// First basis pair (i, j) where m[e_i, e_j] != [m e_i, m e_j], if any.
inline std::optional<std::pair<std::size_t, std::size_t>> automorphism_defect(const GradedLieAlgebra& g,
                                                                              const Matrix& m) {
  std::vector<Vector> img;
  for (std::size_t i = 0; i < g.dim(); ++i) img.push_back(m.col(i));
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (!(m.apply(g.bracket().evaluate_basis({i, j, 0})) == g.br(img[i], img[j]))) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

inline bool is_automorphism(const GradedLieAlgebra& g, const Matrix& m) {
  return m.rows() == g.dim() && m.cols() == g.dim() && rank(m) == g.dim() && !automorphism_defect(g, m);
}

inline bool is_derivation(const GradedLieAlgebra& g, const Matrix& d) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Vector lhs = d.apply(g.bracket().evaluate_basis({i, j, 0}));
      Vector rhs = add(g.br(d.col(i), g.basis(j)), g.br(g.basis(i), d.col(j)));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

inline bool is_involution(const GradedLieAlgebra& g, const Matrix& m) {
  return m * m == Matrix::identity(g.ring(), g.dim()) && is_automorphism(g, m);
}

inline Report verify_lie(const GradedLieAlgebra& g, const CheckOptions& opt = {}) {
  const auto& b = g.bracket();
  const auto n = g.dim();
  Report r;
  r.add(check_polynomial_identity({"alternation", {{"x", n, 2}},
                                   [&b](const std::vector<Vector>& a) { return b.evaluate(a[0], a[0]); }},
                                  g.ring(), opt));
  r.add(check_polynomial_identity(
      {"Jacobi", {{"x", n}, {"y", n}, {"z", n}},
       [&b](const std::vector<Vector>& a) {
         const auto &x = a[0], &y = a[1], &z = a[2];
         return add(add(b.evaluate(x, b.evaluate(y, z)), b.evaluate(y, b.evaluate(z, x))), b.evaluate(z, b.evaluate(x, y)));
       }},
      g.ring(), opt));

  const auto& gr = g.grading();
  Json gw;
  for (std::size_t i = 0; i < n && gw.is_null(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = b.evaluate_basis({i, j, 0});
      int target = gr.reduce(gr.degree[i] + gr.degree[j]);
      bool ok = true;
      for (std::size_t t = 0; t < n; ++t) {
        if (!v[t].is_zero() && gr.reduce(gr.degree[t]) != target) ok = false;
      }
      if (!ok) {
        gw = Json{{"i", i}, {"j", j}};
        break;
      }
    }
  }
  r.add("grading", gw.is_null(), gw);

  if (g.euler()) {
    Json ew;
    for (std::size_t i = 0; i < n; ++i) {
      Vector lhs = g.br(*g.euler(), g.basis(i));
      Vector rhs = scale(g.ring().from_int(gr.degree[i]), g.basis(i));
      if (!(lhs == rhs)) {
        ew = Json{{"basis", i}, {"degree", gr.degree[i]}, {"bracket", to_json(lhs)}};
        break;
      }
    }
    r.add("Euler", ew.is_null(), ew);
  }
  return r;
}

// ---------------------------------------------------------------- coordinates in a span

/// Fixed basis of a span of vectors with fast coordinate extraction.
class SpanCoordinates {
 public:
  SpanCoordinates() = default;
  SpanCoordinates(const Ring& ring, std::size_t ambient, std::vector<Vector> basis)
      : ring_(ring), ambient_(ambient), basis_(std::move(basis)) {
    if (basis_.empty()) return;
    Matrix b = Matrix::from_columns(ring, ambient, basis_);
    Echelon e = row_echelon(b.transpose());
    if (e.pivots.size() != basis_.size()) throw Error("span basis is not linearly independent");
    rows_ = e.pivots;
    Matrix sq(ring, basis_.size(), basis_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < basis_.size(); ++c) sq(r, c) = b(rows_[r], c);
    left_ = *inverse(sq);
  }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  std::optional<Vector> coordinates(const Vector& v) const {
    Vector sel;
    for (auto r : rows_) sel.push_back(v[r]);
    Vector c = basis_.empty() ? Vector{} : left_.apply(sel);
    Vector back(ambient_, ring_.zero());
    for (std::size_t k = 0; k < c.size(); ++k) back = add(back, scale(c[k], basis_[k]));
    if (!(back == v)) return std::nullopt;
    return c;
  }
  Vector require(const Vector& v, const char* what) const {
    auto c = coordinates(v);
    if (!c) throw Error(std::string(what) + ": vector outside the span");
    return *c;
  }

 private:
  Ring ring_;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> rows_;
  Matrix left_;
};

// ---------------------------------------------------------------- Z/2 and the standard imbedding

/// Odd part of a Z/2-graded algebra as an LTS, R(X,Y)Z = [[X,Y],Z].
inline LieTripleSystem lts_from_z2(const GradedLieAlgebra& g) {
  if (g.grading().modulus != 2) throw Error("lts_from_z2: algebra is not Z/2-graded");
  Matrix sigma(g.ring(), g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) sigma(i, i) = g.grading().reduce(g.grading().degree[i]) ? -g.ring().one() : g.ring().one();
  if (!is_automorphism(g, sigma)) throw Error("lts_from_z2: grading automorphism fails");
  auto odd = g.grading().block(1);
  const auto n = odd.size();
  return LieTripleSystem(tensor_from_closed_form(g.ring(), {n, n, n}, n, [&](const BasisTuple& idx) {
    Vector v = g.br(g.br(g.basis(odd[idx[0]]), g.basis(odd[idx[1]])), g.basis(odd[idx[2]]));
    Vector out;
    for (auto i : odd) out.push_back(v[i]);
    return out;
  }));
}

enum class ImbeddingSign { plus, minus };

namespace detail {

/// Operator Z -> R(x, y)Z as an n x n matrix.
inline Matrix r_operator(const MultilinearMap& r, const Vector& x, const Vector& y) {
  return r.linear_in_slot(2, {x, y, Vector{}});
}

/// Lie algebra on q (+) h where h is given by an operator basis closed under
/// commutators: [(X,D),(Y,E)] = (DY - EX, [D,E] + s R(X,Y)).
inline MultilinearMap imbedding_bracket(const MultilinearMap& r, const SpanCoordinates& h, const Scalar& s) {
  const Ring ring = r.ring();
  const auto n = r.target_dim(), m = h.size(), dim = n + m;
  std::vector<Matrix> ops;
  for (const auto& v : h.basis()) ops.push_back(Matrix::unflatten(ring, n, n, v));
  return tensor_from_closed_form(ring, {dim, dim}, dim, [&](const BasisTuple& idx) {
    Vector out(dim, ring.zero());
    const auto i = idx[0], j = idx[1];
    auto put_h = [&](const Matrix& op, const Scalar& c) {
      Vector coords = h.require(op.flatten(), "standard imbedding");
      for (std::size_t k = 0; k < m; ++k) out[n + k] += c * coords[k];
    };
    if (i < n && j < n) {
      put_h(r_operator(r, unit_vector(ring, n, i), unit_vector(ring, n, j)), s);
    } else if (i >= n && j < n) {
      Vector v = ops[i - n].col(j);
      for (std::size_t t = 0; t < n; ++t) out[t] += v[t];
    } else if (i < n && j >= n) {
      Vector v = ops[j - n].col(i);
      for (std::size_t t = 0; t < n; ++t) out[t] -= v[t];
    } else {
      put_h(commutator(ops[i - n], ops[j - n]), ring.one());
    }
    return out;
  });
}

/// RREF basis of span{R(e_i, e_j)} as flattened operators.
inline std::vector<Vector> inner_derivations(const MultilinearMap& r) {
  const auto n = r.target_dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      gens.push_back(r_operator(r, unit_vector(r.ring(), n, i), unit_vector(r.ring(), n, j)).flatten());
  for (std::size_t i = 0; i < n; ++i) gens.push_back(r_operator(r, unit_vector(r.ring(), n, i), unit_vector(r.ring(), n, i)).flatten());
  return Subspace::span(r.ring(), n * n, gens).basis_vectors();
}

}  // namespace detail

/// q (+) span{R(X,Y)} with the Z/2-grading (q odd). The plus sign reproduces q
/// as the odd-part LTS; minus uses -R(X,Y) in the q x q bracket.
inline GradedLieAlgebra standard_imbedding(const LieTripleSystem& q, ImbeddingSign sign = ImbeddingSign::plus) {
  const auto n = q.dim();
  SpanCoordinates h(q.ring(), n * n, detail::inner_derivations(q.r()));
  Scalar s = sign == ImbeddingSign::plus ? q.ring().one() : -q.ring().one();
  Grading gr{2, {}};
  for (std::size_t i = 0; i < n + h.size(); ++i) gr.degree.push_back(i < n ? 1 : 0);
  return GradedLieAlgebra(detail::imbedding_bracket(q.r(), h, s), gr);
}

/// V+ = g_1, V- = g_-1 and T(x,y,z) = [[x,y],z].
inline JordanPair pair_from_3graded(const GradedLieAlgebra& g) {
  if (g.grading().modulus != 0 || g.grading().k() != 1) throw Error("pair_from_3graded: algebra is not 3-graded (k = 1)");
  auto tensor = [&](int sign) {
    auto a = g.grading().block(sign), b = g.grading().block(-sign);
    return tensor_from_closed_form(g.ring(), {a.size(), b.size(), a.size()}, a.size(), [&](const BasisTuple& idx) {
      Vector v = g.br(g.br(g.basis(a[idx[0]]), g.basis(b[idx[1]])), g.basis(a[idx[2]]));
      Vector out;
      for (auto i : a) out.push_back(v[i]);
      return out;
    });
  };
  return JordanPair(tensor(1), tensor(-1));
}

/// 3-graded algebra V+ (+) V- (+) g0 with g0 = span{R(X,Y)} + K E.
inline GradedLieAlgebra tkk(const JordanPair& p) {
  const Ring ring = p.ring();
  const auto np = p.nplus(), nm = p.nminus(), n = np + nm;
  LieTripleSystem q = jts_to_lts(polarized_jts(p));
  std::vector<Vector> h = detail::inner_derivations(q.r());
  Matrix e(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) e(i, i) = i < np ? ring.one() : -ring.one();
  Vector ef = e.flatten();
  if (!Subspace::span(ring, n * n, h).contains(ef)) h.push_back(ef);
  SpanCoordinates g0(ring, n * n, h);
  Grading gr{0, {}};
  for (std::size_t i = 0; i < n + g0.size(); ++i) gr.degree.push_back(i < np ? 1 : (i < n ? -1 : 0));
  Vector euler(n + g0.size(), ring.zero());
  Vector ec = g0.require(ef, "tkk Euler operator");
  for (std::size_t k = 0; k < ec.size(); ++k) euler[n + k] = ec[k];
  return GradedLieAlgebra(detail::imbedding_bracket(q.r(), g0, ring.one()), gr, euler);
}

/// T(X,Y,Z) = [[X, theta Y], Z] on V = g_1.
inline JordanTripleSystem jts_from_graded_involution(const GradedLieAlgebra& g, const AlgebraMap& theta) {
  const auto& gr = g.grading();
  if (gr.modulus != 0 || gr.k() != 1) throw Error("jts_from_graded_involution: algebra is not 3-graded");
  if (!is_involution(g, theta.m)) throw Error("jts_from_graded_involution: theta is not an involutive automorphism");
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (!g.block_space(-gr.degree[i]).contains(theta.m.col(i))) {
      throw Error("jts_from_graded_involution: theta does not reverse the grading");
    }
  }
  auto v = gr.block(1);
  const auto n = v.size();
  return JordanTripleSystem(tensor_from_closed_form(g.ring(), {n, n, n}, n, [&](const BasisTuple& idx) {
    Vector r = g.br(g.br(g.basis(v[idx[0]]), theta.m.col(v[idx[1]])), g.basis(v[idx[2]]));
    Vector out;
    for (auto i : v) out.push_back(r[i]);
    return out;
  }));
}

// ---------------------------------------------------------------- Euler operators

struct EulerSolution {
  std::optional<Vector> particular;  // free variables zero
  Matrix center;                     // columns: E with [E, .] = 0
};

/// Solves [E, X] = j X for X in every g_j.
inline EulerSolution find_euler(const GradedLieAlgebra& g) {
  if (g.grading().modulus != 0) throw Error("find_euler: needs a Z-grading");
  const auto n = g.dim();
  Matrix a(g.ring(), n * n, n), b(g.ring(), n * n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = g.bracket().evaluate_basis({i, j, 0});
      for (std::size_t t = 0; t < n; ++t) a(j * n + t, i) = v[t];
    }
  }
  for (std::size_t j = 0; j < n; ++j) b(j * n + j, 0) = g.ring().from_int(g.grading().degree[j]);
  EulerSolution s;
  s.center = nullspace(a);
  if (auto x = solve(a, b)) s.particular = x->col(0);
  return s;
}

// ---------------------------------------------------------------- exp(ad x)

/// Smallest N with ad(x)^N = 0, if ad(x) is nilpotent.
inline std::optional<std::size_t> nilpotency_index(const Matrix& a) {
  Matrix p = Matrix::identity(a.ring(), a.rows());
  for (std::size_t k = 0; k <= a.rows() + 1; ++k) {
    if (p.is_zero()) return k;
    p = p * a;
  }
  return std::nullopt;
}

inline AlgebraMap exp_ad(const GradedLieAlgebra& g, const Vector& x, bool verify_automorphism = true) {
  Matrix a = g.ad(x);
  auto n = nilpotency_index(a);
  if (!n) throw Error("exp_ad: ad(x) is not nilpotent");
  if (*n >= 2) g.ring().require_invertible_up_to(static_cast<int>(*n) - 1, "exp_ad factorials");
  Matrix sum = Matrix::identity(g.ring(), g.dim());
  Matrix term = Matrix::identity(g.ring(), g.dim());
  for (std::size_t j = 1; j < *n; ++j) {
    term = g.ring().from_fraction(1, static_cast<long long>(j)) * (term * a);
    sum += term;
  }
  if (verify_automorphism && !is_automorphism(g, sum)) throw Error("exp_ad: result is not an automorphism");
  return {sum, MapKind::automorphism};
}

// ---------------------------------------------------------------- filtrations and orbits

/// Chain f_k, f_(k-1), ..., f_(-k) with f_(k+1) = 0 implicit.
struct LieFiltration {
  int k = 0;
  std::vector<Subspace> members;

  /// f_i with the clamping conventions outside [-k, k].
  Subspace f(int i, const Ring& ring, std::size_t dim) const {
    if (i > k) return Subspace::zero(ring, dim);
    if (i < -k) return Subspace::full(ring, dim);
    return members.at(static_cast<std::size_t>(k - i));
  }
  friend bool operator==(const LieFiltration&, const LieFiltration&) = default;
  friend bool operator<(const LieFiltration& a, const LieFiltration& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.members < b.members;
  }
};

/// f_i = g_i (+) g_(i+1) (+) ... (+) g_k for a Z-grading of g.
inline LieFiltration filtration_from_grading(const GradedLieAlgebra& g) {
  LieFiltration f;
  f.k = g.grading().k();
  for (int i = f.k; i >= -f.k; --i) {
    std::vector<std::size_t> idx;
    for (std::size_t b = 0; b < g.dim(); ++b) {
      if (g.grading().degree[b] >= i) idx.push_back(b);
    }
    f.members.push_back(Subspace::coordinate(g.ring(), g.dim(), idx));
  }
  return f;
}

inline Subspace image(const Matrix& m, const Subspace& s) {
  std::vector<Vector> vs;
  for (const auto& v : s.basis_vectors()) vs.push_back(m.apply(v));
  return Subspace::span(s.ring(), m.rows(), vs);
}

inline LieFiltration apply_map(const Matrix& m, const LieFiltration& f) {
  LieFiltration out{f.k, {}};
  for (const auto& s : f.members) out.members.push_back(image(m, s));
  return out;
}

/// [f_i, f_j] in f_(i+j) on basis pairs, with clamped indices.
inline Check filtration_compatible(const GradedLieAlgebra& g, const LieFiltration& f) {
  for (int i = f.k; i >= -f.k; --i) {
    for (int j = f.k; j >= -f.k; --j) {
      Subspace fi = f.f(i, g.ring(), g.dim()), fj = f.f(j, g.ring(), g.dim()), fij = f.f(i + j, g.ring(), g.dim());
      for (const auto& x : fi.basis_vectors()) {
        for (const auto& y : fj.basis_vectors()) {
          if (!fij.contains(g.br(x, y))) return {"filtration_bracket", false, Json{{"i", i}, {"j", j}}, nullptr};
        }
      }
    }
  }
  return {"filtration_bracket", true, nullptr, nullptr};
}

/// exp(ad x) for every nonzero x in g_1 and g_(-1), over a prime field.
inline std::vector<Matrix> elementary_generators(const GradedLieAlgebra& g) {
  std::vector<Matrix> gens;
  for (int sign : {1, -1}) {
    auto idx = g.grading().block(sign);
    if (idx.empty()) continue;
    for (const auto& c : all_vectors(g.ring(), idx.size())) {
      if (is_zero(c)) continue;
      Vector x(g.dim(), g.ring().zero());
      for (std::size_t t = 0; t < idx.size(); ++t) x[idx[t]] = c[t];
      gens.push_back(exp_ad(g, x, false).m);
    }
  }
  return gens;
}

struct OrbitResult {
  std::vector<LieFiltration> members;  // sorted
  bool closed = false;
  std::size_t levels = 0;
};

/// BFS closure of the seed under the elementary generators, up to the word length bound.
inline OrbitResult elementary_group_orbit(const GradedLieAlgebra& g, const LieFiltration& seed,
                                          std::size_t max_word_length) {
  if (!g.ring().is_prime_field()) throw Error("elementary_group_orbit: needs a prime field");
  auto gens = elementary_generators(g);
  std::set<LieFiltration> seen{seed};
  std::vector<LieFiltration> frontier{seed};
  OrbitResult out;
  while (!frontier.empty() && out.levels < max_word_length) {
    std::vector<LieFiltration> next;
    for (const auto& f : frontier) {
      for (const auto& m : gens) {
        LieFiltration h = apply_map(m, f);
        if (seen.insert(h).second) {
          next.push_back(h);
          require_within_cap(seen.size(), "orbit");
        }
      }
    }
    ++out.levels;
    frontier = std::move(next);
  }
  out.closed = frontier.empty();
  if (!out.closed) {
    // one more level without recording tells whether the bound was exact
    bool grows = false;
    for (const auto& f : frontier) {
      for (const auto& m : gens) {
        if (!seen.count(apply_map(m, f))) grows = true;
      }
    }
    out.closed = !grows;
  }
  out.members.assign(seen.begin(), seen.end());
  return out;
}

// ---------------------------------------------------------------- isomorphism search

/// Searches phi(e_i) = c_i f_(pi(i)) over permutations pi and scalings c_i
/// from the candidate set, returning the matrix of a bracket isomorphism.
inline std::optional<Matrix> find_scaled_permutation_isomorphism(const GradedLieAlgebra& g, const GradedLieAlgebra& h,
                                                                 const std::vector<Scalar>& candidates) {
  if (g.dim() != h.dim()) return std::nullopt;
  const auto n = g.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> choice(n, 0);
    while (true) {
      Matrix m(g.ring(), n, n);
      for (std::size_t i = 0; i < n; ++i) m(perm[i], i) = candidates[choice[i]];
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) {
          ok = m.apply(g.bracket().evaluate_basis({i, j, 0})) == h.br(m.col(i), m.col(j));
        }
      }
      if (ok) return m;
      std::size_t t = 0;
      while (t < n && ++choice[t] == candidates.size()) choice[t++] = 0;
      if (t == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace jgl
