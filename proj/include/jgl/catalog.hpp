#pragma once

// Constructors for the standard example families of Jordan pairs and graded
// Lie algebras.

#include <string>
#include <vector>

#include "jordan.hpp"
#include "liealg.hpp"

namespace jgl::catalog {

namespace detail {

/// Pair on spans of matrices with T(X,Y,Z) = XYZ + ZYX on both sides.
inline JordanPair matrix_pair(const Ring& ring, const std::vector<Matrix>& plus, const std::vector<Matrix>& minus) {
  if (plus.empty() || minus.empty()) throw Error("matrix pair needs nonzero modules");
  const auto pr = plus[0].rows(), pc = plus[0].cols();
  std::vector<Vector> pf, mf;
  for (const auto& m : plus) pf.push_back(m.flatten());
  for (const auto& m : minus) mf.push_back(m.flatten());
  SpanCoordinates pcs(ring, pr * pc, pf), mcs(ring, pc * pr, mf);
  auto side = [&](const std::vector<Matrix>& a, const std::vector<Matrix>& b, const SpanCoordinates& target) {
    return tensor_from_closed_form(ring, {a.size(), b.size(), a.size()}, a.size(), [&](const BasisTuple& idx) {
      const Matrix &x = a[idx[0]], &y = b[idx[1]], &z = a[idx[2]];
      return target.require((x * y * z + z * y * x).flatten(), "matrix pair closure");
    });
  };
  return JordanPair(side(plus, minus, pcs), side(minus, plus, mcs));
}

inline std::vector<Matrix> elementary_matrices(const Ring& ring, std::size_t r, std::size_t c) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      Matrix m(ring, r, c);
      m(i, j) = ring.one();
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace detail

/// V+ = a x b matrices, V- = b x a matrices (row-major bases), T = XYZ + ZYX.
inline JordanPair rectangular_pair(std::size_t a, std::size_t b, const Ring& ring) {
  if (a < 1 || b < 1) throw Error("rectangular_pair: ranks must be >= 1");
  return detail::matrix_pair(ring, detail::elementary_matrices(ring, a, b), detail::elementary_matrices(ring, b, a));
}

inline JordanPair associative_pair(std::size_t n, const Ring& ring) {
  if (n < 1) throw Error("associative_pair: n must be >= 1");
  auto basis = detail::elementary_matrices(ring, n, n);
  return detail::matrix_pair(ring, basis, basis);
}

/// Basis of {X : X^T = sign X}: E_ii and E_ij + E_ji (sign +1) or E_ij - E_ji (sign -1), i < j row-major.
inline std::vector<Matrix> symmetric_basis(std::size_t n, int sign, const Ring& ring) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && sign < 0) continue;
      Matrix m(ring, n, n);
      m(i, j) = ring.one();
      if (i == j) {
        out.push_back(m);
        continue;
      }
      m(j, i) = sign > 0 ? ring.one() : -ring.one();
      out.push_back(m);
    }
  }
  return out;
}

inline JordanPair hermitian_pair(std::size_t n, int sign, const Ring& ring) {
  if (sign != 1 && sign != -1) throw Error("hermitian_pair: sign must be +1 or -1");
  if (n < 1) throw Error("hermitian_pair: n must be >= 1");
  if (sign < 0 && n < 2) throw Error("hermitian_pair: skew-symmetric 1x1 matrices form the zero module");
  auto basis = symmetric_basis(n, sign, ring);
  return detail::matrix_pair(ring, basis, basis);
}

/// T(x,y,z) = (x|z)y - (x|y)z - (z|y)x on K^n for a symmetric invertible Gram matrix.
inline JordanPair spin_pair(const Matrix& gram) {
  const Ring ring = gram.ring();
  const auto n = gram.rows();
  if (!is_symmetric(gram)) throw Error("spin_pair: form must be symmetric");
  if (!inverse(gram)) throw Error("spin_pair: form is degenerate");
  auto form = [&](std::size_t i, std::size_t j) { return gram(i, j); };
  auto t = tensor_from_closed_form(ring, {n, n, n}, n, [&](const BasisTuple& idx) {
    const auto x = idx[0], y = idx[1], z = idx[2];
    Vector out(n, ring.zero());
    out[y] += form(x, z);
    out[z] -= form(x, y);
    out[x] -= form(z, y);
    return out;
  });
  return JordanPair(t, t);
}

inline JordanPair spin_pair_dot(std::size_t n, const Ring& ring) { return spin_pair(Matrix::identity(ring, n)); }

/// 1-dimensional pair with T(x,y,z) = c xyz on both sides.
inline JordanPair scalar_pair(const Ring& ring, long long c = 2) {
  auto t = MultilinearMap(ring, {1, 1, 1}, 1, {TensorTerm{{0, 0, 0}, 0, ring.from_int(c)}});
  return JordanPair(t, t);
}

/// m-fold direct sum acting blockwise (functions on an m-point set).
inline JordanPair loop_pair(const JordanPair& p, std::size_t m) {
  if (m < 1) throw Error("loop_pair: m must be >= 1");
  auto blocks = [&](const MultilinearMap& t) {
    const auto a = t.slot_dim(0), b = t.slot_dim(1);
    std::vector<TensorTerm> terms;
    for (std::size_t q = 0; q < m; ++q) {
      for (const auto& term : t.terms()) {
        terms.push_back({{static_cast<std::uint32_t>(term.index[0] + q * a), static_cast<std::uint32_t>(term.index[1] + q * b),
                          static_cast<std::uint32_t>(term.index[2] + q * a)},
                         static_cast<std::uint32_t>(term.target + q * a), term.coeff});
      }
    }
    return MultilinearMap(t.ring(), {a * m, b * m, a * m}, a * m, std::move(terms));
  };
  return JordanPair(blocks(p.tplus()), blocks(p.tminus()));
}

[[noreturn]] inline void octonionic_pair() {
  throw Error("octonionic (exceptional) Jordan systems are out of scope");
}

// ---------------------------------------------------------------- Lie algebras

/// gl(n) with basis E_ij at index i*n + j, graded by (w_i - w_j)/den with Euler diag(w)/den.
inline GradedLieAlgebra gl_graded(std::size_t n, const std::vector<long long>& weights, long long den, const Ring& ring) {
  if (weights.size() != n) throw Error("gl_graded: need one weight per row");
  const auto dim = n * n;
  auto bracket = tensor_from_closed_form(ring, {dim, dim}, dim, [&](const BasisTuple& idx) {
    const auto i = idx[0] / n, j = idx[0] % n, k = idx[1] / n, l = idx[1] % n;
    Vector out(dim, ring.zero());
    if (j == k) out[i * n + l] += ring.one();
    if (l == i) out[k * n + j] -= ring.one();
    return out;
  });
  Grading gr{0, {}};
  for (std::size_t b = 0; b < dim; ++b) {
    long long d = weights[b / n] - weights[b % n];
    if (d % den != 0) throw Error("gl_graded: weights do not give an integer grading");
    gr.degree.push_back(static_cast<int>(d / den));
  }
  Vector euler(dim, ring.zero());
  for (std::size_t i = 0; i < n; ++i) euler[i * n + i] = ring.from_fraction(weights[i], den);
  return GradedLieAlgebra(bracket, gr, euler);
}

/// gl(a+b) with blocks: upper right = g_1, lower left = g_-1, Euler (1/2) blockdiag(1, -1).
inline GradedLieAlgebra gl_3graded(std::size_t a, std::size_t b, const Ring& ring) {
  if (a < 1 || b < 1) throw Error("gl_3graded: ranks must be >= 1");
  std::vector<long long> w;
  for (std::size_t i = 0; i < a + b; ++i) w.push_back(i < a ? 1 : -1);
  return gl_graded(a + b, w, 2, ring);
}

/// theta(X) = -S X^T S with S = blockdiag(I_a, -I_b).
inline AlgebraMap gl_involution(std::size_t a, std::size_t b, const Ring& ring) {
  const auto n = a + b, dim = n * n;
  Matrix m(ring, dim, dim);
  auto s = [&](std::size_t i) { return i < a ? 1 : -1; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // E_ij -> -S E_ji S = -s_j s_i E_ji
      m(j * n + i, i * n + j) = ring.from_int(-s(i) * s(j));
    }
  }
  return {m, MapKind::involution};
}

/// sl(2) with basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f; Euler h/2.
inline GradedLieAlgebra sl2(const Ring& ring) {
  std::vector<TensorTerm> terms;
  auto put = [&](std::uint32_t i, std::uint32_t j, std::uint32_t t, long long c) {
    terms.push_back({{i, j, 0}, t, ring.from_int(c)});
    terms.push_back({{j, i, 0}, t, ring.from_int(-c)});
  };
  put(0, 1, 2, 1);
  put(2, 0, 0, 2);
  put(2, 1, 1, -2);
  Vector euler{ring.zero(), ring.zero(), ring.from_fraction(1, 2)};
  return GradedLieAlgebra(MultilinearMap(ring, {3, 3}, 3, std::move(terms)), Grading{0, {1, -1, 0}}, euler);
}

/// Abelian algebra with the given degrees.
inline GradedLieAlgebra abelian(const Ring& ring, std::vector<int> degrees) {
  const auto n = degrees.size();
  return GradedLieAlgebra(MultilinearMap(ring, {n, n}, n), Grading{0, std::move(degrees)});
}

// ---------------------------------------------------------------- the standard list

struct Entry {
  std::string name;
  JordanPair pair;
};

/// The desk-scale family list used by the axiom and functor suites.
inline std::vector<Entry> standard_pairs(const Ring& ring) {
  std::vector<Entry> out;
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      out.push_back({"rectangular(" + std::to_string(a) + "," + std::to_string(b) + ")", rectangular_pair(a, b, ring)});
  for (std::size_t n = 1; n <= 2; ++n) out.push_back({"associative(" + std::to_string(n) + ")", associative_pair(n, ring)});
  for (std::size_t n = 1; n <= 3; ++n) out.push_back({"hermitian(" + std::to_string(n) + ",+1)", hermitian_pair(n, 1, ring)});
  for (std::size_t n = 2; n <= 3; ++n) out.push_back({"hermitian(" + std::to_string(n) + ",-1)", hermitian_pair(n, -1, ring)});
  for (std::size_t n = 1; n <= 4; ++n) out.push_back({"spin(" + std::to_string(n) + ")", spin_pair_dot(n, ring)});
  for (std::size_t m = 1; m <= 3; ++m) {
    out.push_back({"loop(scalar," + std::to_string(m) + ")", loop_pair(scalar_pair(ring), m)});
    out.push_back({"loop(rectangular(1,2)," + std::to_string(m) + ")", loop_pair(rectangular_pair(1, 2, ring), m)});
  }
  return out;
}

/// Builds a family member from its CLI parameters.
inline JordanPair by_name(const std::string& family, const std::vector<long long>& params, const Ring& ring) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) throw Error("family '" + family + "' takes " + std::to_string(k) + " parameter(s)");
    for (auto v : params) {
      if (v < 0 && !(family == "hermitian" || family == "skew_hermitian")) throw Error("negative parameter");
    }
  };
  auto u = [&](std::size_t i) {
    if (params[i] < 1 || params[i] > 32) throw Error("parameter out of desk-scale range");
    return static_cast<std::size_t>(params[i]);
  };
  if (family == "rectangular") {
    need(2);
    return rectangular_pair(u(0), u(1), ring);
  }
  if (family == "associative") {
    need(1);
    return associative_pair(u(0), ring);
  }
  if (family == "hermitian") {
    need(1);
    return hermitian_pair(u(0), 1, ring);
  }
  if (family == "skew_hermitian") {
    need(1);
    return hermitian_pair(u(0), -1, ring);
  }
  if (family == "spin") {
    need(1);
    return spin_pair_dot(u(0), ring);
  }
  if (family == "scalar") {
    need(0);
    return scalar_pair(ring);
  }
  if (family == "loop") {
    need(1);
    return loop_pair(scalar_pair(ring), u(0));
  }
  if (family == "octonionic" || family == "exceptional") octonionic_pair();
  throw Error("unknown family '" + family + "'");
}

}  // namespace jgl::catalog
