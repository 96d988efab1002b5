#pragma once

// Subspaces of K^n stored by their unique RREF basis.

#include <functional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace jgl {

class Subspace {
 public:
  Subspace() = default;

  /// Span of the given rows in K^ambient.
  static Subspace span(const Ring& ring, std::size_t ambient, const std::vector<Vector>& vectors) {
    Matrix m = Matrix::from_rows(ring, vectors, ambient);
    if (m.cols() != ambient) throw Error("subspace generator has wrong length");
    return Subspace(row_echelon(m).reduced, ambient);
  }

  static Subspace from_rows(const Matrix& rows) { return Subspace(row_echelon(rows).reduced, rows.cols()); }
  static Subspace from_columns(const Matrix& cols) { return from_rows(cols.transpose()); }

  static Subspace zero(const Ring& ring, std::size_t ambient) { return Subspace(Matrix(ring, 0, ambient), ambient); }
  static Subspace full(const Ring& ring, std::size_t ambient) {
    return Subspace(Matrix::identity(ring, ambient), ambient);
  }

  /// Span of the coordinate vectors e_i, i in indices.
  static Subspace coordinate(const Ring& ring, std::size_t ambient, const std::vector<std::size_t>& indices) {
    std::vector<Vector> vs;
    for (auto i : indices) vs.push_back(unit_vector(ring, ambient, i));
    return span(ring, ambient, vs);
  }

  const Ring& ring() const { return basis_.ring(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_list(); }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_) throw Error("dimension mismatch");
    Vector r = v;
    const auto piv = pivots();
    for (std::size_t i = 0; i < piv.size(); ++i) {
      if (r[piv[i]].is_zero()) continue;
      Scalar c = r[piv[i]];
      for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_(i, j);
    }
    return jgl::is_zero(r);
  }

  bool contains(const Subspace& o) const {
    check(o);
    for (std::size_t i = 0; i < o.dim(); ++i) {
      if (!contains(o.basis_.row(i))) return false;
    }
    return true;
  }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      for (std::size_t j = 0; j < ambient_; ++j) {
        if (!basis_(i, j).is_zero()) {
          p.push_back(j);
          break;
        }
      }
    }
    return p;
  }

  /// {u : <u, v> = 0 for all v in this}, for the standard bilinear pairing.
  Subspace annihilator() const {
    if (dim() == 0) return full(ring(), ambient_);
    return from_columns(nullspace(basis_));
  }

  /// Coordinates of v in the stored basis, or empty if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const {
    if (!contains(v)) return std::nullopt;
    Vector c;
    for (auto p : pivots()) c.push_back(v[p]);
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    return a.basis_ < b.basis_;
  }

  std::string to_string() const { return basis_.to_string(); }

  void check(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw Error("subspace dimension mismatch");
    if (!(ring() == o.ring())) throw Error("subspace ring mismatch");
  }

 private:
  Subspace(Matrix basis, std::size_t ambient) : basis_(std::move(basis)), ambient_(ambient) {}

  Matrix basis_;
  std::size_t ambient_ = 0;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
  a.check(b);
  auto rows = a.basis_vectors();
  for (auto& r : b.basis_vectors()) rows.push_back(r);
  return Subspace::span(a.ring(), a.ambient(), rows);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  a.check(b);
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

inline bool direct_sum_check(const Subspace& a, const Subspace& b) {
  a.check(b);
  return a.dim() + b.dim() == a.ambient() && sum(a, b).dim() == a.ambient();
}

/// A complement of a spanned by the unit vectors at the non-pivot columns.
inline Subspace complement(const Subspace& a) {
  std::vector<bool> piv(a.ambient(), false);
  for (auto p : a.pivots()) piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < a.ambient(); ++j) {
    if (!piv[j]) free.push_back(j);
  }
  return Subspace::coordinate(a.ring(), a.ambient(), free);
}

enum class CombineKind { sum, intersect, complement_of_a };

inline Subspace subspace_combine(const Subspace& a, const Subspace& b, CombineKind kind) {
  a.check(b);
  switch (kind) {
    case CombineKind::sum:
      return sum(a, b);
    case CombineKind::intersect:
      return intersect(a, b);
    case CombineKind::complement_of_a:
      return complement(a);
  }
  throw Error("unknown combine kind");
}

/// Calls visit on every d-dimensional subspace of F_p^n, in order of pivot
/// pattern and then lexicographic free entries.
inline void for_each_subspace(const Ring& ring, std::size_t n, std::size_t d,
                              const std::function<void(const Subspace&)>& visit) {
  if (!ring.is_prime_field()) throw Error("subspace enumeration requires a prime field");
  if (d > n) return;
  std::vector<std::size_t> piv(d);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t k, std::size_t start) {
    if (k == d) {
      // free positions: row i, columns j > piv[i] that are not pivots
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      std::vector<bool> is_piv(n, false);
      for (auto p : piv) is_piv[p] = true;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = piv[i] + 1; j < n; ++j) {
          if (!is_piv[j]) slots.emplace_back(i, j);
        }
      }
      Matrix m(ring, d, n);
      for (std::size_t i = 0; i < d; ++i) m(i, piv[i]) = ring.one();
      FpVectorOdometer odo(ring, slots.size());
      do {
        for (std::size_t s = 0; s < slots.size(); ++s) m(slots[s].first, slots[s].second) = odo.value()[s];
        visit(Subspace::from_rows(m));
      } while (odo.next());
      return;
    }
    for (std::size_t c = start; c + (d - k) <= n; ++c) {
      piv[k] = c;
      choose(k + 1, c + 1);
    }
  };
  choose(0, 0);
}

inline std::vector<Subspace> all_subspaces(const Ring& ring, std::size_t n, std::size_t d) {
  std::vector<Subspace> out;
  for_each_subspace(ring, n, d, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

/// Number of d-dimensional subspaces of F_q^n (Gaussian binomial).
inline unsigned long long gaussian_binomial(unsigned long long q, unsigned n, unsigned d) {
  if (d > n) return 0;
  unsigned long long num = 1, den = 1;
  for (unsigned i = 0; i < d; ++i) {
    unsigned long long a = 1, b = 1;
    for (unsigned j = 0; j < n - i; ++j) a *= q;
    for (unsigned j = 0; j < i + 1; ++j) b *= q;
    num *= (a - 1);
    den *= (b - 1);
  }
  return num / den;
}

}  // namespace jgl
