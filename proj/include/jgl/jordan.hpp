#pragma once

// Jordan pairs, Jordan triple systems, Jordan algebras and Lie triple systems.

#include <optional>
#include <string>

#include "identity.hpp"
#include "multilinear.hpp"
#include "report.hpp"

namespace jgl {

class JordanPair {
 public:
  JordanPair() = default;
  JordanPair(MultilinearMap tplus, MultilinearMap tminus) : tplus_(std::move(tplus)), tminus_(std::move(tminus)) {
    const auto np = tplus_.target_dim(), nm = tminus_.target_dim();
    if (tplus_.arity() != 3 || tminus_.arity() != 3) throw Error("Jordan pair tensors must be trilinear");
    if (tplus_.slot_dims() != std::vector<std::size_t>{np, nm, np} ||
        tminus_.slot_dims() != std::vector<std::size_t>{nm, np, nm}) {
      throw Error("Jordan pair tensor shapes do not match (V+, V-)");
    }
    if (!(tplus_.ring() == tminus_.ring())) throw Error("Jordan pair tensors over different rings");
  }

  const Ring& ring() const { return tplus_.ring(); }
  std::size_t nplus() const { return tplus_.target_dim(); }
  std::size_t nminus() const { return tminus_.target_dim(); }
  std::size_t dim(int sign) const { return sign > 0 ? nplus() : nminus(); }
  std::size_t total_dim() const { return nplus() + nminus(); }
  const MultilinearMap& tplus() const { return tplus_; }
  const MultilinearMap& tminus() const { return tminus_; }
  const MultilinearMap& t(int sign) const { return sign > 0 ? tplus_ : tminus_; }

  friend bool operator==(const JordanPair& a, const JordanPair& b) {
    return a.tplus_ == b.tplus_ && a.tminus_ == b.tminus_;
  }

 private:
  MultilinearMap tplus_, tminus_;
};

class JordanTripleSystem {
 public:
  JordanTripleSystem() = default;
  explicit JordanTripleSystem(MultilinearMap t) : t_(std::move(t)) {
    const auto n = t_.target_dim();
    if (t_.arity() != 3 || t_.slot_dims() != std::vector<std::size_t>{n, n, n}) throw Error("JTS tensor must be V^3 -> V");
  }
  const Ring& ring() const { return t_.ring(); }
  std::size_t dim() const { return t_.target_dim(); }
  const MultilinearMap& t() const { return t_; }
  friend bool operator==(const JordanTripleSystem&, const JordanTripleSystem&) = default;

 private:
  MultilinearMap t_;
};

class JordanAlgebra {
 public:
  JordanAlgebra() = default;
  JordanAlgebra(MultilinearMap product, std::optional<Vector> unit = std::nullopt)
      : product_(std::move(product)), unit_(std::move(unit)) {
    const auto n = product_.target_dim();
    if (product_.arity() != 2 || product_.slot_dims() != std::vector<std::size_t>{n, n}) {
      throw Error("algebra product must be V x V -> V");
    }
    if (unit_ && unit_->size() != n) throw Error("unit has wrong length");
  }
  const Ring& ring() const { return product_.ring(); }
  std::size_t dim() const { return product_.target_dim(); }
  const MultilinearMap& product() const { return product_; }
  const std::optional<Vector>& unit() const { return unit_; }
  Vector mul(const Vector& x, const Vector& y) const { return product_.evaluate(x, y); }

 private:
  MultilinearMap product_;
  std::optional<Vector> unit_;
};

class LieTripleSystem {
 public:
  LieTripleSystem() = default;
  explicit LieTripleSystem(MultilinearMap r) : r_(std::move(r)) {
    const auto n = r_.target_dim();
    if (r_.arity() != 3 || r_.slot_dims() != std::vector<std::size_t>{n, n, n}) throw Error("LTS tensor must be q^3 -> q");
  }
  const Ring& ring() const { return r_.ring(); }
  std::size_t dim() const { return r_.target_dim(); }
  const MultilinearMap& r() const { return r_; }
  friend bool operator==(const LieTripleSystem&, const LieTripleSystem&) = default;

 private:
  MultilinearMap r_;
};

// ---------------------------------------------------------------- identities

namespace identities {

inline Identity outer_symmetry(const std::string& name, const MultilinearMap& t) {
  return {name,
          {{"x", t.slot_dim(0)}, {"y", t.slot_dim(1)}, {"z", t.slot_dim(2)}},
          [&t](const std::vector<Vector>& a) { return sub(t.evaluate(a[0], a[1], a[2]), t.evaluate(a[2], a[1], a[0])); }};
}

/// T(u,v,T(x,y,z)) = T(T(u,v,x),y,z) - T(x,S(v,u,y),z) + T(x,y,T(u,v,z)).
inline Identity derivation_law(const std::string& name, const MultilinearMap& t, const MultilinearMap& s) {
  const auto n = t.slot_dim(0), m = t.slot_dim(1);
  return {name,
          {{"u", n}, {"v", m}, {"x", n}, {"y", m}, {"z", n}},
          [&t, &s](const std::vector<Vector>& a) {
            const auto &u = a[0], &v = a[1], &x = a[2], &y = a[3], &z = a[4];
            Vector lhs = t.evaluate(u, v, t.evaluate(x, y, z));
            Vector r1 = t.evaluate(t.evaluate(u, v, x), y, z);
            Vector r2 = t.evaluate(x, s.evaluate(v, u, y), z);
            Vector r3 = t.evaluate(x, y, t.evaluate(u, v, z));
            return sub(sub(lhs, r1), sub(r3, r2));
          }};
}

}  // namespace identities

inline Report verify(const JordanPair& p, const CheckOptions& opt = {}) {
  Report r;
  r.add(check_polynomial_identity(identities::outer_symmetry("LJP1+", p.tplus()), p.ring(), opt));
  r.add(check_polynomial_identity(identities::outer_symmetry("LJP1-", p.tminus()), p.ring(), opt));
  r.add(check_polynomial_identity(identities::derivation_law("LJP2+", p.tplus(), p.tminus()), p.ring(), opt));
  r.add(check_polynomial_identity(identities::derivation_law("LJP2-", p.tminus(), p.tplus()), p.ring(), opt));
  return r;
}

inline Report verify(const JordanTripleSystem& j, const CheckOptions& opt = {}) {
  Report r;
  r.add(check_polynomial_identity(identities::outer_symmetry("JP1", j.t()), j.ring(), opt));
  r.add(check_polynomial_identity(identities::derivation_law("JP2", j.t(), j.t()), j.ring(), opt));
  return r;
}

/// Method used for the non-multilinear identities when the caller does not choose.
inline CheckOptions default_nonlinear_options(const Ring& ring, std::size_t dim) {
  CheckOptions o;
  if (ring.is_prime_field() && dim <= 4) {
    o.method = Method::exhaustive;
    o.linear_slots_on_basis = true;
  }
  return o;
}

inline Report verify(const JordanAlgebra& alg, const CheckOptions& opt) {
  const auto& m = alg.product();
  const auto n = alg.dim();
  Report r;
  r.add(check_polynomial_identity(
      {"commutativity", {{"x", n}, {"y", n}},
       [&m](const std::vector<Vector>& a) { return sub(m.evaluate(a[0], a[1]), m.evaluate(a[1], a[0])); }},
      alg.ring(), opt));
  r.add(check_polynomial_identity(
      {"J2", {{"x", n, 3}, {"y", n}},
       [&m](const std::vector<Vector>& a) {
         const auto &x = a[0], &y = a[1];
         Vector x2 = m.evaluate(x, x);
         return sub(m.evaluate(x, m.evaluate(x2, y)), m.evaluate(x2, m.evaluate(x, y)));
       }},
      alg.ring(), opt));
  if (alg.unit()) {
    const Vector& e = *alg.unit();
    r.add(check_polynomial_identity({"unit", {{"x", n}},
                                     [&m, &e](const std::vector<Vector>& a) {
                                       Vector l = sub(m.evaluate(e, a[0]), a[0]);
                                       Vector rr = sub(m.evaluate(a[0], e), a[0]);
                                       l.insert(l.end(), rr.begin(), rr.end());
                                       return l;
                                     }},
                                    alg.ring(), CheckOptions{}));
  }
  return r;
}

inline Report verify(const JordanAlgebra& alg) { return verify(alg, default_nonlinear_options(alg.ring(), alg.dim())); }

inline Report verify(const LieTripleSystem& q, const CheckOptions& opt = {}) {
  const auto& t = q.r();
  const auto n = q.dim();
  Report r;
  r.add(check_polynomial_identity({"LT1", {{"x", n, 2}, {"z", n}},
                                   [&t](const std::vector<Vector>& a) { return t.evaluate(a[0], a[0], a[1]); }},
                                  q.ring(), opt));
  r.add(check_polynomial_identity(
      {"LT2", {{"x", n}, {"y", n}, {"z", n}},
       [&t](const std::vector<Vector>& a) {
         return add(add(t.evaluate(a[0], a[1], a[2]), t.evaluate(a[1], a[2], a[0])), t.evaluate(a[2], a[0], a[1]));
       }},
      q.ring(), opt));
  r.add(check_polynomial_identity(
      {"LT3", {{"u", n}, {"v", n}, {"x", n}, {"y", n}, {"z", n}},
       [&t](const std::vector<Vector>& a) {
         const auto &u = a[0], &v = a[1], &x = a[2], &y = a[3], &z = a[4];
         Vector lhs = t.evaluate(u, v, t.evaluate(x, y, z));
         Vector r1 = t.evaluate(t.evaluate(u, v, x), y, z);
         Vector r2 = t.evaluate(x, t.evaluate(u, v, y), z);
         Vector r3 = t.evaluate(x, y, t.evaluate(u, v, z));
         return sub(lhs, add(add(r1, r2), r3));
       }},
      q.ring(), opt));
  return r;
}

// ---------------------------------------------------------------- functors

/// T~((x,x'),(y,y'),(z,z')) = (T+(x,y',z), T-(x',y,z')) on q = V+ (+) V-.
inline JordanTripleSystem polarized_jts(const JordanPair& p) {
  const auto np = p.nplus(), n = p.total_dim();
  const Ring ring = p.ring();
  auto split = [np](std::size_t i) { return std::pair<int, std::size_t>{i < np ? 1 : -1, i < np ? i : i - np}; };
  return JordanTripleSystem(tensor_from_closed_form(ring, {n, n, n}, n, [&](const BasisTuple& idx) {
    Vector out(n, ring.zero());
    auto [sx, ix] = split(idx[0]);
    auto [sy, iy] = split(idx[1]);
    auto [sz, iz] = split(idx[2]);
    if (sx != sz || sy != -sx) return out;
    Vector v = p.t(sx).evaluate_basis({ix, iy, iz});
    const std::size_t off = sx > 0 ? 0 : np;
    for (std::size_t i = 0; i < v.size(); ++i) out[off + i] = v[i];
    return out;
  }));
}

/// R(X,Y)Z = T(X,Y,Z) - T(Y,X,Z).
inline LieTripleSystem jts_to_lts(const JordanTripleSystem& j) {
  const auto& t = j.t();
  const auto n = j.dim();
  return LieTripleSystem(tensor_from_closed_form(j.ring(), {n, n, n}, n, [&](const BasisTuple& idx) {
    return sub(t.evaluate_basis(idx), t.evaluate_basis({idx[1], idx[0], idx[2]}));
  }));
}

struct PairWithInvolution {
  JordanPair pair;
  Matrix tau;  // (x, x') -> (x', x) on V (+) V
};

inline PairWithInvolution pair_from_jts(const JordanTripleSystem& j) {
  const auto n = j.dim();
  Matrix tau(j.ring(), 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    tau(i, n + i) = j.ring().one();
    tau(n + i, i) = j.ring().one();
  }
  return {JordanPair(j.t(), j.t()), tau};
}

/// Checks that the swap-type map tau on V+ (+) V- exchanges T+ and T-.
inline bool is_pair_involution(const JordanPair& p, const Matrix& tau) {
  if (p.nplus() != p.nminus()) return false;
  const auto n = p.nplus();
  if (tau.rows() != 2 * n || tau.cols() != 2 * n) return false;
  if (!(tau * tau == Matrix::identity(p.ring(), 2 * n))) return false;
  Matrix a = tau.block(n, 0, n, n);  // V+ -> V-
  Matrix b = tau.block(0, n, n, n);  // V- -> V+
  if (!tau.block(0, 0, n, n).is_zero() || !tau.block(n, n, n, n).is_zero()) return false;
  const Matrix id = Matrix::identity(p.ring(), n);
  return p.tplus().transform({id, id, id}, a) == p.tminus().transform({a, b, a}, id) &&
         p.tminus().transform({id, id, id}, b) == p.tplus().transform({b, a, b}, id);
}

// ---------------------------------------------------------------- quadratic theory

/// Matrix of y -> 1/2 T^sign(a, y, a), from V^(-sign) to V^sign.
inline Matrix q_operator(const JordanPair& p, int sign, const Vector& a) {
  if (a.size() != p.dim(sign)) throw Error("q_operator: a has wrong length");
  const Scalar half = p.ring().from_fraction(1, 2);
  return half * p.t(sign).linear_in_slot(1, {a, Vector{}, a});
}

inline Vector q_apply(const MultilinearMap& t, const Vector& x, const Vector& y, const Scalar& half) {
  return scale(half, t.evaluate(x, y, x));
}

/// Q(Q(x)y) = Q(x)Q(y)Q(x), for both signs, as an identity in (x, y, z).
inline Report check_fundamental(const JordanPair& p, const CheckOptions& opt) {
  Report r;
  const Scalar half = p.ring().from_fraction(1, 2);
  for (int sign : {1, -1}) {
    const auto& ts = p.t(sign);
    const auto& to = p.t(-sign);
    Identity id{sign > 0 ? "FundamentalFormula+" : "FundamentalFormula-",
                {{"x", p.dim(sign), 4}, {"y", p.dim(-sign), 2}, {"z", p.dim(-sign), 1}},
                [&ts, &to, half](const std::vector<Vector>& a) {
                  const auto &x = a[0], &y = a[1], &z = a[2];
                  Vector w = q_apply(ts, x, y, half);
                  Vector lhs = q_apply(ts, w, z, half);
                  Vector u = q_apply(ts, x, z, half);
                  Vector v = q_apply(to, y, u, half);
                  return sub(lhs, q_apply(ts, x, v, half));
                }};
    r.add(check_polynomial_identity(id, p.ring(), opt));
  }
  return r;
}

inline CheckOptions default_fundamental_options(const JordanPair& p) {
  return default_nonlinear_options(p.ring(), std::max(p.nplus(), p.nminus()));
}

struct Invertibility {
  bool invertible = false;
  std::optional<Vector> sharp;
};

/// a in V- is invertible iff Q-(a): V+ -> V- is; then a# = Q-(a)^{-1} a.
inline Invertibility invertibility(const JordanPair& p, const Vector& a) {
  Matrix q = q_operator(p, -1, a);
  auto inv = inverse(q);
  if (!inv) return {};
  return {true, inv->apply(a)};
}

/// x ._a y = 1/2 T+(x, a, y); unit a# when a is invertible.
inline JordanAlgebra homotopy_algebra(const JordanPair& p, const Vector& a) {
  if (a.size() != p.nminus()) throw Error("homotopy_algebra: a must lie in V-");
  const auto n = p.nplus();
  const Scalar half = p.ring().from_fraction(1, 2);
  auto prod = tensor_from_closed_form(p.ring(), {n, n}, n, [&](const BasisTuple& idx) {
    return scale(half, p.tplus().evaluate(unit_vector(p.ring(), n, idx[0]), a, unit_vector(p.ring(), n, idx[1])));
  });
  return JordanAlgebra(prod, invertibility(p, a).sharp);
}

enum class TripleConvention { doubled, verbatim };

inline std::string convention_name(TripleConvention c) { return c == TripleConvention::doubled ? "doubled" : "verbatim"; }

/// T(x,y,z) = (x.y).z - y.(x.z) + x.(y.z), times 2 under the doubled convention.
inline JordanTripleSystem jts_from_unital(const JordanAlgebra& alg, TripleConvention conv) {
  if (!alg.unit()) throw Error("jts_from_unital: algebra has no unit");
  const auto n = alg.dim();
  const Ring ring = alg.ring();
  const Scalar factor = conv == TripleConvention::doubled ? ring.from_int(2) : ring.one();
  return JordanTripleSystem(tensor_from_closed_form(ring, {n, n, n}, n, [&](const BasisTuple& idx) {
    Vector x = unit_vector(ring, n, idx[0]), y = unit_vector(ring, n, idx[1]), z = unit_vector(ring, n, idx[2]);
    Vector v = add(sub(alg.mul(alg.mul(x, y), z), alg.mul(y, alg.mul(x, z))), alg.mul(x, alg.mul(y, z)));
    return scale(factor, v);
  }));
}

struct RoundTrip {
  Report report;
  bool exact = false;
  bool isomorphic = false;
  std::optional<Scalar> mu;  // scaling isomorphism (c, d) = (1, mu)
};

/// Compares the pair of jts_from_unital(homotopy_algebra(p, a)) with p.
inline RoundTrip roundtrip_pair(const JordanPair& p, const Vector& a, TripleConvention conv) {
  auto inv = invertibility(p, a);
  if (!inv.invertible) throw Error("roundtrip_pair: a is not invertible");
  const Ring ring = p.ring();
  const auto n = p.nplus();
  JordanTripleSystem j = jts_from_unital(homotopy_algebra(p, a), conv);
  RoundTrip out;
  out.exact = p.nplus() == p.nminus() && j.t() == p.tplus() && j.t() == p.tminus();
  out.report.add("exact_match", out.exact, nullptr, Json{{"convention", convention_name(conv)}});

  Matrix q = q_operator(p, -1, a);  // V+ -> V-
  MultilinearMap u = p.tplus().transform({Matrix::identity(ring, n), q, Matrix::identity(ring, n)},
                                         Matrix::identity(ring, n));
  std::optional<Scalar> mu;
  if (u.is_zero()) {
    if (j.t().is_zero()) mu = ring.one();
  } else {
    const auto& lead = u.terms().front();
    Scalar ratio = j.t().coefficient({lead.index[0], lead.index[1], lead.index[2]}, lead.target) / lead.coeff;
    if (j.t() == u.scaled(ratio)) mu = ratio;
  }
  bool iso = false;
  if (mu && !mu->is_zero()) {
    // h+ = id, h- = mu Q(a); the minus side needs h- T' = T-(h- x, y, h- z).
    Matrix hm = *mu * q;
    MultilinearMap lhs = j.t().transform({Matrix::identity(ring, n), Matrix::identity(ring, n), Matrix::identity(ring, n)}, hm);
    MultilinearMap rhs = p.tminus().transform({hm, Matrix::identity(ring, n), hm}, Matrix::identity(ring, p.nminus()));
    iso = lhs == rhs;
  }
  out.isomorphic = iso;
  out.mu = mu;
  Json d;
  if (mu) {
    d["c"] = "1";
    d["d"] = mu->to_string();
    d["cd"] = mu->to_string();
  }
  out.report.add("isomorphic", iso, nullptr, d);
  return out;
}

}  // namespace jgl
