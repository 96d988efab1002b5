#pragma once

// Grassmannian pair geometries: points, dual points, transversality, charts,
// the structure maps P_r and S, polarities and point reflections, plus
// tabulated finite geometries over F_p for exhaustive checks.

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "identity.hpp"
#include "report.hpp"
#include "subspace.hpp"

namespace jgl {

/// Points: a-dimensional subspaces of K^w (images of injective maps K^a -> K^w);
/// dual points: kernels of surjections K^w -> K^a.
struct GrassGeometry {
  Ring ring;
  std::size_t w = 0;
  std::size_t a = 0;

  GrassGeometry() = default;
  GrassGeometry(const Ring& r, std::size_t w_dim, std::size_t a_dim) : ring(r), w(w_dim), a(a_dim) {
    if (a < 1 || a >= w) throw Error("Grassmannian needs 1 <= a < w");
  }
  std::size_t chart_dim() const { return (w - a) * a; }
  std::string name() const { return "Gras_" + std::to_string(a) + "(" + ring.name() + "^" + std::to_string(w) + ")"; }
};

/// w x a matrix in column-echelon canonical form.
struct Point {
  Matrix rep;
  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& x, const Point& y) { return x.rep < y.rep; }
};

/// a x w matrix in row-echelon canonical form.
struct DualPoint {
  Matrix rep;
  friend bool operator==(const DualPoint&, const DualPoint&) = default;
  friend bool operator<(const DualPoint& x, const DualPoint& y) { return x.rep < y.rep; }
};

inline Point make_point(const Matrix& f) {
  if (rank(f) != f.cols()) throw Error("make_point: representative is not injective");
  return {canonical_form(f, EchelonMode::column)};
}

inline DualPoint make_dual(const Matrix& phi) {
  if (rank(phi) != phi.rows()) throw Error("make_dual: representative is not surjective");
  return {canonical_form(phi, EchelonMode::row)};
}

inline Point point_from_subspace(const Subspace& s) { return make_point(s.basis().transpose()); }
inline Subspace subspace_of(const Point& x) { return Subspace::from_columns(x.rep); }
/// ker(phi).
inline Subspace kernel_of(const DualPoint& alpha) { return Subspace::from_columns(nullspace(alpha.rep)); }
/// The dual point whose kernel is the given subspace (of codimension a).
inline DualPoint dual_with_kernel(const Subspace& k) { return make_dual(k.annihilator().basis()); }

inline bool transversal(const Point& x, const DualPoint& alpha) {
  return !determinant(alpha.rep * x.rep).is_zero();
}

/// W = im f (+) ker phi, the subspace form of transversality.
inline bool transversal_direct_sum(const Point& x, const DualPoint& alpha) {
  return direct_sum_check(subspace_of(x), kernel_of(alpha));
}

/// h (phi h)^{-1}: the representative of x normalized against alpha.
inline Matrix normalized_rep(const Matrix& h, const Matrix& phi) {
  auto inv = inverse(phi * h);
  if (!inv) throw Error("point is not transversal to the dual point");
  return h * *inv;
}

/// Affine chart alpha^T with origin x: y -> C where K C = n(y) - n(x), K a kernel basis of phi.
class Chart {
 public:
  Chart(const DualPoint& alpha, const Point& origin) : alpha_(alpha), origin_(origin) {
    if (!transversal(origin, alpha)) throw Error("chart: origin is not transversal to the dual point");
    kernel_ = nullspace(alpha.rep);
    n0_ = normalized_rep(origin.rep, alpha.rep);
  }
  std::size_t dim() const { return kernel_.cols() * n0_.cols(); }

  Vector apply(const Point& y) const {
    if (!transversal(y, alpha_)) throw Error("chart: point is outside the chart");
    Matrix diff = normalized_rep(y.rep, alpha_.rep) - n0_;
    auto c = solve(kernel_, diff);
    if (!c) throw Error("chart: internal inconsistency");
    return c->flatten();
  }
  Point invert(const Vector& c) const {
    Matrix cm = Matrix::unflatten(alpha_.rep.ring(), kernel_.cols(), n0_.cols(), c);
    return make_point(n0_ + kernel_ * cm);
  }
  const DualPoint& alpha() const { return alpha_; }
  const Point& origin() const { return origin_; }

 private:
  DualPoint alpha_;
  Point origin_;
  Matrix kernel_;
  Matrix n0_;
};

inline Chart chart(const DualPoint& alpha, const Point& x) { return Chart(alpha, x); }

/// P_r on raw representatives: [(1-r) f (phi f)^{-1} + r h (phi h)^{-1}].
inline Point p_r_raw(const Matrix& f, const Matrix& phi, const Matrix& h, const Scalar& r) {
  const Scalar one = r.ring().one();
  return make_point((one - r) * normalized_rep(f, phi) + r * normalized_rep(h, phi));
}

inline Point p_r(const Point& x, const DualPoint& alpha, const Point& y, const Scalar& r) {
  return p_r_raw(x.rep, alpha.rep, y.rep, r);
}

/// y +_(x, alpha) z: [n(y) + n(z) - n(x)].
inline Point s_add(const Point& x, const DualPoint& alpha, const Point& y, const Point& z) {
  return make_point(normalized_rep(y.rep, alpha.rep) + normalized_rep(z.rep, alpha.rep) -
                    normalized_rep(x.rep, alpha.rep));
}

// ---------------------------------------------------------------- polarities

struct Polarity {
  std::function<DualPoint(const Point&)> forward;
  std::function<Point(const DualPoint&)> backward;
};

/// forward(x) = [f^T B] (kernel x^perp), backward(alpha) = [B^{-1} phi^T].
inline Polarity orthopolarity(const Matrix& form) {
  if (!is_symmetric(form)) throw Error("orthopolarity: form must be symmetric");
  auto binv = inverse(form);
  if (!binv) throw Error("orthopolarity: form must be invertible");
  Matrix b = form, bi = *binv;
  return {[b](const Point& x) {
            if (x.rep.rows() != b.rows()) throw Error("orthopolarity: dimension mismatch");
            return make_dual(x.rep.transpose() * b);
          },
          [bi](const DualPoint& alpha) {
            if (alpha.rep.cols() != bi.rows()) throw Error("orthopolarity: dimension mismatch");
            return make_point(bi * alpha.rep.transpose());
          }};
}

inline bool non_isotropic(const Polarity& pol, const Point& x) { return transversal(x, pol.forward(x)); }

/// sigma_x(y) = P_{-1}(x, p+(x), y).
inline Point sigma(const Polarity& pol, const Point& x, const Point& y) {
  DualPoint px = pol.forward(x);
  if (!transversal(x, px)) throw Error("sigma: x is isotropic");
  if (!transversal(y, px)) throw Error("sigma: y is not in the chart of p+(x)");
  return p_r(x, px, y, -x.rep.ring().one());
}

/// Gras_1(K^2): the dual point with kernel y, i.e. [omega(y, .)] for the symplectic form.
inline DualPoint null_system(const Point& y) {
  if (y.rep.rows() != 2 || y.rep.cols() != 1) throw Error("null_system: defined for Gras_1(K^2)");
  Matrix j = Matrix::from_ints(y.rep.ring(), {{0, 1}, {-1, 0}});
  return make_dual(y.rep.transpose() * j);
}

// ---------------------------------------------------------------- enumeration

inline std::vector<Point> all_points(const GrassGeometry& g) {
  std::vector<Point> out;
  for_each_subspace(g.ring, g.w, g.a, [&](const Subspace& s) { out.push_back(point_from_subspace(s)); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<DualPoint> all_duals(const GrassGeometry& g) {
  std::vector<DualPoint> out;
  for_each_subspace(g.ring, g.w, g.a, [&](const Subspace& s) { out.push_back(make_dual(s.basis())); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Tabulated pair geometry over F_p whose charts are affine spaces F_p^d:
/// every dual carries its transversal points with coordinates (base-p codes)
/// relative to a reference origin.
class FiniteGeometry {
 public:
  struct ChartTable {
    std::vector<std::uint32_t> members;       // sorted point indices
    std::vector<std::uint32_t> code;          // code of members[k]
    std::vector<std::int32_t> member_by_code; // point index or -1
    std::vector<std::int32_t> code_of_point;  // code or -1 (not transversal)
  };

  FiniteGeometry() = default;
  FiniteGeometry(std::uint32_t p, std::size_t d, std::size_t npoints, std::size_t nduals)
      : p_(p), d_(d), npoints_(npoints), charts_(nduals), charts_of_(npoints) {
    space_ = 1;
    for (std::size_t i = 0; i < d; ++i) space_ *= p;
  }

  std::uint32_t p() const { return p_; }
  std::size_t chart_dim() const { return d_; }
  std::size_t chart_size() const { return space_; }
  std::size_t num_points() const { return npoints_; }
  std::size_t num_duals() const { return charts_.size(); }
  const ChartTable& chart(std::size_t alpha) const { return charts_.at(alpha); }
  bool transversal(std::size_t x, std::size_t alpha) const { return charts_[alpha].code_of_point[x] >= 0; }
  /// Duals whose chart contains x, in increasing order.
  const std::vector<std::uint32_t>& charts_of(std::size_t x) const { return charts_of_.at(x); }

  std::vector<std::uint32_t> digits(std::uint32_t code) const {
    std::vector<std::uint32_t> v(d_);
    for (std::size_t i = d_; i-- > 0;) {
      v[i] = code % p_;
      code /= p_;
    }
    return v;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& v) const {
    std::uint32_t c = 0;
    for (auto x : v) c = c * p_ + x;
    return c;
  }

  /// Installs chart alpha from (point, coordinate) pairs; checks bijectivity onto F_p^d.
  void set_chart(std::size_t alpha, std::vector<std::pair<std::uint32_t, std::uint32_t>> point_code) {
    std::sort(point_code.begin(), point_code.end());
    ChartTable t;
    t.member_by_code.assign(space_, -1);
    t.code_of_point.assign(npoints_, -1);
    for (auto [pt, c] : point_code) {
      if (c >= space_ || t.member_by_code[c] >= 0) throw Error("finite geometry: chart is not a bijection");
      t.members.push_back(pt);
      t.code.push_back(c);
      t.member_by_code[c] = static_cast<std::int32_t>(pt);
      t.code_of_point[pt] = static_cast<std::int32_t>(c);
    }
    if (t.members.size() != space_) throw Error("finite geometry: chart does not cover F_p^d");
    if (!charts_.at(alpha).members.empty()) throw Error("finite geometry: chart installed twice");
    for (auto pt : t.members) {
      auto& v = charts_of_[pt];
      v.insert(std::upper_bound(v.begin(), v.end(), static_cast<std::uint32_t>(alpha)), static_cast<std::uint32_t>(alpha));
    }
    charts_.at(alpha) = std::move(t);
  }

 private:
  std::uint32_t p_ = 0;
  std::size_t d_ = 0;
  std::size_t npoints_ = 0;
  std::size_t space_ = 1;
  std::vector<ChartTable> charts_;
  std::vector<std::vector<std::uint32_t>> charts_of_;
};

inline std::uint32_t encode_vector(const Vector& v) {
  std::uint32_t c = 0;
  for (const auto& s : v) c = c * s.modulus() + static_cast<std::uint32_t>(s.numerator());
  return c;
}

/// A Grassmannian over F_p with its points, duals and tabulated charts.
struct GrassTables {
  GrassGeometry geometry;
  std::vector<Point> points;
  std::vector<DualPoint> duals;
  std::map<Point, std::uint32_t> point_index;
  std::map<DualPoint, std::uint32_t> dual_index;
  FiniteGeometry finite;

  std::uint32_t index(const Point& x) const { return point_index.at(x); }
  std::uint32_t index(const DualPoint& a) const { return dual_index.at(a); }
};

/// Builds every chart with Chart::apply from the first transversal point.
inline GrassTables tabulate(const GrassGeometry& g) {
  if (!g.ring.is_prime_field()) throw Error("tabulate: needs a prime field");
  GrassTables t;
  t.geometry = g;
  t.points = all_points(g);
  t.duals = all_duals(g);
  require_within_cap(static_cast<unsigned long long>(t.points.size()) * t.duals.size(), "Grassmannian tabulation");
  for (std::uint32_t i = 0; i < t.points.size(); ++i) t.point_index[t.points[i]] = i;
  for (std::uint32_t i = 0; i < t.duals.size(); ++i) t.dual_index[t.duals[i]] = i;
  t.finite = FiniteGeometry(g.ring.characteristic(), g.chart_dim(), t.points.size(), t.duals.size());
  for (std::size_t al = 0; al < t.duals.size(); ++al) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pc;
    std::optional<Chart> ch;
    for (std::uint32_t x = 0; x < t.points.size(); ++x) {
      if (!transversal(t.points[x], t.duals[al])) continue;
      if (!ch) ch.emplace(t.duals[al], t.points[x]);
      pc.emplace_back(x, encode_vector(ch->apply(t.points[x])));
    }
    t.finite.set_chart(al, std::move(pc));
  }
  return t;
}

/// Product of m copies of a finite geometry: componentwise transversality and charts.
inline FiniteGeometry product_geometry(const FiniteGeometry& f, std::size_t m) {
  std::size_t np = 1, nd = 1;
  for (std::size_t i = 0; i < m; ++i) {
    np *= f.num_points();
    nd *= f.num_duals();
  }
  require_within_cap(static_cast<unsigned long long>(np) * nd, "product geometry");
  FiniteGeometry out(f.p(), f.chart_dim() * m, np, nd);
  std::uint32_t block = static_cast<std::uint32_t>(f.chart_size());
  for (std::size_t al = 0; al < nd; ++al) {
    std::vector<std::size_t> ad(m);
    for (std::size_t i = 0, r = al; i < m; ++i, r /= f.num_duals()) ad[i] = r % f.num_duals();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pc;
    for (std::size_t x = 0; x < np; ++x) {
      std::uint32_t code = 0;
      bool ok = true;
      std::size_t r = x;
      std::vector<std::uint32_t> comp(m);
      for (std::size_t i = 0; i < m && ok; ++i, r /= f.num_points()) {
        auto c = f.chart(ad[i]).code_of_point[r % f.num_points()];
        if (c < 0) ok = false;
        comp[i] = static_cast<std::uint32_t>(c);
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < m; ++i) code = code * block + comp[i];
      pc.emplace_back(static_cast<std::uint32_t>(x), code);
    }
    out.set_chart(al, std::move(pc));
  }
  return out;
}

// ---------------------------------------------------------------- verification

namespace detail {

/// Bytewise (a + b) mod p for packed residues < p < 128.
inline std::uint64_t swar_add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p_bytes, std::uint64_t bias) {
  std::uint64_t s = a + b;
  std::uint64_t ge = ((s + bias) >> 7) & 0x0101010101010101ULL;  // byte >= p
  return s - ge * (p_bytes & 0xFF);
}

inline std::uint64_t pack_residues(const Vector& v) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) out |= static_cast<std::uint64_t>(v[i].numerator()) << (8 * i);
  return out;
}

}  // namespace detail

/// chart(alpha, x).apply(P_r(x, alpha, y)) = r chart(alpha, x).apply(y) for every
/// alpha, x, y transversal to alpha and every r in F_p. The direct mode calls
/// p_r and Chart::apply on every tuple.
inline Check chart_law_exhaustive(const GrassTables& t, bool direct = false) {
  const auto& g = t.geometry;
  const std::uint32_t p = g.ring.characteristic();
  const std::size_t entries = g.w * g.a, d = g.chart_dim();
  const auto& fg = t.finite;
  Json details;
  details["geometry"] = g.name();
  unsigned long long tuples = 0;
  Json witness;

  if (!direct && entries <= 8 && d <= 8 && p < 64) {
    // Tabulated form: n(y) packed bytewise per chart, result identified through
    // a table from normalized representatives to point indices.
    std::uint64_t total_mats = 1;
    for (std::size_t i = 0; i < entries; ++i) total_mats *= p;
    require_within_cap(total_mats, "chart law span table");
    std::vector<std::int32_t> span(total_mats, -1);
    {
      Matrix m(g.ring, g.w, g.a);
      FpVectorOdometer odo(g.ring, entries);
      std::uint64_t code = 0;
      do {
        for (std::size_t i = 0; i < entries; ++i) m(i / g.a, i % g.a) = odo.value()[i];
        if (rank(m) == g.a) span[code] = static_cast<std::int32_t>(t.index(make_point(m)));
        ++code;
      } while (odo.next());
    }
    // little-endian byte i carries entry i; the code is sum entry_i p^(entries-1-i)
    std::vector<std::uint64_t> weight(entries);
    for (std::size_t i = 0; i < entries; ++i) {
      weight[i] = 1;
      for (std::size_t j = i + 1; j < entries; ++j) weight[i] *= p;
    }
    std::vector<std::vector<std::uint32_t>> lut(4, std::vector<std::uint32_t>(65536, 0));
    for (std::size_t chunk = 0; chunk < 4; ++chunk) {
      for (std::uint32_t v = 0; v < 65536; ++v) {
        std::uint64_t s = 0;
        for (std::size_t b = 0; b < 2; ++b) {
          std::size_t i = chunk * 2 + b;
          std::uint64_t digit = (v >> (8 * b)) & 0xFF;
          if (i < entries && digit < p) s += digit * weight[i];
        }
        lut[chunk][v] = static_cast<std::uint32_t>(s);
      }
    }
    const std::uint64_t p_bytes = 0x0101010101010101ULL * p;
    const std::uint64_t bias = 0x0101010101010101ULL * (128 - p);
    for (std::size_t al = 0; al < fg.num_duals() && witness.is_null(); ++al) {
      const auto& ct = fg.chart(al);
      const std::size_t n = ct.members.size();
      // scaled[r * n + k]: r n(member k) and r C(member k), packed
      std::vector<std::uint64_t> rep(n * p), crd(n * p);
      std::vector<std::int32_t> slot_of_point(fg.num_points(), -1);
      for (std::size_t k = 0; k < n; ++k) {
        slot_of_point[ct.members[k]] = static_cast<std::int32_t>(k);
        Matrix nm = normalized_rep(t.points[ct.members[k]].rep, t.duals[al].rep);
        auto digits = fg.digits(ct.code[k]);
        for (std::uint32_t r = 0; r < p; ++r) {
          Scalar rs = g.ring.from_int(r);
          Vector nv = scale(rs, nm.flatten());
          Vector cv;
          for (auto dg : digits) cv.push_back(rs * g.ring.from_int(dg));
          rep[r * n + k] = detail::pack_residues(nv);
          crd[r * n + k] = detail::pack_residues(cv);
        }
      }
      for (std::size_t xk = 0; xk < n && witness.is_null(); ++xk) {
        for (std::uint32_t r = 0; r < p && witness.is_null(); ++r) {
          const std::uint32_t rr = (p + 1 - r) % p;  // 1 - r
          const std::uint64_t ax = rep[rr * n + xk], cx = crd[rr * n + xk];
          const std::uint64_t* ry = &rep[r * n];
          const std::uint64_t* cy = &crd[r * n];
          for (std::size_t yk = 0; yk < n; ++yk) {
            std::uint64_t s = detail::swar_add_mod(ax, ry[yk], p_bytes, bias);
            std::uint32_t code = lut[0][s & 0xFFFF] + lut[1][(s >> 16) & 0xFFFF] + lut[2][(s >> 32) & 0xFFFF] +
                                 lut[3][(s >> 48) & 0xFFFF];
            std::int32_t pt = span[code];
            std::int32_t slot = pt < 0 ? -1 : slot_of_point[pt];
            std::uint64_t expect = detail::swar_add_mod(cx, cy[yk], p_bytes, bias);
            if (slot < 0 || crd[n + static_cast<std::size_t>(slot)] != expect) {
              witness = Json{{"alpha", al}, {"x", ct.members[xk]}, {"y", ct.members[yk]}, {"r", r}};
              break;
            }
          }
          tuples += n;
        }
      }
    }
    details["method"] = "tabulated";
  } else {
    for (std::size_t al = 0; al < fg.num_duals() && witness.is_null(); ++al) {
      const auto& ct = fg.chart(al);
      for (auto xi : ct.members) {
        Chart ch(t.duals[al], t.points[xi]);
        for (auto yi : ct.members) {
          Vector cy = ch.apply(t.points[yi]);
          for (const auto& r : g.ring.elements()) {
            ++tuples;
            Point res = p_r(t.points[xi], t.duals[al], t.points[yi], r);
            if (!(ch.apply(res) == scale(r, cy))) {
              witness = Json{{"alpha", al}, {"x", xi}, {"y", yi}, {"r", r.to_string()}};
              break;
            }
          }
          if (!witness.is_null()) break;
        }
        if (!witness.is_null()) break;
      }
    }
    details["method"] = "direct";
  }
  if (witness.is_null()) details["tuples"] = tuples;
  return {"chart_law", witness.is_null(), witness, details};
}

/// p_r computed from re-randomized representatives gives the same point.
inline Check representative_independence(const GrassTables& t, std::uint64_t first_seed, std::size_t seeds) {
  const auto& g = t.geometry;
  auto random_invertible = [&](std::mt19937_64& rng, std::size_t n) {
    while (true) {
      Matrix m(g.ring, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = g.ring.from_int(static_cast<long long>(rng() % g.ring.characteristic()));
      if (rank(m) == n) return m;
    }
  };
  for (std::size_t s = 0; s < seeds; ++s) {
    std::mt19937_64 rng(first_seed + s);
    std::size_t al = rng() % t.duals.size();
    const auto& ct = t.finite.chart(al);
    std::uint32_t xi = ct.members[rng() % ct.members.size()], yi = ct.members[rng() % ct.members.size()];
    Scalar r = g.ring.from_int(static_cast<long long>(rng() % g.ring.characteristic()));
    Point ref = p_r(t.points[xi], t.duals[al], t.points[yi], r);
    Matrix f = t.points[xi].rep * random_invertible(rng, g.a);
    Matrix h = t.points[yi].rep * random_invertible(rng, g.a);
    Matrix phi = random_invertible(rng, g.a) * t.duals[al].rep;
    Point alt = p_r_raw(f, phi, h, r);
    Matrix nf = normalized_rep(alt.rep, t.duals[al].rep);
    bool normalized = (phi * normalized_rep(f, phi) == Matrix::identity(g.ring, g.a)) &&
                      (t.duals[al].rep * nf == Matrix::identity(g.ring, g.a));
    if (!(alt == ref) || !normalized) {
      return {"representative_independence", false, Json{{"seed", first_seed + s}}, nullptr};
    }
  }
  return {"representative_independence", true, nullptr, Json{{"seeds", seeds}, {"first_seed", first_seed}}};
}

/// Origin-independence of y - z + w = S(x, S(x, y, P_{-1}(x, z)), w) on the given dual points,
/// triples and every origin of the chart.
template <class Combine>
Check affine_independence_check(const std::string& name, std::size_t alpha,
                                const std::vector<std::uint32_t>& origins,
                                const std::vector<std::array<std::uint32_t, 3>>& triples, Combine&& combine) {
  for (const auto& tr : triples) {
    std::optional<std::uint32_t> first;
    std::uint32_t first_origin = 0;
    for (auto x : origins) {
      std::uint32_t res = combine(alpha, x, tr[0], tr[1], tr[2]);
      if (!first) {
        first = res;
        first_origin = x;
      } else if (res != *first) {
        return {name, false,
                Json{{"alpha", alpha}, {"y", tr[0]}, {"z", tr[1]}, {"w", tr[2]}, {"origin", first_origin},
                     {"result", *first}, {"other_origin", x}, {"other_result", res}},
                nullptr};
      }
    }
  }
  return {name, true, nullptr, nullptr};
}

struct AffineSample {
  bool exhaustive = true;
  std::uint64_t seed = 1;
  std::size_t duals = 8;
  std::size_t triples = 16;
};

inline Check verify_affine_independence(const GrassTables& t, const AffineSample& sample) {
  auto combine = [&](std::size_t al, std::uint32_t x, std::uint32_t y, std::uint32_t z, std::uint32_t w) {
    const auto& a = t.duals[al];
    const auto& X = t.points[x];
    Point minus_z = p_r(X, a, t.points[z], -t.geometry.ring.one());
    Point res = s_add(X, a, s_add(X, a, t.points[y], minus_z), t.points[w]);
    return t.index(res);
  };
  std::mt19937_64 rng(sample.seed);
  unsigned long long combos = 0;
  std::vector<std::size_t> alphas;
  if (sample.exhaustive) {
    for (std::size_t al = 0; al < t.duals.size(); ++al) alphas.push_back(al);
  } else {
    for (std::size_t i = 0; i < sample.duals; ++i) alphas.push_back(rng() % t.duals.size());
  }
  for (auto al : alphas) {
    const auto& ms = t.finite.chart(al).members;
    std::vector<std::array<std::uint32_t, 3>> triples;
    if (sample.exhaustive) {
      for (auto y : ms)
        for (auto z : ms)
          for (auto w : ms) triples.push_back({y, z, w});
    } else {
      for (std::size_t i = 0; i < sample.triples; ++i)
        triples.push_back({ms[rng() % ms.size()], ms[rng() % ms.size()], ms[rng() % ms.size()]});
    }
    combos += static_cast<unsigned long long>(triples.size()) * ms.size();
    require_within_cap(combos, "affine independence");
    Check c = affine_independence_check("affine_independence", al, ms, triples, combine);
    if (!c.pass) return c;
  }
  Json d{{"geometry", t.geometry.name()}, {"mode", sample.exhaustive ? "exhaustive" : "sampled"}, {"combinations", combos}};
  if (!sample.exhaustive) {
    d["seed"] = sample.seed;
    d["duals"] = sample.duals;
    d["triples_per_dual"] = sample.triples;
  }
  return {"affine_independence", true, nullptr, d};
}

/// (M1)-(M3) for mu(x, y) = sigma_x(y) on the non-isotropic points, over all
/// tuples where every intermediate value is defined.
inline Report verify_symmetric_space(const Polarity& pol, const GrassTables& t) {
  const std::size_t n = t.points.size();
  std::vector<std::uint32_t> m;  // non-isotropic point indices
  std::vector<std::int32_t> pos(n, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (non_isotropic(pol, t.points[i])) {
      pos[i] = static_cast<std::int32_t>(m.size());
      m.push_back(i);
    }
  }
  // mu[i * n + y] for x = m[i], any point y; -1 when y is outside the chart of p+(x)
  std::vector<std::int32_t> mu(m.size() * n, -1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Point& x = t.points[m[i]];
    DualPoint px = pol.forward(x);
    const auto& ct = t.finite.chart(t.index(px));
    for (auto y : ct.members) mu[i * n + y] = static_cast<std::int32_t>(t.index(sigma(pol, x, t.points[y])));
  }
  auto mu_at = [&](std::uint32_t x, std::int32_t y) -> std::int32_t {
    if (y < 0 || pos[x] < 0) return -1;
    return mu[static_cast<std::size_t>(pos[x]) * n + static_cast<std::size_t>(y)];
  };

  Report r;
  Json w1, w2, w3;
  unsigned long long c1 = 0, c2 = 0, c3 = 0, c3_total = 0, closed_pairs = 0, defined_pairs = 0;
  for (auto x : m) {
    ++c1;
    if (mu_at(x, static_cast<std::int32_t>(x)) != static_cast<std::int32_t>(x) && w1.is_null()) w1 = Json{{"x", x}};
  }
  for (auto x : m) {
    for (std::uint32_t y = 0; y < n; ++y) {
      std::int32_t v = mu_at(x, static_cast<std::int32_t>(y));
      if (v < 0) continue;
      std::int32_t back = mu_at(x, v);
      if (back < 0) continue;
      ++c2;
      if (back != static_cast<std::int32_t>(y) && w2.is_null()) w2 = Json{{"x", x}, {"y", y}};
    }
  }
  for (auto x : m) {
    for (auto y : m) {
      std::int32_t xy = mu_at(x, static_cast<std::int32_t>(y));
      if (xy >= 0) {
        ++defined_pairs;
        if (pos[static_cast<std::size_t>(xy)] >= 0) ++closed_pairs;
      }
      for (auto z : m) {
        ++c3_total;
        std::int32_t yz = mu_at(y, static_cast<std::int32_t>(z));
        std::int32_t lhs = mu_at(x, yz);
        if (lhs < 0 || xy < 0) continue;
        std::int32_t xz = mu_at(x, static_cast<std::int32_t>(z));
        std::int32_t rhs = mu_at(static_cast<std::uint32_t>(xy), xz);
        if (rhs < 0) continue;
        ++c3;
        if (lhs != rhs && w3.is_null()) w3 = Json{{"x", x}, {"y", y}, {"z", z}};
      }
    }
  }
  r.add("M1", w1.is_null(), w1, Json{{"tuples", c1}});
  r.add("M2", w2.is_null(), w2, Json{{"defined_pairs", c2}});
  r.add("M3", w3.is_null(), w3, Json{{"defined_triples", c3}, {"candidate_triples", c3_total}});
  Json cov{{"geometry", t.geometry.name()},
           {"points", n},
           {"non_isotropic", m.size()},
           {"defined_pairs", defined_pairs},
           {"pairs_mapped_to_non_isotropic", closed_pairs},
           {"mu_preserves_non_isotropic", closed_pairs == defined_pairs}};
  r.add("coverage", true, nullptr, cov);
  return r;
}

/// x T null(y) iff x != y on Gras_1(K^2).
inline Check null_system_check(const GrassTables& t) {
  for (std::size_t x = 0; x < t.points.size(); ++x) {
    for (std::size_t y = 0; y < t.points.size(); ++y) {
      if (transversal(t.points[x], null_system(t.points[y])) != (x != y)) {
        return {"null_system", false, Json{{"x", x}, {"y", y}}, nullptr};
      }
    }
  }
  return {"null_system", true, nullptr, Json{{"points", t.points.size()}}};
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

inline Json to_json(const Point& x) { return Json{{"rep", to_json(x.rep)}}; }
inline Json to_json(const DualPoint& a) { return Json{{"rep", to_json(a.rep)}}; }

}  // namespace jgl
