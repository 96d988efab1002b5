#pragma once

// Inner ideals, intrinsic subspaces of finite pair geometries, squeezed subspaces
// of Grassmannians, transversality of states and pure states of product geometries.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "flags.hpp"
#include "geom.hpp"

namespace jgl {

/// Sorted point (or dual point) indices.
using PointSet = std::vector<std::uint32_t>;

namespace detail {

/// Row-reduced span of vectors in F_p^d with small integer entries.
class ModpSpan {
 public:
  ModpSpan(std::uint32_t p, std::size_t d) : p_(p), d_(d) {}

  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the basis; returns the remainder.
  std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto c = v[piv_[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < d_; ++j) v[j] = (v[j] + (p_ - c) * rows_[r][j]) % p_;
    }
    return v;
  }

  bool contains(const std::vector<std::uint32_t>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
  }

  bool add(const std::vector<std::uint32_t>& v) {
    auto r = reduce(v);
    std::size_t pv = d_;
    for (std::size_t j = 0; j < d_; ++j) {
      if (r[j] != 0) {
        pv = j;
        break;
      }
    }
    if (pv == d_) return false;
    auto inv = inverse(r[pv]);
    for (auto& x : r) x = x * inv % p_;
    for (auto& row : rows_) {
      auto c = row[pv];
      if (c == 0) continue;
      for (std::size_t j = 0; j < d_; ++j) row[j] = (row[j] + (p_ - c) * r[j]) % p_;
    }
    rows_.push_back(std::move(r));
    piv_.push_back(pv);
    return true;
  }

  /// Every element of the span.
  std::vector<std::vector<std::uint32_t>> elements() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> coeff(rows_.size(), 0);
    while (true) {
      std::vector<std::uint32_t> v(d_, 0);
      for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t j = 0; j < d_; ++j) v[j] = (v[j] + coeff[r] * rows_[r][j]) % p_;
      out.push_back(std::move(v));
      std::size_t t = 0;
      while (t < coeff.size() && ++coeff[t] == p_) coeff[t++] = 0;
      if (t == coeff.size()) break;
    }
    return out;
  }

 private:
  std::uint32_t inverse(std::uint32_t a) const {
    std::uint32_t r = 1, b = a, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return r;
  }

  std::uint32_t p_;
  std::size_t d_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> piv_;
};

inline std::vector<std::uint32_t> diff_mod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                           std::uint32_t p) {
  std::vector<std::uint32_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + p - b[i]) % p;
  return out;
}

inline std::vector<std::uint32_t> add_mod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                          std::uint32_t p) {
  std::vector<std::uint32_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % p;
  return out;
}

/// Members of s lying in the chart of alpha.
inline PointSet chart_part(const FiniteGeometry& g, std::size_t alpha, const PointSet& s) {
  PointSet out;
  const auto& cp = g.chart(alpha).code_of_point;
  for (auto x : s)
    if (cp[x] >= 0) out.push_back(x);
  return out;
}

/// Difference span of the chart coordinates of `part` relative to its first member.
inline ModpSpan difference_span(const FiniteGeometry& g, std::size_t alpha, const PointSet& part) {
  ModpSpan span(g.p(), g.chart_dim());
  const auto& cp = g.chart(alpha).code_of_point;
  auto base = g.digits(static_cast<std::uint32_t>(cp[part.front()]));
  for (auto y : part) span.add(diff_mod(g.digits(static_cast<std::uint32_t>(cp[y])), base, g.p()));
  return span;
}

inline unsigned long long power(unsigned long long b, std::size_t e) {
  unsigned long long r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------- inner ideals

/// T+(b1, e, b2) in i for basis vectors b1, b2 of i and e of V-.
inline Check inner_ideal_check(const JordanPair& p, const Subspace& i) {
  if (i.ambient() != p.nplus()) throw Error("inner ideal: subspace is not in V+");
  auto bs = i.basis_vectors();
  for (std::size_t a = 0; a < bs.size(); ++a) {
    for (std::size_t b = a; b < bs.size(); ++b) {
      for (std::size_t e = 0; e < p.nminus(); ++e) {
        Vector y = unit_vector(p.ring(), p.nminus(), e);
        for (const auto& v : {p.tplus().evaluate(bs[a], y, bs[b]), p.tplus().evaluate(bs[b], y, bs[a])}) {
          if (!i.contains(v)) {
            return {"inner_ideal", false, Json{{"b1", to_json(bs[a])}, {"e", e}, {"b2", to_json(bs[b])}, {"value", to_json(v)}},
                    nullptr};
          }
        }
      }
    }
  }
  return {"inner_ideal", true, nullptr, nullptr};
}

inline bool is_inner_ideal(const JordanPair& p, const Subspace& i) { return inner_ideal_check(p, i).pass; }

// ---------------------------------------------------------------- intrinsic subspaces

/// In every chart meeting s, the chart image of s is a linear subspace through each of its points.
inline Check intrinsic_check(const FiniteGeometry& g, const PointSet& s) {
  if (s.empty()) throw Error("intrinsic: empty point set");
  for (std::size_t al = 0; al < g.num_duals(); ++al) {
    auto part = detail::chart_part(g, al, s);
    if (part.empty()) continue;
    auto span = detail::difference_span(g, al, part);
    if (detail::power(g.p(), span.rank()) != part.size()) {
      return {"intrinsic", false, Json{{"alpha", al}, {"chart_points", part.size()}, {"span_rank", span.rank()}}, nullptr};
    }
  }
  return {"intrinsic", true, nullptr, nullptr};
}

inline bool is_intrinsic(const FiniteGeometry& g, const PointSet& s) { return intrinsic_check(g, s).pass; }

/// Least intrinsic superset: adds the chart span of s in every chart meeting it, revisiting
/// a chart only when it gains points.
inline PointSet intrinsic_closure(const FiniteGeometry& g, const PointSet& s) {
  if (s.empty()) throw Error("intrinsic_closure: empty point set");
  std::vector<char> in(g.num_points(), 0), queued(g.num_duals(), 0);
  std::deque<std::uint32_t> work;
  auto touch = [&](std::uint32_t x) {
    for (auto al : g.charts_of(x)) {
      if (!queued[al]) {
        queued[al] = 1;
        work.push_back(al);
      }
    }
  };
  for (auto x : s) {
    in.at(x) = 1;
    touch(x);
  }
  const auto full = g.chart_size();
  while (!work.empty()) {
    auto al = work.front();
    work.pop_front();
    queued[al] = 0;
    const auto& ch = g.chart(al);
    PointSet part;
    for (auto x : ch.members)
      if (in[x]) part.push_back(x);
    if (part.empty() || part.size() == full) continue;
    auto span = detail::difference_span(g, al, part);
    if (detail::power(g.p(), span.rank()) == part.size()) continue;
    auto base = g.digits(static_cast<std::uint32_t>(ch.code_of_point[part.front()]));
    for (const auto& v : span.elements()) {
      auto y = static_cast<std::uint32_t>(ch.member_by_code[g.encode(detail::add_mod(base, v, g.p()))]);
      if (!in[y]) {
        in[y] = 1;
        touch(y);
      }
    }
  }
  PointSet out;
  for (std::uint32_t x = 0; x < g.num_points(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------- Grassmannian states

/// {E : f1 in E in f2}.
inline PointSet squeezed(const GrassTables& t, const Subspace& f1, const Subspace& f2) {
  if (!f2.contains(f1) || f1.dim() > t.geometry.a || f2.dim() < t.geometry.a) {
    throw Error("squeezed: need f1 in f2 and dim f1 <= a <= dim f2");
  }
  PointSet out;
  for (std::uint32_t x = 0; x < t.points.size(); ++x) {
    Subspace e = subspace_of(t.points[x]);
    if (e.contains(f1) && f2.contains(e)) out.push_back(x);
  }
  return out;
}

/// Dual points alpha with e1 in ker(alpha) in e2.
inline PointSet squeezed_duals(const GrassTables& t, const Subspace& e1, const Subspace& e2) {
  const auto kd = t.geometry.w - t.geometry.a;
  if (!e2.contains(e1) || e1.dim() > kd || e2.dim() < kd) throw Error("squeezed_duals: bad flag");
  PointSet out;
  for (std::uint32_t al = 0; al < t.duals.size(); ++al) {
    Subspace k = kernel_of(t.duals[al]);
    if (k.contains(e1) && e2.contains(k)) out.push_back(al);
  }
  return out;
}

/// (intersection, sum) of the subspaces of a nonempty point set.
inline std::pair<Subspace, Subspace> flag_hull(const std::vector<Subspace>& members) {
  Subspace lo = members.front(), hi = members.front();
  for (const auto& s : members) {
    lo = intersect(lo, s);
    hi = sum(hi, s);
  }
  return {lo, hi};
}

inline std::pair<Subspace, Subspace> point_flag(const GrassTables& t, const PointSet& s) {
  std::vector<Subspace> ms;
  for (auto x : s) ms.push_back(subspace_of(t.points[x]));
  return flag_hull(ms);
}

inline std::pair<Subspace, Subspace> dual_flag(const GrassTables& t, const PointSet& j) {
  std::vector<Subspace> ms;
  for (auto al : j) ms.push_back(kernel_of(t.duals[al]));
  return flag_hull(ms);
}

/// o+ = <e_1..e_a> and the chart of the dual with kernel <e_(a+1)..e_w>, identified with
/// (w-a) x a matrices X via X -> im [I; X].
struct BaseChart {
  JordanPair pair;
  std::uint32_t origin = 0;
  std::uint32_t dual = 0;
  std::vector<std::uint32_t> point_of;  // index X (base-p digits, row-major) -> point
};

inline BaseChart base_chart(const GrassTables& t) {
  const auto& g = t.geometry;
  const auto r = g.w - g.a;
  BaseChart b{catalog::rectangular_pair(r, g.a, g.ring), 0, 0, {}};
  std::vector<std::size_t> top(g.a), bottom(r);
  std::iota(top.begin(), top.end(), 0);
  std::iota(bottom.begin(), bottom.end(), g.a);
  b.origin = t.index(point_from_subspace(Subspace::coordinate(g.ring, g.w, top)));
  b.dual = t.index(dual_with_kernel(Subspace::coordinate(g.ring, g.w, bottom)));
  for (const auto& v : all_vectors(g.ring, r * g.a)) {
    Matrix f(g.ring, g.w, g.a);
    for (std::size_t i = 0; i < g.a; ++i) f(i, i) = g.ring.one();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < g.a; ++j) f(g.a + i, j) = v[i * g.a + j];
    b.point_of.push_back(t.index(make_point(f)));
  }
  return b;
}

inline PointSet embed(const BaseChart& b, const Subspace& i) {
  const auto p = i.ring().characteristic();
  detail::ModpSpan span(p, i.ambient());
  for (const auto& v : i.basis_vectors()) {
    std::vector<std::uint32_t> d;
    for (const auto& c : v) d.push_back(static_cast<std::uint32_t>(c.numerator()));
    span.add(d);
  }
  PointSet out;
  for (const auto& v : span.elements()) {
    std::uint32_t code = 0;
    for (auto c : v) code = code * p + c;
    out.push_back(b.point_of.at(code));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Points of s in the base chart, as the set of chart vectors.
inline PointSet restrict_to_base(const BaseChart& b, const PointSet& s) {
  std::set<std::uint32_t> in(s.begin(), s.end());
  PointSet out;
  for (auto x : b.point_of)
    if (in.count(x)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

/// Inner ideals of the base chart against squeezed subspaces through o+.
inline Report classify_intrinsic(const GrassTables& t) {
  const auto& g = t.geometry;
  if (g.chart_dim() > 4 || g.ring.characteristic() > 5) throw Error("classify_intrinsic: bound exceeded (chart dim <= 4 over F_p, p <= 5)");
  Report rep;
  BaseChart b = base_chart(t);
  const auto n = b.pair.nplus();
  std::map<PointSet, std::pair<Subspace, Subspace>> from_ideals;
  Json table = Json::array();
  std::size_t subspaces = 0, ideals = 0;
  bool closure_ok = true, consistency_ok = true, squeezed_ok = true, injective = true;
  Json first_bad;
  for (std::size_t d = 0; d <= n; ++d) {
    for_each_subspace(g.ring, n, d, [&](const Subspace& i) {
      ++subspaces;
      bool ideal = is_inner_ideal(b.pair, i);
      PointSet emb = embed(b, i);
      PointSet cl = intrinsic_closure(t.finite, emb);
      bool restricts = restrict_to_base(b, cl) == emb;
      if (restricts != ideal) {
        consistency_ok = false;
        if (first_bad.is_null()) first_bad = Json{{"subspace", to_json(i)}, {"inner_ideal", ideal}};
      }
      if (!ideal) return;
      ++ideals;
      auto [f1, f2] = point_flag(t, cl);
      PointSet sq = squeezed(t, f1, f2);
      if (sq != cl) squeezed_ok = false;
      if (!is_intrinsic(t.finite, cl)) closure_ok = false;
      if (!from_ideals.emplace(cl, std::make_pair(f1, f2)).second) injective = false;
      table.push_back(Json{{"ideal", to_json(i)}, {"dim", i.dim()}, {"f1", to_json(f1)}, {"f2", to_json(f2)},
                           {"points", cl.size()}});
    });
  }
  // every squeezed subspace through o+ comes from an inner ideal
  Subspace o = subspace_of(t.points[b.origin]);
  std::vector<Subspace> lower, upper;
  for (std::size_t d = 0; d <= g.w; ++d) {
    for_each_subspace(g.ring, g.w, d, [&](const Subspace& f) {
      if (d <= g.a && o.contains(f)) lower.push_back(f);
      if (d >= g.a && f.contains(o)) upper.push_back(f);
    });
  }
  std::set<PointSet> through_origin;
  for (const auto& f1 : lower)
    for (const auto& f2 : upper) through_origin.insert(squeezed(t, f1, f2));
  bool surjective = true;
  for (const auto& s : through_origin) surjective = surjective && from_ideals.count(s);
  rep.add("inner_ideal_closure_consistency", consistency_ok, first_bad, Json{{"subspaces", subspaces}});
  rep.add("closures_intrinsic", closure_ok, nullptr, nullptr);
  rep.add("closure_is_squeezed", squeezed_ok, nullptr, nullptr);
  rep.add("bijection", injective && surjective && from_ideals.size() == through_origin.size(), nullptr,
          Json{{"geometry", g.name()}, {"inner_ideals", ideals}, {"squeezed_through_origin", through_origin.size()},
               {"table", table}});
  return rep;
}

// ---------------------------------------------------------------- transversality of states

/// A Grassmannian and its dual Grassmannian (kernels), with the index dictionaries.
struct StatesTables {
  GrassTables primal;
  GrassTables dual;
  std::vector<std::uint32_t> dual_as_point;  // primal dual -> dual-side point (its kernel)
  std::vector<std::uint32_t> point_as_dual;  // primal point -> dual-side dual (kernel = the point)
};

inline StatesTables make_states_tables(const GrassGeometry& g) {
  StatesTables s{tabulate(g), tabulate(GrassGeometry(g.ring, g.w, g.w - g.a)), {}, {}};
  for (const auto& al : s.primal.duals) s.dual_as_point.push_back(s.dual.index(point_from_subspace(kernel_of(al))));
  for (const auto& x : s.primal.points) s.point_as_dual.push_back(s.dual.index(dual_with_kernel(subspace_of(x))));
  return s;
}

struct StatesTransversality {
  bool subspace = false;
  bool faithful_every_origin = false;
  bool faithful_some_origin = false;
  bool transversal = false;
  Json witness;
  Json to_json() const {
    Json j{{"subspace", subspace}, {"faithful_every_origin", faithful_every_origin},
           {"faithful_some_origin", faithful_some_origin}, {"transversal", transversal}};
    if (!witness.is_null()) j["witness"] = witness;
    return j;
  }
};

namespace detail {

struct Faithfulness {
  bool every = true;
  bool some = true;
  Json witness;
};

/// Do distinct members of `observers` induce distinct linear structures on s?
/// `chart_of(o)` is the chart index of observer o in g. Two observers with the same
/// chart part agree at an origin when the coordinate change between their charts is linear there.
template <class ChartOf>
Faithfulness faithfulness(const FiniteGeometry& g, const PointSet& s, const PointSet& observers, ChartOf chart_of) {
  Faithfulness out;
  std::map<PointSet, std::vector<std::uint32_t>> by_set;
  for (auto o : observers) by_set[chart_part(g, chart_of(o), s)].push_back(o);
  const auto d = g.chart_dim();
  for (const auto& [part, obs] : by_set) {
    if (part.empty() || obs.size() < 2) continue;
    for (std::size_t a = 0; a < obs.size(); ++a) {
      for (std::size_t b = a + 1; b < obs.size(); ++b) {
        const auto& ca = g.chart(chart_of(obs[a])).code_of_point;
        const auto& cb = g.chart(chart_of(obs[b])).code_of_point;
        std::size_t agreeing = 0;
        for (auto origin : part) {
          auto oa = g.digits(static_cast<std::uint32_t>(ca[origin]));
          auto ob = g.digits(static_cast<std::uint32_t>(cb[origin]));
          ModpSpan left(g.p(), d), graph(g.p(), 2 * d);
          for (auto y : part) {
            auto va = diff_mod(g.digits(static_cast<std::uint32_t>(ca[y])), oa, g.p());
            auto vb = diff_mod(g.digits(static_cast<std::uint32_t>(cb[y])), ob, g.p());
            left.add(va);
            va.insert(va.end(), vb.begin(), vb.end());
            graph.add(va);
          }
          if (graph.rank() == left.rank()) {
            ++agreeing;
            if (out.witness.is_null()) {
              out.witness = Json{{"observer", obs[a]}, {"other_observer", obs[b]}, {"origin", origin},
                                 {"shared_points", part.size()}};
            }
          }
        }
        if (agreeing > 0) out.every = false;
        if (agreeing == part.size()) out.some = false;
      }
    }
  }
  return out;
}

/// Every member of s (in g) that lies in the chart of some observer is a linear subspace there.
template <class ChartOf>
std::optional<Json> chart_linearity_defect(const FiniteGeometry& g, const PointSet& s, const PointSet& observers,
                                           ChartOf chart_of) {
  for (auto o : observers) {
    auto part = chart_part(g, chart_of(o), s);
    if (part.empty()) continue;
    auto span = difference_span(g, chart_of(o), part);
    if (power(g.p(), span.rank()) != part.size()) return Json{{"observer", o}, {"chart_points", part.size()}};
  }
  return std::nullopt;
}

}  // namespace detail

/// Subspace conditions on (i, j) in both directions, then faithfulness of j on i and of i on j.
inline StatesTransversality states_transversal(const StatesTables& st, const PointSet& i, const PointSet& j) {
  if (i.empty() || j.empty()) throw Error("states_transversal: empty state");
  const auto& fp = st.primal.finite;
  const auto& fd = st.dual.finite;
  StatesTransversality out;
  // i and j seen from the dual side: j as points, i as duals
  PointSet j_pts, i_duals;
  for (auto al : j) j_pts.push_back(st.dual_as_point[al]);
  for (auto x : i) i_duals.push_back(st.point_as_dual[x]);
  std::sort(j_pts.begin(), j_pts.end());
  auto chart_i = [](std::uint32_t al) { return al; };
  auto chart_j = [&](std::uint32_t x) { return st.point_as_dual[x]; };
  for (auto x : i) {
    bool partner = std::any_of(j.begin(), j.end(), [&](std::uint32_t al) { return fp.transversal(x, al); });
    if (!partner) {
      out.witness = Json{{"reason", "point without transversal partner"}, {"point", x}};
      return out;
    }
  }
  for (auto al : j) {
    bool partner = std::any_of(i.begin(), i.end(), [&](std::uint32_t x) { return fp.transversal(x, al); });
    if (!partner) {
      out.witness = Json{{"reason", "dual point without transversal partner"}, {"dual", al}};
      return out;
    }
  }
  if (auto w = detail::chart_linearity_defect(fp, i, j, chart_i)) {
    out.witness = Json{{"reason", "point set not linear in a chart"}, {"defect", *w}};
    return out;
  }
  if (auto w = detail::chart_linearity_defect(fd, j_pts, i, chart_j)) {
    out.witness = Json{{"reason", "dual set not linear in a chart"}, {"defect", *w}};
    return out;
  }
  out.subspace = true;
  auto f1 = detail::faithfulness(fp, i, j, chart_i);
  auto f2 = detail::faithfulness(fd, j_pts, i, chart_j);
  out.faithful_every_origin = f1.every && f2.every;
  out.faithful_some_origin = f1.some && f2.some;
  out.transversal = out.faithful_every_origin;
  if (!f1.witness.is_null()) out.witness = Json{{"reason", "duals inducing the same structure"}, {"collision", f1.witness}};
  else if (!f2.witness.is_null()) out.witness = Json{{"reason", "points inducing the same structure"}, {"collision", f2.witness}};
  return out;
}

/// E = f1 (+) e2 and E = f2 (+) e1 for chains f1 in f2 in E, e1 in e2 in E.
inline bool squeezed_flags_transversal(const std::pair<Subspace, Subspace>& f, const std::pair<Subspace, Subspace>& e) {
  auto cross = [](const Subspace& a, const Subspace& b) { return a.dim() + b.dim() == a.ambient() && direct_sum_check(a, b); };
  return cross(f.first, e.second) && cross(f.second, e.first);
}

struct StateFlag {
  std::pair<Subspace, Subspace> flag;
  PointSet set;
};

/// Every distinct squeezed set on one side, with its canonical flag (intersection, sum).
/// Canonical flags are those with f1 = f2 of dimension d or dim f1 < d < dim f2.
inline std::vector<StateFlag> canonical_states(const GrassTables& t, bool dual_side) {
  const auto& g = t.geometry;
  const std::size_t d = dual_side ? g.w - g.a : g.a;
  std::vector<StateFlag> out;
  auto push = [&](const Subspace& f1, const Subspace& f2) {
    out.push_back({{f1, f2}, dual_side ? squeezed_duals(t, f1, f2) : squeezed(t, f1, f2)});
  };
  for_each_subspace(g.ring, g.w, d, [&](const Subspace& s) { push(s, s); });
  for (std::size_t d1 = 0; d1 < d; ++d1) {
    for_each_subspace(g.ring, g.w, d1, [&](const Subspace& f1) {
      for (std::size_t d2 = d + 1; d2 <= g.w; ++d2) {
        for_each_subspace(g.ring, g.w, d2, [&](const Subspace& f2) {
          if (f2.contains(f1)) push(f1, f2);
        });
      }
    });
  }
  return out;
}

/// One coordinate flag (f1, f2) per canonical type: f1 = <e_1..e_d1>, f2 = <e_1..e_d2>.
inline std::vector<StateFlag> canonical_state_representatives(const GrassTables& t) {
  const auto& g = t.geometry;
  auto coord = [&](std::size_t k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    return Subspace::coordinate(g.ring, g.w, idx);
  };
  std::vector<StateFlag> out;
  out.push_back({{coord(g.a), coord(g.a)}, squeezed(t, coord(g.a), coord(g.a))});
  for (std::size_t d1 = 0; d1 < g.a; ++d1)
    for (std::size_t d2 = g.a + 1; d2 <= g.w; ++d2) out.push_back({{coord(d1), coord(d2)}, squeezed(t, coord(d1), coord(d2))});
  return out;
}

/// states_transversal against flag transversality of the canonical flags. With
/// representatives_only, the first side runs over one flag per GL(w)-orbit type.
inline Check states_flag_agreement(const StatesTables& st, bool representatives_only) {
  auto left = representatives_only ? canonical_state_representatives(st.primal) : canonical_states(st.primal, false);
  auto right = canonical_states(st.primal, true);
  unsigned long long pairs = 0, transversal = 0, readings_differ = 0;
  for (const auto& a : left) {
    if (point_flag(st.primal, a.set) != a.flag) throw Error("canonical flag mismatch");
    for (const auto& b : right) {
      ++pairs;
      auto r = states_transversal(st, a.set, b.set);
      bool expect = squeezed_flags_transversal(a.flag, b.flag);
      if (r.faithful_every_origin != r.faithful_some_origin) ++readings_differ;
      if (r.transversal) ++transversal;
      if (r.transversal != expect) {
        return {"states_vs_flags", false,
                Json{{"f1", to_json(a.flag.first)}, {"f2", to_json(a.flag.second)}, {"e1", to_json(b.flag.first)},
                     {"e2", to_json(b.flag.second)}, {"states", r.to_json()}, {"flags_transversal", expect}},
                nullptr};
      }
    }
  }
  return {"states_vs_flags", true, nullptr,
          Json{{"geometry", st.primal.geometry.name()}, {"mode", representatives_only ? "orbit_representatives" : "full"},
               {"pairs", pairs}, {"transversal_pairs", transversal}, {"readings_differ", readings_differ}}};
}

// ---------------------------------------------------------------- pure states

/// Product of m projective lines over F_p; the zero function takes the value <e_1> everywhere.
struct LineProduct {
  GrassTables line;
  FiniteGeometry product;
  std::size_t m = 0;
  std::uint32_t zero_value = 0;

  std::uint32_t component(std::uint32_t x, std::size_t i) const {
    for (std::size_t t = 0; t < i; ++t) x /= static_cast<std::uint32_t>(line.points.size());
    return x % static_cast<std::uint32_t>(line.points.size());
  }
  std::uint32_t zero_function() const {
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < m; ++i) x = x * static_cast<std::uint32_t>(line.points.size()) + zero_value;
    return x;
  }
  /// Functions equal to the zero value away from position p.
  PointSet line_at(std::size_t p) const {
    PointSet out;
    for (std::uint32_t x = 0; x < product.num_points(); ++x) {
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) ok = i == p || component(x, i) == zero_value;
      if (ok) out.push_back(x);
    }
    return out;
  }
};

inline LineProduct line_product(const Ring& ring, std::size_t m) {
  LineProduct lp;
  lp.line = tabulate(GrassGeometry(ring, 2, 1));
  lp.product = product_geometry(lp.line.finite, m);
  lp.m = m;
  lp.zero_value = lp.line.index(make_point(Matrix::from_ints(ring, {{1}, {0}})));
  return lp;
}

/// Minimal members among the closures of {0, f}, f a nonzero function, against {L_p}.
inline Report pure_states(const Ring& ring, std::size_t m) {
  if (m < 1 || m > 3 || ring.characteristic() != 5) throw Error("pure_states: bound exceeded (m <= 3 over F_5)");
  LineProduct lp = line_product(ring, m);
  const auto zero = lp.zero_function();
  std::set<PointSet> closures;
  for (std::uint32_t f = 0; f < lp.product.num_points(); ++f) {
    if (f == zero) continue;
    PointSet s{std::min(f, zero), std::max(f, zero)};
    closures.insert(intrinsic_closure(lp.product, s));
  }
  std::vector<PointSet> minimal;
  for (const auto& c : closures) {
    bool is_min = std::none_of(closures.begin(), closures.end(), [&](const PointSet& o) {
      return o != c && std::includes(c.begin(), c.end(), o.begin(), o.end());
    });
    if (is_min) minimal.push_back(c);
  }
  std::set<PointSet> expected;
  for (std::size_t p = 0; p < m; ++p) expected.insert(lp.line_at(p));
  std::set<PointSet> got(minimal.begin(), minimal.end());
  Json lines = Json::array();
  for (const auto& c : minimal) {
    Json support = Json::array();
    for (std::size_t p = 0; p < m; ++p)
      if (expected.count(c) && c == lp.line_at(p)) support.push_back(p);
    lines.push_back(Json{{"points", c.size()}, {"position", support}});
  }
  Report rep;
  rep.add("pure_states", got == expected, nullptr,
          Json{{"m", m}, {"functions", lp.product.num_points()}, {"distinct_closures", closures.size()},
               {"minimal", minimal.size()}, {"lines", lines}});
  bool all_intrinsic = std::all_of(minimal.begin(), minimal.end(), [&](const PointSet& c) { return is_intrinsic(lp.product, c); });
  rep.add("pure_states_intrinsic", all_intrinsic, nullptr, nullptr);
  return rep;
}

}  // namespace jgl
