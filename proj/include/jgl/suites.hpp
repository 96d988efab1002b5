#pragma once

#include <functional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "flags.hpp"
#include "geom.hpp"
#include "jordan.hpp"
#include "liealg.hpp"
#include "states.hpp"

namespace jgl::suites {

namespace detail {

inline std::vector<Ring> both_rings() { return {Ring::rational(), Ring::prime_field(5)}; }

inline CheckOptions basis_options() { return CheckOptions{}; }

inline CheckOptions exhaustive_options() {
  CheckOptions o;
  o.method = Method::exhaustive;
  o.linear_slots_on_basis = true;
  return o;
}

/// Jordan triple systems derived from the catalog: polarized pairs, and the pairs with T+ = T-.
inline std::vector<std::pair<std::string, JordanTripleSystem>> catalog_jts(const Ring& ring) {
  std::vector<std::pair<std::string, JordanTripleSystem>> out;
  for (const auto& e : catalog::standard_pairs(ring)) {
    out.push_back({"polarized(" + e.name + ")", polarized_jts(e.pair)});
    if (e.pair.nplus() == e.pair.nminus() && e.pair.tplus() == e.pair.tminus()) {
      out.push_back({e.name, JordanTripleSystem(e.pair.tplus())});
    }
  }
  return out;
}

}  // namespace detail

/// LJP1/LJP2 for every catalog pair over q and f5, complete basis method.
inline Report axioms() {
  Report r;
  for (const auto& ring : detail::both_rings()) {
    for (const auto& e : catalog::standard_pairs(ring)) r.merge(verify(e.pair, detail::basis_options()), ring.name() + "/" + e.name);
  }
  return r;
}

/// Fundamental formula over f5 for pairs of total dimension <= 6, exhaustive and polarized.
inline Report fundamental() {
  Report r;
  const Ring f5 = Ring::prime_field(5);
  std::size_t pairs = 0;
  for (const auto& e : catalog::standard_pairs(f5)) {
    if (e.pair.total_dim() > 6) continue;
    ++pairs;
    Report ex = check_fundamental(e.pair, detail::exhaustive_options());
    Report ba = check_fundamental(e.pair, detail::basis_options());
    r.merge(ex, e.name + "/exhaustive");
    r.merge(ba, e.name + "/basis");
    bool agree = true;
    for (const auto& c : ex.checks()) agree = agree && ba.find(c.name)->pass == c.pass;
    r.add(e.name + "/methods_agree", agree);
  }
  r.add("coverage", pairs > 0, nullptr, Json{{"pairs", pairs}});
  return r;
}

/// Commutativity and J2 of every homotope V+ with ._a, a over all of V-, dim V+ <= 3, f5.
inline Report meyberg() {
  Report r;
  const Ring f5 = Ring::prime_field(5);
  for (const auto& e : catalog::standard_pairs(f5)) {
    if (e.pair.nplus() > 3) continue;
    Json witness;
    std::size_t count = 0, invertible = 0;
    for (const auto& a : all_vectors(f5, e.pair.nminus())) {
      ++count;
      JordanAlgebra alg = homotopy_algebra(e.pair, a);
      if (alg.unit()) ++invertible;
      JordanAlgebra bare(alg.product());
      Report v = verify(bare, detail::exhaustive_options());
      if (!v.passed() && witness.is_null()) witness = Json{{"a", to_json(a)}, {"report", v.to_json()}};
    }
    r.add(e.name, witness.is_null(), witness, Json{{"elements", count}, {"invertible", invertible}});
  }
  return r;
}

/// a# and units in the scalar pair, no invertibles in rectangular(1,2), exact round trips.
inline Report invertibility_suite() {
  Report r;
  const Ring f5 = Ring::prime_field(5);
  JordanPair s = catalog::scalar_pair(f5);
  Vector a{f5.from_int(2)};
  auto inv = invertibility(s, a);
  const Scalar three = f5.from_int(3);
  bool sharp_ok = inv.invertible && inv.sharp && (*inv.sharp)[0] == three && three * a[0] == f5.one();
  r.add("scalar/sharp", sharp_ok, nullptr,
        Json{{"a", "2"}, {"sharp", inv.sharp ? (*inv.sharp)[0].to_string() : "none"}, {"inverse", a[0].inverse().to_string()}});
  JordanAlgebra h = homotopy_algebra(s, a);
  bool unit_ok = h.unit() && (*h.unit())[0] == three && h.mul(*h.unit(), Vector{f5.one()}) == Vector{f5.one()};
  r.merge(verify(h, detail::exhaustive_options()), "scalar/homotope");
  r.add("scalar/unit", unit_ok, nullptr, Json{{"unit", h.unit() ? (*h.unit())[0].to_string() : "none"}});

  JordanPair rect = catalog::rectangular_pair(1, 2, f5);
  Json found;
  std::size_t tried = 0;
  for (const auto& x : all_vectors(f5, rect.nminus())) {
    ++tried;
    if (invertibility(rect, x).invertible && found.is_null()) found = to_json(x);
  }
  r.add("rectangular(1,2)/no_invertible", found.is_null(), found, Json{{"elements", tried}});

  struct Case {
    std::string name;
    JordanPair pair;
    Vector unit;
  };
  std::vector<Case> cases{{"scalar", s, Vector{f5.one()}},
                          {"hermitian(2,+1)", catalog::hermitian_pair(2, 1, f5), Vector{f5.one(), f5.zero(), f5.one()}}};
  for (const auto& c : cases) {
    auto rt = roundtrip_pair(c.pair, c.unit, TripleConvention::doubled);
    r.merge(rt.report, c.name + "/roundtrip");
  }
  return r;
}

/// LT1-LT3 for every catalog-derived JTS; commutative ones give the zero LTS.
inline Report jordan_lie() {
  Report r;
  for (const auto& ring : detail::both_rings()) {
    for (const auto& [name, j] : detail::catalog_jts(ring)) {
      r.merge(verify(jts_to_lts(j), detail::basis_options()), ring.name() + "/" + name);
    }
    for (std::size_t m = 1; m <= 3; ++m) {
      JordanPair p = catalog::loop_pair(catalog::scalar_pair(ring), m);
      LieTripleSystem q = jts_to_lts(JordanTripleSystem(p.tplus()));
      r.add(ring.name() + "/loop(scalar," + std::to_string(m) + ")/zero_lts", q.r().is_zero());
    }
  }
  return r;
}

/// pair_from_3graded(tkk(p)) == p, and tkk(rectangular(1,1)) against sl2.
inline Report tkk_suite() {
  Report r;
  for (const auto& ring : detail::both_rings()) {
    for (const auto& e : catalog::standard_pairs(ring)) {
      GradedLieAlgebra g = tkk(e.pair);
      r.add(ring.name() + "/" + e.name + "/pair_roundtrip", pair_from_3graded(g) == e.pair, nullptr,
            Json{{"tkk_dim", g.dim()}});
    }
    GradedLieAlgebra g = tkk(catalog::rectangular_pair(1, 1, ring));
    std::vector<Scalar> candidates;
    for (long long n : {1, -1, 2, -2}) candidates.push_back(ring.from_int(n));
    candidates.push_back(ring.from_fraction(1, 2));
    candidates.push_back(ring.from_fraction(-1, 2));
    auto iso = find_scaled_permutation_isomorphism(g, catalog::sl2(ring), candidates);
    Json d{{"dim", g.dim()}};
    if (iso) d["isomorphism"] = to_json(*iso);
    r.add(ring.name() + "/tkk(rectangular(1,1))=sl2", g.dim() == 3 && iso.has_value(), nullptr, d);
  }
  return r;
}

/// Chart law, representative independence and affine independence on Gras_1(f5^2), Gras_2(f5^4).
inline Report geometry_laws() {
  Report r;
  const Ring f5 = Ring::prime_field(5);
  for (auto [w, a] : {std::pair<std::size_t, std::size_t>{2, 1}, {4, 2}}) {
    GrassTables t = tabulate(GrassGeometry(f5, w, a));
    const std::string prefix = t.geometry.name();
    Check law = chart_law_exhaustive(t);
    law.name = prefix + "/" + law.name;
    r.add(law);
    Check rep = representative_independence(t, 1, 100);
    rep.name = prefix + "/" + rep.name;
    r.add(rep);
    AffineSample sample;
    sample.exhaustive = w == 2;
    Check aff = verify_affine_independence(t, sample);
    aff.name = prefix + "/" + aff.name;
    r.add(aff);
  }
  return r;
}

/// M1-M3 for the dot-form orthopolarity.
inline Report symmetric_space() {
  Report r;
  const Ring f5 = Ring::prime_field(5);
  for (auto [w, a] : {std::pair<std::size_t, std::size_t>{2, 1}, {4, 2}}) {
    GrassTables t = tabulate(GrassGeometry(f5, w, a));
    r.merge(verify_symmetric_space(orthopolarity(Matrix::identity(f5, w)), t), t.geometry.name());
  }
  return r;
}

/// Module grading round trip and the Lie flag theorem on gl(2), gl(3).
inline Report flags_suite() {
  Report r;
  const Ring f5 = Ring::prime_field(5), f7 = Ring::prime_field(7);
  r.add(grading_roundtrip_check(f5, 4, 4, 1, 100));
  GradedLieAlgebra gl2 = catalog::gl_3graded(1, 1, f5);
  r.merge(lie_flag_theorem_check(gl2, opposite_filtration_from_grading(gl2), filtration_from_grading(gl2)).report,
          "gl(2)/f5");
  GradedLieAlgebra gl3 = catalog::gl_graded(3, {1, 0, -1}, 1, f7);
  r.merge(lie_flag_theorem_check(gl3, opposite_filtration_from_grading(gl3), filtration_from_grading(gl3)).report,
          "gl(3)/f7");
  std::string message;
  try {
    GradedLieAlgebra bad = catalog::gl_graded(3, {1, 0, -1}, 1, f5);
    lie_flag_theorem_check(bad, opposite_filtration_from_grading(bad), filtration_from_grading(bad));
  } catch (const Error& e) {
    message = e.what();
  }
  r.add("gl(3)/f5/rejected", !message.empty(), nullptr, Json{{"error", message}});
  return r;
}

/// x -> exp(x).e is a bijection from f_1 onto the transversal set.
inline Report exp_bijection() {
  Report r;
  const Ring f5 = Ring::prime_field(5);
  struct Case {
    std::string name;
    GradedLieAlgebra g;
    std::size_t expected;
  };
  for (const auto& c : {Case{"sl(2)", catalog::sl2(f5), 5}, Case{"gl(3)(1,2)", catalog::gl_3graded(1, 2, f5), 25}}) {
    auto b = bijection_check(c.g, filtration_from_grading(c.g));
    r.merge(b.report, c.name);
    r.add(c.name + "/counts", b.f1_size == c.expected && b.transversal_size == c.expected, nullptr,
          Json{{"f1", b.f1_size}, {"transversal", b.transversal_size}, {"expected", c.expected}});
  }
  return r;
}

/// Elementary group orbit of the base filtration against projective space counts.
inline Report orbit_suite() {
  Report r;
  const Ring f5 = Ring::prime_field(5);
  struct Case {
    std::string name;
    GradedLieAlgebra g;
    unsigned n;
  };
  for (const auto& c : {Case{"sl(2)", catalog::sl2(f5), 2}, Case{"gl(3)(1,2)", catalog::gl_3graded(1, 2, f5), 3}}) {
    auto orbit = elementary_group_orbit(c.g, filtration_from_grading(c.g), 64);
    auto expected = gaussian_binomial(5, c.n, 1);
    r.add(c.name + "/orbit", orbit.closed && orbit.members.size() == expected, nullptr,
          Json{{"orbit_size", orbit.members.size()}, {"gaussian_count", expected}, {"levels", orbit.levels}});
  }
  Check d2 = orbit_grassmannian_dictionary(1, 1, f5);
  d2.name = "gl(2)/" + d2.name;
  r.add(d2);
  Check d3 = orbit_grassmannian_dictionary(1, 2, f5);
  d3.name = "gl(3)(1,2)/" + d3.name;
  r.add(d3);
  return r;
}

/// Inner ideals against squeezed sets, states against flags, and pure states.
inline Report states_suite() {
  Report r;
  const Ring f5 = Ring::prime_field(5);
  for (auto [w, a] : {std::pair<std::size_t, std::size_t>{3, 1}, {4, 2}}) {
    GrassGeometry g(f5, w, a);
    StatesTables st = make_states_tables(g);
    Report c = classify_intrinsic(st.primal);
    for (Check ch : c.checks()) {
      if (ch.details.is_object() && ch.details.contains("table")) ch.details.erase("table");
      ch.name = g.name() + "/" + ch.name;
      r.add(ch);
    }
    Check agree = states_flag_agreement(st, w == 4);
    agree.name = g.name() + "/" + agree.name;
    r.add(agree);
  }
  for (std::size_t m = 2; m <= 3; ++m) r.merge(pure_states(f5, m), "lines(m=" + std::to_string(m) + ")");
  return r;
}

/// Searches the length-2 flag geometry of f5^4 for an origin-dependent affine combination;
/// the full flag geometry is searched the same way for comparison.
inline Report affine_failure() {
  Report r;
  const Ring f5 = Ring::prime_field(5);
  FlagGeometry fg(f5, 4, {1, 2});
  Check c = flag_affine_independence(fg, 4, 6, 10);
  Json d = c.details.is_null() ? Json::object() : c.details;
  d["geometry"] = fg.name();
  d["points"] = fg.points().size();
  r.add("witness", !c.pass, c.witness, d);

  FlagGeometry full(f5, 4, {1, 2, 3});
  Check cf = flag_affine_independence(full, 1, 4, 6);
  Json df = cf.details.is_null() ? Json::object() : cf.details;
  df["geometry"] = full.name();
  df["points"] = full.points().size();
  r.add("full_flag_contrast_witness", !cf.pass, cf.witness, df);
  return r;
}

struct Suite {
  std::string name;
  std::string criterion;
  std::function<Report()> run;
};

inline const std::vector<Suite>& registry() {
  static const std::vector<Suite> all{
      {"axioms", "LJP1/LJP2 on the catalog over q and f5", axioms},
      {"fundamental", "fundamental formula, exhaustive and polarized", fundamental},
      {"meyberg", "homotopes are Jordan algebras", meyberg},
      {"invertibility", "invertible elements and unital round trip", invertibility_suite},
      {"jordan-lie", "JTS to LTS functor", jordan_lie},
      {"tkk", "TKK round trip and sl(2)", tkk_suite},
      {"geometry-laws", "chart law, representatives, affine independence", geometry_laws},
      {"symmetric-space", "M1-M3 for the orthopolarity", symmetric_space},
      {"flags", "grading round trip and Lie flag theorem", flags_suite},
      {"exp-bijection", "exp(f_1).e = transversal set", exp_bijection},
      {"orbit", "orbit sizes against projective spaces", orbit_suite},
      {"states", "intrinsic subspaces, states and pure states", states_suite},
      {"affine-failure", "origin dependence in the flag geometry", affine_failure},
  };
  return all;
}

inline const Suite& find(const std::string& name) {
  for (const auto& s : registry()) {
    if (s.name == name) return s;
  }
  throw Error("unknown suite '" + name + "'");
}

}  // namespace jgl::suites
