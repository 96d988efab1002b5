#include <gtest/gtest.h>

#include "jgl/catalog.hpp"
#include "jgl/liealg.hpp"

using namespace jgl;

namespace {

const Ring Q = Ring::rational();
const Ring F5 = Ring::prime_field(5);

Vector vec(const Ring& r, std::initializer_list<long long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(r.from_int(x));
  return v;
}

bool check_passes(const Report& r, const std::string& name) {
  const Check* c = r.find(name);
  return c && c->pass;
}

}  // namespace

TEST(VerifyLie, Abelian) {
  auto g = catalog::abelian(Q, {1, 0, -1});
  EXPECT_TRUE(verify_lie(g).passed());
}

TEST(VerifyLie, Gl2WithEuler) {
  auto g = catalog::gl_3graded(1, 1, Q);
  EXPECT_EQ(*g.euler(), (Vector{Q.from_fraction(1, 2), Q.zero(), Q.zero(), Q.from_fraction(-1, 2)}));
  EXPECT_TRUE(verify_lie(g).passed());
}

TEST(VerifyLie, WrongEulerFails) {
  auto g = catalog::gl_3graded(1, 1, Q).with_euler(vec(Q, {1, 0, 0, -1}));
  Report r = verify_lie(g);
  EXPECT_FALSE(check_passes(r, "Euler"));
  EXPECT_TRUE(check_passes(r, "Jacobi"));
  EXPECT_FALSE(r.find("Euler")->witness.is_null());
}

TEST(VerifyLie, WrongGradingFails) {
  auto g = catalog::sl2(Q).with_grading(Grading{0, {1, 1, 0}});
  EXPECT_FALSE(check_passes(verify_lie(g), "grading"));
}

TEST(VerifyLie, BrokenJacobi) {
  // [e1, e2] = e3, [e1, e3] = e1: Jacobi fails on (e1, e2, e3)
  std::vector<TensorTerm> t{{{0, 1, 0}, 2, Q.one()},  {{1, 0, 0}, 2, -Q.one()},
                            {{0, 2, 0}, 0, Q.one()},  {{2, 0, 0}, 0, -Q.one()}};
  GradedLieAlgebra g(MultilinearMap(Q, {3, 3}, 3, t), Grading{2, {0, 0, 0}});
  Report r = verify_lie(g);
  EXPECT_TRUE(check_passes(r, "alternation"));
  EXPECT_FALSE(check_passes(r, "Jacobi"));
}

TEST(Z2, Sl2OddPart) {
  auto g = catalog::sl2(Q).with_grading(Grading{2, {1, 1, 0}});
  auto q = lts_from_z2(g);
  EXPECT_EQ(q.dim(), 2u);
  // [[e, f], e] = [h, e] = 2e
  EXPECT_EQ(q.r().evaluate(vec(Q, {1, 0}), vec(Q, {0, 1}), vec(Q, {1, 0})), vec(Q, {2, 0}));
  EXPECT_TRUE(verify(q).passed());
  EXPECT_THROW(lts_from_z2(catalog::sl2(Q)), Error);
}

TEST(Z2, StandardImbeddingRecoversLts) {
  auto q = jts_to_lts(polarized_jts(catalog::rectangular_pair(1, 2, Q)));
  auto g = standard_imbedding(q);
  EXPECT_TRUE(verify_lie(g).passed());
  EXPECT_EQ(lts_from_z2(g), q);
  auto minus = standard_imbedding(q, ImbeddingSign::minus);
  EXPECT_TRUE(verify_lie(minus).passed());
  EXPECT_NE(lts_from_z2(minus), q);
}

TEST(ThreeGraded, Gl2GivesScalarPair) {
  auto p = pair_from_3graded(catalog::gl_3graded(1, 1, Q));
  EXPECT_EQ(p.nplus(), 1u);
  EXPECT_EQ(p.tplus().evaluate_basis({0, 0, 0}), vec(Q, {2}));
  EXPECT_EQ(p, catalog::rectangular_pair(1, 1, Q));
}

TEST(ThreeGraded, Gl3GivesRectangular) {
  EXPECT_EQ(pair_from_3graded(catalog::gl_3graded(1, 2, F5)), catalog::rectangular_pair(1, 2, F5));
  EXPECT_THROW(pair_from_3graded(catalog::gl_graded(3, {1, 0, -1}, 1, Q)), Error);
}

TEST(Tkk, RoundTripOnCatalog) {
  for (const auto& e : catalog::standard_pairs(F5)) {
    if (e.pair.total_dim() > 6) continue;
    auto g = tkk(e.pair);
    EXPECT_TRUE(verify_lie(g).passed()) << e.name;
    EXPECT_EQ(pair_from_3graded(g), e.pair) << e.name;
  }
}

TEST(Tkk, RectangularOneOneIsSl2) {
  auto g = tkk(catalog::rectangular_pair(1, 1, Q));
  ASSERT_EQ(g.dim(), 3u);
  std::vector<Scalar> cands{Q.one(), -Q.one(), Q.from_int(2), Q.from_int(-2), Q.from_fraction(1, 2), Q.from_fraction(-1, 2)};
  auto iso = find_scaled_permutation_isomorphism(g, catalog::sl2(Q), cands);
  ASSERT_TRUE(iso);
  EXPECT_EQ(rank(*iso), 3u);
  EXPECT_FALSE(find_scaled_permutation_isomorphism(g, catalog::abelian(Q, {1, -1, 0}), cands));
}

TEST(Involution, GlGivesJts) {
  auto g = catalog::gl_3graded(1, 2, Q);
  auto theta = catalog::gl_involution(1, 2, Q);
  EXPECT_TRUE(is_involution(g, theta.m));
  auto j = jts_from_graded_involution(g, theta);
  EXPECT_EQ(j.dim(), 2u);
  EXPECT_TRUE(verify(j).passed());
  AlgebraMap id{Matrix::identity(Q, g.dim()), MapKind::involution};
  EXPECT_THROW(jts_from_graded_involution(g, id), Error);
}

TEST(Euler, Sl2) {
  auto g = catalog::sl2(Q).with_euler(std::nullopt);
  auto s = find_euler(g);
  ASSERT_TRUE(s.particular);
  EXPECT_EQ(*s.particular, (Vector{Q.zero(), Q.zero(), Q.from_fraction(1, 2)}));
  EXPECT_EQ(s.center.cols(), 0u);
}

TEST(Euler, Gl2HasCentralAmbiguity) {
  auto g = catalog::gl_3graded(1, 1, Q);
  auto s = find_euler(g);
  ASSERT_TRUE(s.particular);
  EXPECT_EQ(s.center.cols(), 1u);
  EXPECT_TRUE(verify_lie(g.with_euler(*s.particular)).passed());
  Vector diff = sub(*s.particular, *g.euler());
  EXPECT_TRUE(g.ad(diff).is_zero());
}

TEST(Euler, AbelianWithNonzeroDegreeHasNone) {
  EXPECT_FALSE(find_euler(catalog::abelian(Q, {1, -1})).particular);
}

TEST(Exp, AdOfE) {
  auto g = catalog::sl2(Q);
  auto m = exp_ad(g, vec(Q, {1, 0, 0}));
  EXPECT_EQ(m.m.apply(vec(Q, {0, 1, 0})), vec(Q, {-1, 1, 1}));
  EXPECT_TRUE(is_automorphism(g, m.m));
  EXPECT_EQ(nilpotency_index(g.ad(vec(Q, {1, 0, 0}))), 3u);
  EXPECT_THROW(exp_ad(g, vec(Q, {0, 0, 1})), Error);
}

TEST(Derivations, AdIsDerivation) {
  auto g = catalog::gl_3graded(1, 2, F5);
  for (std::size_t i = 0; i < g.dim(); ++i) EXPECT_TRUE(is_derivation(g, g.ad(g.basis(i))));
  EXPECT_FALSE(is_derivation(g, Matrix::identity(F5, g.dim())));
}

TEST(Filtration, GradingFiltrationIsCompatible) {
  auto g = catalog::gl_graded(3, {1, 0, -1}, 1, F5);
  auto f = filtration_from_grading(g);
  EXPECT_EQ(f.k, 2);
  EXPECT_EQ(f.f(3, F5, 9).dim(), 0u);
  EXPECT_EQ(f.f(-3, F5, 9).dim(), 9u);
  EXPECT_EQ(f.f(0, F5, 9).dim(), 6u);
  EXPECT_TRUE(filtration_compatible(g, f).pass);
}

TEST(Orbit, MatchesProjectiveCounts) {
  auto sl = catalog::sl2(F5);
  auto a = elementary_group_orbit(sl, filtration_from_grading(sl), 64);
  EXPECT_TRUE(a.closed);
  EXPECT_EQ(a.members.size(), 6u);
  auto gl = catalog::gl_3graded(1, 2, F5);
  auto b = elementary_group_orbit(gl, filtration_from_grading(gl), 64);
  EXPECT_TRUE(b.closed);
  EXPECT_EQ(b.members.size(), 31u);
  for (const auto& f : b.members) EXPECT_TRUE(filtration_compatible(gl, f).pass);
}

TEST(Orbit, NeedsPrimeField) {
  auto g = catalog::sl2(Q);
  EXPECT_THROW(elementary_group_orbit(g, filtration_from_grading(g), 4), Error);
}
