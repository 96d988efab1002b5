#include <gtest/gtest.h>

#include "jgl/catalog.hpp"
#include "jgl/flags.hpp"

using namespace jgl;

namespace {

const Ring Q = Ring::rational();
const Ring F5 = Ring::prime_field(5);
const Ring F7 = Ring::prime_field(7);

Subspace coord(const Ring& r, std::size_t n, std::vector<std::size_t> idx) { return Subspace::coordinate(r, n, std::move(idx)); }

ModuleGrading standard_k3() { return {{coord(Q, 3, {0}), coord(Q, 3, {1}), coord(Q, 3, {2})}}; }

}  // namespace

TEST(ModuleFlags, FromGrading) {
  auto [fp, fm] = flags_from_grading(standard_k3());
  EXPECT_EQ(fp, make_flag({coord(Q, 3, {0}), coord(Q, 3, {0, 1}), Subspace::full(Q, 3)}));
  EXPECT_EQ(fm, make_flag({coord(Q, 3, {2}), coord(Q, 3, {1, 2}), Subspace::full(Q, 3)}));
  auto [a, b] = flags_from_grading({{Subspace::full(Q, 2)}});
  EXPECT_EQ(a.length(), 1u);
  EXPECT_EQ(a, b);
  auto [p2, m2] = flags_from_grading({{coord(Q, 2, {0}), coord(Q, 2, {1})}});
  EXPECT_EQ(m2.member(1), coord(Q, 2, {1}));
  EXPECT_THROW(flags_from_grading({{coord(Q, 2, {0}), coord(Q, 2, {0})}}), Error);
}

TEST(ModuleFlags, Transversality) {
  auto [fp, fm] = flags_from_grading(standard_k3());
  EXPECT_TRUE(flag_transversal(fm, fp));
  EXPECT_FALSE(flag_transversal(fp, fp));
  Flag other = make_flag({coord(Q, 3, {0}), coord(Q, 3, {0, 2}), Subspace::full(Q, 3)});
  EXPECT_FALSE(flag_transversal(other, fp));
  EXPECT_THROW(make_flag({coord(Q, 3, {0, 1}), coord(Q, 3, {0})}), Error);
}

TEST(ModuleFlags, GradingRecovery) {
  auto [fp, fm] = flags_from_grading(standard_k3());
  auto g = grading_from_transversal(fm, fp);
  EXPECT_EQ(g, standard_k3());
  EXPECT_EQ(intersect(fp.member(2), fm.member(2)), coord(Q, 3, {1}));
  Flag whole = make_flag({Subspace::full(Q, 3)});
  EXPECT_EQ(grading_from_transversal(whole, whole).blocks, std::vector<Subspace>{Subspace::full(Q, 3)});
  EXPECT_THROW(grading_from_transversal(fp, fp), Error);
}

TEST(ModuleFlags, RandomRoundTrips) {
  Check c = grading_roundtrip_check(F5, 4, 4, 1, 100);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.details["samples"], 100);
}

TEST(LieFlags, Gl2BasePair) {
  auto g = catalog::gl_3graded(1, 1, F5);
  auto res = lie_flag_theorem_check(g, opposite_filtration_from_grading(g), filtration_from_grading(g));
  EXPECT_TRUE(res.transversal);
  EXPECT_TRUE(res.report.passed());
  ASSERT_TRUE(res.euler);
  EXPECT_EQ(res.euler_center.cols(), 1u);
  EXPECT_TRUE(g.ad(sub(*res.euler, *g.euler())).is_zero());
  ASSERT_EQ(res.blocks.size(), 3u);
  EXPECT_EQ(res.blocks[2], g.block_space(1));
}

TEST(LieFlags, Gl3FiveGradingOverF7) {
  auto g = catalog::gl_graded(3, {1, 0, -1}, 1, F7);
  auto res = lie_flag_theorem_check(g, opposite_filtration_from_grading(g), filtration_from_grading(g));
  EXPECT_TRUE(res.transversal);
  EXPECT_TRUE(res.report.passed());
  EXPECT_THROW(lie_flag_theorem_check(catalog::gl_graded(3, {1, 0, -1}, 1, F5), filtration_from_grading(g),
                                      filtration_from_grading(g)),
               Error);
}

TEST(LieFlags, EqualFiltrationsAreNotTransversal) {
  auto g = catalog::sl2(F5);
  auto f = filtration_from_grading(g);
  auto res = lie_flag_theorem_check(g, f, f);
  EXPECT_FALSE(res.transversal);
  EXPECT_TRUE(res.report.find("transversal_iff_grading")->pass);
}

TEST(LieFlags, ExpActionAtZero) {
  auto g = catalog::sl2(F5);
  auto f = filtration_from_grading(g), e = opposite_filtration_from_grading(g);
  EXPECT_EQ(exp_action(g, f, Vector(3, F5.zero()), e), e);
  EXPECT_THROW(exp_action(g, f, g.basis(1), e), Error);
}

TEST(LieFlags, Bijection) {
  auto sl = catalog::sl2(F5);
  auto a = bijection_check(sl, filtration_from_grading(sl));
  EXPECT_EQ(a.f1_size, 5u);
  EXPECT_EQ(a.transversal_size, 5u);
  EXPECT_TRUE(a.report.passed());
  auto gl = catalog::gl_3graded(1, 2, F5);
  auto b = bijection_check(gl, filtration_from_grading(gl));
  EXPECT_EQ(b.f1_size, 25u);
  EXPECT_EQ(b.transversal_size, 25u);
  EXPECT_TRUE(b.report.passed());
}

TEST(InnerFiltration, BaseAndTranslate) {
  auto g = catalog::gl_3graded(1, 1, F5);
  auto base = inner_filtration_check(g, filtration_from_grading(g));
  ASSERT_TRUE(base.witness);
  EXPECT_EQ(base.witness->euler, *g.euler());

  auto sl = catalog::sl2(F5);
  auto moved = apply_map(exp_ad(sl, sl.basis(1)).m, filtration_from_grading(sl));
  EXPECT_NE(moved, filtration_from_grading(sl));
  auto res = inner_filtration_check(sl, moved);
  ASSERT_TRUE(res.witness);
  EXPECT_TRUE(res.report.passed());
  EXPECT_TRUE(verify_lie(sl.with_euler(res.witness->euler).with_grading(sl.grading(), std::nullopt)).passed());
}

TEST(InnerFiltration, IncompatibleChainRejected) {
  auto g = catalog::sl2(F5);
  Vector ef{F5.one(), F5.one(), F5.zero()};
  LieFiltration bad{1, {Subspace::span(F5, 3, {ef}), Subspace::span(F5, 3, {ef, g.basis(2)}), Subspace::full(F5, 3)}};
  auto res = inner_filtration_check(g, bad);
  EXPECT_FALSE(res.witness);
  EXPECT_FALSE(res.report.find("filtration_bracket")->pass);
}

TEST(OrbitDictionary, GrassmannianPoints) {
  EXPECT_TRUE(orbit_grassmannian_dictionary(1, 1, F5).pass);
  Check c = orbit_grassmannian_dictionary(1, 2, F5);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.details["points"], 31);
}

TEST(FlagGeometry, Counts) {
  FlagGeometry fg(F5, 3, {1, 2});
  EXPECT_EQ(fg.points().size(), 31u * 6u);
  EXPECT_EQ(fg.duals().size(), 31u * 6u);
  EXPECT_THROW(FlagGeometry(F5, 3, {2, 1}), Error);
  EXPECT_THROW(FlagGeometry(Q, 3, {1}), Error);
}

TEST(FlagGeometry, ChartCoordinatesRoundTrip) {
  FlagGeometry fg(F5, 3, {1, 2});
  const Flag& alpha = fg.duals()[0];
  auto ms = fg.chart_members(alpha);
  ASSERT_FALSE(ms.empty());
  const Flag& x = fg.points()[ms[0]];
  for (std::size_t i = 0; i < ms.size(); i += 5) {
    const Flag& y = fg.points()[ms[i]];
    EXPECT_EQ(fg.from_coordinate(x, fg.coordinate(alpha, x, y)), y);
  }
}

TEST(FlagGeometry, GrassmannianIsAffine) {
  EXPECT_TRUE(flag_affine_independence(FlagGeometry(F5, 2, {1}), 3, 6, 6).pass);
  EXPECT_TRUE(flag_affine_independence(FlagGeometry(F5, 3, {1, 2}), 2, 4, 5).pass);
}

TEST(FlagGeometry, FullFlagsDependOnOrigin) {
  Check c = flag_affine_independence(FlagGeometry(F5, 4, {1, 2, 3}), 1, 4, 6);
  EXPECT_FALSE(c.pass);
  ASSERT_FALSE(c.witness.is_null());
  EXPECT_NE(c.witness["result"], c.witness["other_result"]);
}
