#include <gtest/gtest.h>

#include "jgl/states.hpp"

using namespace jgl;

namespace {

const Ring F5 = Ring::prime_field(5);

Subspace span(std::size_t n, std::vector<std::size_t> idx) { return Subspace::coordinate(F5, n, std::move(idx)); }

PointSet all_of(std::size_t n) {
  PointSet s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

}  // namespace

TEST(InnerIdeal, Examples) {
  auto r12 = catalog::rectangular_pair(1, 2, F5);
  EXPECT_TRUE(is_inner_ideal(r12, Subspace::zero(F5, 2)));
  EXPECT_TRUE(is_inner_ideal(r12, Subspace::full(F5, 2)));
  EXPECT_TRUE(is_inner_ideal(r12, span(2, {0})));
  auto r22 = catalog::rectangular_pair(2, 2, F5);
  EXPECT_TRUE(is_inner_ideal(r22, span(4, {0, 1})));
  EXPECT_TRUE(is_inner_ideal(r22, span(4, {0, 2})));
  Check c = inner_ideal_check(r22, span(4, {0, 3}));
  EXPECT_FALSE(c.pass);
  EXPECT_FALSE(c.witness.is_null());
  EXPECT_THROW(inner_ideal_check(r22, span(3, {0})), Error);
}

TEST(Intrinsic, PointsAndLines) {
  auto t = tabulate(GrassGeometry(F5, 3, 1));
  EXPECT_TRUE(is_intrinsic(t.finite, {0}));
  PointSet line = squeezed(t, Subspace::zero(F5, 3), span(3, {0, 1}));
  EXPECT_EQ(line.size(), 6u);
  EXPECT_TRUE(is_intrinsic(t.finite, line));
  PointSet triangle{t.index(point_from_subspace(span(3, {0}))), t.index(point_from_subspace(span(3, {1}))),
                    t.index(point_from_subspace(span(3, {2})))};
  std::sort(triangle.begin(), triangle.end());
  EXPECT_FALSE(is_intrinsic(t.finite, triangle));
  EXPECT_THROW(is_intrinsic(t.finite, {}), Error);
}

TEST(Intrinsic, GenericPairInGras2) {
  auto t = tabulate(GrassGeometry(F5, 4, 2));
  PointSet s{t.index(point_from_subspace(span(4, {0, 1}))), t.index(point_from_subspace(span(4, {2, 3})))};
  std::sort(s.begin(), s.end());
  EXPECT_FALSE(is_intrinsic(t.finite, s));
}

TEST(Closure, Examples) {
  auto t = tabulate(GrassGeometry(F5, 3, 1));
  EXPECT_EQ(intrinsic_closure(t.finite, {4}), PointSet{4});
  PointSet two{t.index(point_from_subspace(span(3, {0}))), t.index(point_from_subspace(span(3, {1})))};
  std::sort(two.begin(), two.end());
  EXPECT_EQ(intrinsic_closure(t.finite, two), squeezed(t, Subspace::zero(F5, 3), span(3, {0, 1})));
  PointSet three = two;
  three.push_back(t.index(point_from_subspace(span(3, {2}))));
  std::sort(three.begin(), three.end());
  EXPECT_EQ(intrinsic_closure(t.finite, three), all_of(t.points.size()));
}

TEST(Closure, ProductOfLines) {
  auto lp = line_product(F5, 2);
  const auto np = static_cast<std::uint32_t>(lp.line.points.size());
  const auto zero = lp.zero_function();
  auto with = [&](std::uint32_t c0, std::uint32_t c1) { return c0 + c1 * np; };
  std::uint32_t other = (lp.zero_value + 1) % np;
  std::uint32_t one_point = with(other, lp.zero_value);
  PointSet s{std::min(zero, one_point), std::max(zero, one_point)};
  EXPECT_EQ(intrinsic_closure(lp.product, s), lp.line_at(0));
  std::uint32_t both = with(other, other);
  PointSet t{std::min(zero, both), std::max(zero, both)};
  EXPECT_EQ(intrinsic_closure(lp.product, t).size(), static_cast<std::size_t>(np * np));
}

TEST(Squeezed, Counts) {
  auto t = tabulate(GrassGeometry(F5, 4, 2));
  EXPECT_EQ(squeezed(t, Subspace::zero(F5, 4), Subspace::full(F5, 4)).size(), t.points.size());
  EXPECT_EQ(squeezed(t, span(4, {0}), span(4, {0, 1, 2})).size(), 6u);
  EXPECT_EQ(squeezed(t, span(4, {0, 1}), span(4, {0, 1})).size(), 1u);
  EXPECT_THROW(squeezed(t, span(4, {0, 1, 2}), Subspace::full(F5, 4)), Error);
  EXPECT_EQ(squeezed_duals(t, span(4, {0}), span(4, {0, 1, 2})).size(), 6u);
}

TEST(Classify, Gras1AndGras2) {
  for (auto [w, a] : {std::pair<std::size_t, std::size_t>{3, 1}, {4, 2}}) {
    auto t = tabulate(GrassGeometry(F5, w, a));
    Report r = classify_intrinsic(t);
    EXPECT_TRUE(r.passed()) << w << "," << a;
  }
}

TEST(States, FullGeometryIsTransversal) {
  auto st = make_states_tables(GrassGeometry(F5, 2, 1));
  auto res = states_transversal(st, all_of(st.primal.points.size()), all_of(st.primal.duals.size()));
  EXPECT_TRUE(res.subspace);
  EXPECT_TRUE(res.faithful_every_origin);
  EXPECT_TRUE(res.transversal);
}

TEST(States, MatchFlagsOnGras1) {
  auto st = make_states_tables(GrassGeometry(F5, 3, 1));
  Check c = states_flag_agreement(st, false);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.details["readings_differ"], 0);
}

TEST(States, NestedLineAndPointAreNotTransversal) {
  auto st = make_states_tables(GrassGeometry(F5, 3, 1));
  const auto& t = st.primal;
  PointSet line = squeezed(t, Subspace::zero(F5, 3), span(3, {0, 1}));
  // dual points whose kernel contains <e1>: they miss every point of the line through <e1>
  PointSet j = squeezed_duals(t, span(3, {0}), span(3, {0, 1}));
  EXPECT_FALSE(states_transversal(st, line, j).transversal);
  EXPECT_THROW(states_transversal(st, {}, j), Error);
}

TEST(PureStates, MinimalLines) {
  for (std::size_t m = 1; m <= 3; ++m) {
    Report r = pure_states(F5, m);
    EXPECT_TRUE(r.passed()) << m;
    EXPECT_EQ(r.find("pure_states")->details["minimal"], m);
  }
  EXPECT_THROW(pure_states(F5, 4), Error);
}
