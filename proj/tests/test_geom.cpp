#include <gtest/gtest.h>

#include "jgl/geom.hpp"

using namespace jgl;

namespace {

const Ring Q = Ring::rational();
const Ring F5 = Ring::prime_field(5);

Point line(const Ring& r, long long a, long long b) { return make_point(Matrix::from_ints(r, {{a}, {b}})); }
DualPoint row(const Ring& r, long long a, long long b) { return make_dual(Matrix::from_ints(r, {{a, b}})); }

/// <(1; t)> over Q for rational t = num/den.
Point graph(const Ring& r, long long num, long long den) {
  Matrix m(r, 2, 1);
  m(0, 0) = r.one();
  m(1, 0) = r.from_fraction(num, den);
  return make_point(m);
}

}  // namespace

TEST(Points, Canonicalization) {
  EXPECT_EQ(line(Q, 2, 2), line(Q, 1, 1));
  Matrix id = Matrix::from_ints(Q, {{1, 0}, {0, 1}, {0, 0}, {0, 0}});
  EXPECT_EQ(make_point(id).rep, id);
  Matrix other = Matrix::from_ints(Q, {{1, 1}, {1, -1}, {0, 0}, {0, 0}});
  EXPECT_EQ(make_point(other), make_point(id));
  EXPECT_THROW(make_point(Matrix::from_ints(Q, {{1, 2}, {2, 4}})), Error);
  EXPECT_THROW(make_dual(Matrix::from_ints(Q, {{0, 0}})), Error);
}

TEST(Transversality, Examples) {
  Point e1 = line(Q, 1, 0);
  EXPECT_FALSE(transversal(e1, dual_with_kernel(subspace_of(e1))));
  EXPECT_TRUE(transversal(e1, dual_with_kernel(subspace_of(line(Q, 0, 1)))));
}

TEST(Transversality, CriteriaAgreeOverF5) {
  GrassGeometry g(F5, 4, 2);
  auto pts = all_points(g);
  auto duals = all_duals(g);
  ASSERT_EQ(pts.size(), 806u);
  for (std::size_t i = 0; i < pts.size(); i += 7)
    for (std::size_t j = 0; j < duals.size(); j += 11)
      ASSERT_EQ(transversal(pts[i], duals[j]), transversal_direct_sum(pts[i], duals[j]));
}

TEST(Chart, Coordinates) {
  DualPoint alpha = row(Q, 1, 0);
  Chart c(alpha, line(Q, 1, 0));
  EXPECT_EQ(c.apply(line(Q, 1, 0)), (Vector{Q.zero()}));
  EXPECT_EQ(c.apply(graph(Q, 3, 4)), (Vector{Q.from_fraction(3, 4)}));
  EXPECT_THROW(c.apply(line(Q, 0, 1)), Error);
  EXPECT_THROW(Chart(alpha, line(Q, 0, 1)), Error);
}

TEST(Chart, RoundTripOverF5) {
  GrassGeometry g(F5, 4, 2);
  auto pts = all_points(g);
  auto duals = all_duals(g);
  for (std::size_t al = 0; al < duals.size(); al += 97) {
    std::optional<Chart> c;
    for (const auto& y : pts) {
      if (!transversal(y, duals[al])) continue;
      if (!c) c.emplace(duals[al], y);
      EXPECT_EQ(c->invert(c->apply(y)), y);
    }
  }
}

TEST(Operations, EndpointsAndScaling) {
  DualPoint inf = row(Q, 1, 0);
  Point x = graph(Q, 0, 1), y = graph(Q, 5, 1);
  EXPECT_EQ(p_r(x, inf, y, Q.zero()), x);
  EXPECT_EQ(p_r(x, inf, y, Q.one()), y);
  EXPECT_EQ(p_r(x, inf, y, Q.from_fraction(2, 3)), graph(Q, 10, 3));
  EXPECT_EQ(p_r(graph(F5, 0, 1), row(F5, 1, 0), graph(F5, 1, 1), F5.from_fraction(1, 2)), graph(F5, 3, 1));
}

TEST(Operations, Addition) {
  DualPoint inf = row(Q, 1, 0);
  Point o = graph(Q, 0, 1), y = graph(Q, 2, 1), z = graph(Q, 3, 1);
  EXPECT_EQ(s_add(o, inf, y, z), graph(Q, 5, 1));
  EXPECT_EQ(s_add(o, inf, o, z), z);
  EXPECT_EQ(s_add(o, inf, y, z), s_add(o, inf, z, y));
}

TEST(Polarity, Orthocomplement) {
  auto pol = orthopolarity(Matrix::identity(Q, 2));
  Point x = line(Q, 1, 1);
  EXPECT_EQ(kernel_of(pol.forward(x)), subspace_of(line(Q, 1, -1)));
  auto p5 = orthopolarity(Matrix::identity(F5, 2));
  for (const auto& y : all_points(GrassGeometry(F5, 3, 1))) {
    auto p3 = orthopolarity(Matrix::identity(F5, 3));
    EXPECT_EQ(p3.backward(p3.forward(y)), y);
  }
  EXPECT_FALSE(non_isotropic(p5, line(F5, 1, 2)));
  EXPECT_TRUE(non_isotropic(p5, line(F5, 1, 1)));
  EXPECT_THROW(orthopolarity(Matrix::from_ints(Q, {{1, 1}, {0, 1}})), Error);
  EXPECT_THROW(orthopolarity(Matrix::from_ints(Q, {{1, 1}, {1, 1}})), Error);
}

TEST(Polarity, SigmaInvertsCoordinate) {
  auto pol = orthopolarity(Matrix::identity(Q, 2));
  Point x = line(Q, 1, 1);
  EXPECT_EQ(sigma(pol, x, x), x);
  for (long long s : {2, 3, -5}) {
    Point y = line(Q, s, 1);
    EXPECT_EQ(sigma(pol, x, y), line(Q, 1, s));
    EXPECT_EQ(sigma(pol, x, sigma(pol, x, y)), y);
  }
  auto p5 = orthopolarity(Matrix::identity(F5, 2));
  EXPECT_THROW(sigma(p5, line(F5, 1, 2), line(F5, 1, 1)), Error);
}

TEST(Tables, ChartLawAndRepresentatives) {
  for (auto [w, a] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}}) {
    auto t = tabulate(GrassGeometry(F5, w, a));
    EXPECT_EQ(t.points.size(), gaussian_binomial(5, static_cast<unsigned>(w), static_cast<unsigned>(a)));
    EXPECT_TRUE(chart_law_exhaustive(t).pass) << w << "," << a;
    EXPECT_TRUE(representative_independence(t, 1, 5).pass) << w << "," << a;
  }
  auto small = tabulate(GrassGeometry(F5, 2, 1));
  EXPECT_TRUE(chart_law_exhaustive(small, true).pass);
  EXPECT_TRUE(null_system_check(small).pass);
}

TEST(Tables, AffineIndependence) {
  auto t = tabulate(GrassGeometry(F5, 2, 1));
  EXPECT_TRUE(verify_affine_independence(t, AffineSample{}).pass);
  auto big = tabulate(GrassGeometry(F5, 3, 1));
  AffineSample s;
  s.exhaustive = false;
  s.seed = 4;
  Check c = verify_affine_independence(big, s);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.details["mode"], "sampled");
}

TEST(Tables, SymmetricSpace) {
  for (auto [w, a] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}}) {
    auto t = tabulate(GrassGeometry(F5, w, a));
    Report r = verify_symmetric_space(orthopolarity(Matrix::identity(F5, w)), t);
    EXPECT_TRUE(r.passed()) << w;
    EXPECT_GT(r.find("M3")->details["defined_triples"].get<unsigned long long>(), 0u);
  }
}

TEST(Tables, NeedPrimeField) { EXPECT_THROW(tabulate(GrassGeometry(Q, 2, 1)), Error); }
