#include <gtest/gtest.h>

#include "jgl/catalog.hpp"

using namespace jgl;
using namespace jgl::catalog;

namespace {

const Ring Q = Ring::rational();
const Ring F5 = Ring::prime_field(5);

Vector vec(const Ring& r, std::initializer_list<long long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(r.from_int(x));
  return v;
}

}  // namespace

TEST(Rectangular, Examples) {
  auto p = rectangular_pair(1, 1, Q);
  EXPECT_EQ(p.tplus().evaluate(vec(Q, {1}), vec(Q, {1}), vec(Q, {1})), vec(Q, {2}));
  auto r = rectangular_pair(2, 1, Q);
  EXPECT_EQ(r.tplus().evaluate(vec(Q, {1, 0}), vec(Q, {1, 0}), vec(Q, {1, 0})), vec(Q, {2, 0}));
  EXPECT_EQ(r.tplus().evaluate(vec(Q, {0, 0}), vec(Q, {3, 1}), vec(Q, {1, 2})), vec(Q, {0, 0}));
  EXPECT_EQ(r.nplus(), 2u);
  EXPECT_EQ(r.nminus(), 2u);
  EXPECT_THROW(rectangular_pair(0, 1, Q), Error);
}

TEST(Rectangular, MatchesGl3Graded) {
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      EXPECT_EQ(pair_from_3graded(gl_3graded(a, b, F5)), rectangular_pair(a, b, F5)) << a << "," << b;
}

TEST(Gl3Graded, Shapes) {
  auto g = gl_3graded(1, 1, Q);
  EXPECT_EQ(g.dim(), 4u);
  EXPECT_EQ(g.grading().block(1).size(), 1u);
  EXPECT_EQ(g.grading().block(-1).size(), 1u);
  EXPECT_TRUE(verify_lie(g).passed());
}

TEST(Associative, Examples) {
  EXPECT_EQ(associative_pair(1, Q), rectangular_pair(1, 1, Q));
  auto p = associative_pair(2, Q);
  Vector id = vec(Q, {1, 0, 0, 1});
  EXPECT_EQ(p.tplus().evaluate(id, id, id), vec(Q, {2, 0, 0, 2}));
}

TEST(Hermitian, Examples) {
  auto h = hermitian_pair(2, 1, Q);
  EXPECT_EQ(h.nplus(), 3u);
  EXPECT_EQ(h.tplus().evaluate_basis({0, 0, 0}), vec(Q, {2, 0, 0}));
  auto s = hermitian_pair(2, -1, Q);
  EXPECT_EQ(s.nplus(), 1u);
  EXPECT_EQ(s.tplus().evaluate_basis({0, 0, 0}), vec(Q, {-2}));
  EXPECT_THROW(hermitian_pair(1, -1, Q), Error);
  EXPECT_THROW(hermitian_pair(2, 0, Q), Error);
}

TEST(Hermitian, RestrictionOfAssociative) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto h = hermitian_pair(n, 1, F5);
    auto a = associative_pair(n, F5);
    auto basis = symmetric_basis(n, 1, F5);
    std::vector<Vector> cols;
    for (const auto& m : basis) cols.push_back(m.flatten());
    Matrix inc = Matrix::from_columns(F5, n * n, cols);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t k = 0; k < basis.size(); ++k)
          EXPECT_EQ(inc.apply(h.tplus().evaluate_basis({i, j, k})), a.tplus().evaluate(cols[i], cols[j], cols[k]));
  }
}

TEST(Spin, Examples) {
  auto p = spin_pair_dot(2, Q);
  EXPECT_EQ(p.tplus().evaluate_basis({0, 0, 0}), vec(Q, {-1, 0}));
  EXPECT_EQ(p.tplus().evaluate_basis({0, 1, 0}), vec(Q, {0, 1}));
  EXPECT_EQ(p.tplus(), p.tminus());
  EXPECT_THROW(spin_pair(Matrix::from_ints(Q, {{1, 1}, {1, 1}})), Error);
  EXPECT_THROW(spin_pair(Matrix::from_ints(Q, {{1, 2}, {0, 1}})), Error);
  EXPECT_TRUE(verify(spin_pair(Matrix::from_ints(Q, {{0, 1}, {1, 0}}))).passed());
}

TEST(Loop, Examples) {
  auto s = scalar_pair(Q);
  EXPECT_EQ(loop_pair(s, 1), s);
  auto l = loop_pair(s, 2);
  EXPECT_EQ(l.tplus().evaluate(vec(Q, {1, 0}), vec(Q, {1, 1}), vec(Q, {1, 0})), vec(Q, {2, 0}));
  EXPECT_EQ(l.tplus().evaluate_basis({0, 1, 0}), vec(Q, {0, 0}));
  EXPECT_THROW(loop_pair(s, 0), Error);
}

TEST(Symmetry, OuterSlotsCommute) {
  for (const auto& e : standard_pairs(F5)) {
    const auto& t = e.pair.tplus();
    const auto n = e.pair.nplus(), m = e.pair.nminus();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < n; ++k) ASSERT_EQ(t.evaluate_basis({i, j, k}), t.evaluate_basis({k, j, i})) << e.name;
  }
}

TEST(Catalog, EveryPairVerifies) {
  for (const Ring& r : {Q, F5}) {
    for (const auto& e : standard_pairs(r)) EXPECT_TRUE(verify(e.pair).passed()) << r.name() << "/" << e.name;
  }
}

TEST(ByName, Dispatch) {
  EXPECT_EQ(by_name("rectangular", {1, 2}, F5), rectangular_pair(1, 2, F5));
  EXPECT_EQ(by_name("skew_hermitian", {2}, F5), hermitian_pair(2, -1, F5));
  EXPECT_EQ(by_name("loop", {3}, F5), loop_pair(scalar_pair(F5), 3));
  EXPECT_THROW(by_name("rectangular", {1}, F5), Error);
  EXPECT_THROW(by_name("rectangular", {0, 1}, F5), Error);
  EXPECT_THROW(by_name("octonionic", {}, F5), Error);
  EXPECT_THROW(by_name("nope", {}, F5), Error);
}
