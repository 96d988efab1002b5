#include <gtest/gtest.h>

#include <random>

#include "jgl/identity.hpp"
#include "jgl/matrix.hpp"
#include "jgl/multilinear.hpp"
#include "jgl/subspace.hpp"

using namespace jgl;

namespace {

const Ring Q = Ring::rational();
const Ring F5 = Ring::prime_field(5);

Vector vec(const Ring& r, std::initializer_list<long long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(r.from_int(x));
  return v;
}

}  // namespace

TEST(Scalar, RingParsing) {
  EXPECT_EQ(Ring::parse("q").name(), "q");
  EXPECT_EQ(Ring::parse("f7").name(), "f7");
  EXPECT_THROW(Ring::parse("f4"), Error);
  EXPECT_THROW(Ring::parse("f3"), Error);
  EXPECT_THROW(Ring::parse("z"), Error);
}

TEST(Scalar, ParseRejectsMalformed) {
  EXPECT_THROW(Q.parse_scalar("1/0"), Error);
  EXPECT_THROW(Q.parse_scalar("2/4"), Error);
  EXPECT_THROW(F5.parse_scalar("7"), Error);
  EXPECT_EQ(Q.parse_scalar("-3/4").to_string(), "-3/4");
  EXPECT_EQ(F5.parse_scalar("4"), F5.from_int(-1));
}

TEST(Scalar, FieldArithmetic) {
  EXPECT_EQ(F5.from_int(2).inverse(), F5.from_int(3));
  EXPECT_EQ(F5.from_fraction(1, 2), F5.from_int(3));
  EXPECT_EQ(Q.from_fraction(6, 4).to_string(), "3/2");
  EXPECT_EQ(Q.from_int(2) * Q.from_fraction(1, 2), Q.one());
  EXPECT_THROW(Q.zero().inverse(), Error);
}

TEST(Matrix, RowReduceExamples) {
  EXPECT_EQ(canonical_form(Matrix::from_ints(Q, {{0, 0}, {0, 0}})).rows(), 0u);
  EXPECT_EQ(canonical_form(Matrix::from_ints(Q, {{2, 4}})), Matrix::from_ints(Q, {{1, 2}}));
  EXPECT_EQ(canonical_form(Matrix::from_ints(F5, {{1, 1}, {1, 2}})), Matrix::identity(F5, 2));
}

TEST(Matrix, SolveExamples) {
  Matrix b = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
  EXPECT_EQ(*solve(Matrix::identity(Q, 2), b), b);
  auto half = solve(Matrix::from_ints(Q, {{2}}), Matrix::from_ints(Q, {{1}}));
  ASSERT_TRUE(half);
  EXPECT_EQ((*half)(0, 0), Q.from_fraction(1, 2));
  EXPECT_FALSE(solve(Matrix::from_ints(Q, {{1, 0}, {0, 0}}), Matrix::from_ints(Q, {{0}, {1}})));
}

TEST(Matrix, InverseAndDeterminantOverF5) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m(F5, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = F5.from_int(static_cast<long long>(rng() % 5));
    auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), !determinant(m).is_zero());
    if (inv) {
      EXPECT_EQ(m * *inv, Matrix::identity(F5, 3));
    }
    EXPECT_EQ(rank(m) + nullspace(m).cols(), 3u);
  }
}

TEST(Subspace, CombineExamples) {
  auto e12 = Subspace::coordinate(Q, 3, {0, 1});
  auto e23 = Subspace::coordinate(Q, 3, {1, 2});
  EXPECT_EQ(intersect(e12, e23), Subspace::coordinate(Q, 3, {1}));
  EXPECT_EQ(sum(e12, e23), Subspace::full(Q, 3));
  auto e1 = Subspace::coordinate(Q, 3, {0});
  EXPECT_FALSE(direct_sum_check(e1, e1));
  auto diag = Subspace::span(F5, 2, {vec(F5, {1, 1})});
  EXPECT_EQ(complement(diag), Subspace::coordinate(F5, 2, {1}));
  EXPECT_TRUE(direct_sum_check(diag, complement(diag)));
}

TEST(Subspace, DimensionFormulaOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto random_space = [&](std::size_t k) {
      std::vector<Vector> vs;
      for (std::size_t i = 0; i < k; ++i) {
        Vector v;
        for (int j = 0; j < 4; ++j) v.push_back(F5.from_int(static_cast<long long>(rng() % 5)));
        vs.push_back(v);
      }
      return Subspace::span(F5, 4, vs);
    };
    auto a = random_space(rng() % 4), b = random_space(rng() % 4);
    EXPECT_EQ(sum(a, b).dim() + intersect(a, b).dim(), a.dim() + b.dim());
    EXPECT_EQ(a.annihilator().dim(), 4 - a.dim());
  }
}

TEST(Subspace, EnumerationMatchesGaussianCounts) {
  for (std::size_t d = 0; d <= 4; ++d) {
    EXPECT_EQ(all_subspaces(F5, 4, d).size(), gaussian_binomial(5, 4, static_cast<unsigned>(d)));
  }
  EXPECT_EQ(gaussian_binomial(5, 2, 1), 6u);
  EXPECT_EQ(gaussian_binomial(5, 3, 1), 31u);
  EXPECT_EQ(gaussian_binomial(5, 4, 2), 806u);
}

TEST(Multilinear, EvaluateExamples) {
  MultilinearMap t(Q, {1, 1, 1}, 1, {TensorTerm{{0, 0, 0}, 0, Q.from_int(2)}});
  EXPECT_EQ(t.evaluate(vec(Q, {1}), vec(Q, {1}), vec(Q, {1})), vec(Q, {2}));
  EXPECT_EQ(t.evaluate(vec(Q, {0}), vec(Q, {5}), vec(Q, {3})), vec(Q, {0}));
  EXPECT_EQ(t.evaluate(vec(Q, {2}), vec(Q, {3}), vec(Q, {5})), vec(Q, {60}));
}

TEST(Multilinear, ClosedFormExamples) {
  auto zero = tensor_from_closed_form(Q, {2, 2, 2}, 2, [](const BasisTuple&) { return zero_vector(Q, 2); });
  EXPECT_TRUE(zero.terms().empty());
  auto two = tensor_from_closed_form(Q, {1, 1, 1}, 1, [](const BasisTuple&) { return vec(Q, {2}); });
  ASSERT_EQ(two.terms().size(), 1u);
  EXPECT_EQ(two.terms()[0].coeff, Q.from_int(2));
  // (x|z)y - (x|y)z - (z|y)x on K^2 with the dot form
  auto spin = tensor_from_closed_form(Q, {2, 2, 2}, 2, [](const BasisTuple& i) {
    Vector x = unit_vector(Q, 2, i[0]), y = unit_vector(Q, 2, i[1]), z = unit_vector(Q, 2, i[2]);
    auto dot = [](const Vector& a, const Vector& b) { return a[0] * b[0] + a[1] * b[1]; };
    return sub(sub(scale(dot(x, z), y), scale(dot(x, y), z)), scale(dot(z, y), x));
  });
  EXPECT_EQ(spin.evaluate_basis({0, 0, 0}), vec(Q, {-1, 0}));
}

TEST(Multilinear, DuplicateTermsAreSummed) {
  MultilinearMap t(F5, {2, 2}, 2,
                   {TensorTerm{{0, 1, 0}, 1, F5.from_int(3)}, TensorTerm{{0, 1, 0}, 1, F5.from_int(2)}});
  EXPECT_TRUE(t.is_zero());
  EXPECT_THROW(MultilinearMap(F5, {2, 2}, 2, {TensorTerm{{2, 0, 0}, 0, F5.one()}}), Error);
}

TEST(Identity, TrivialIdentityPasses) {
  Identity zero{"zero", {{"x", 2}}, [](const std::vector<Vector>&) { return zero_vector(F5, 1); }};
  for (auto m : {Method::basis, Method::exhaustive}) {
    CheckOptions o;
    o.method = m;
    EXPECT_TRUE(check_polynomial_identity(zero, F5, o).pass);
  }
}

TEST(Identity, FalseIdentityHasWitness) {
  // x^2 y = y fails at x = 0
  Identity bad{"bad", {{"x", 1, 2}, {"y", 1}}, [](const std::vector<Vector>& a) {
                 return Vector{a[0][0] * a[0][0] * a[1][0] - a[1][0]};
               }};
  CheckOptions ex;
  ex.method = Method::exhaustive;
  Check c = check_polynomial_identity(bad, F5, ex);
  EXPECT_FALSE(c.pass);
  EXPECT_FALSE(c.witness.is_null());
  EXPECT_FALSE(check_polynomial_identity(bad, F5, CheckOptions{}).pass);
  CheckOptions s;
  s.method = Method::sampled;
  s.seed = 3;
  EXPECT_FALSE(check_polynomial_identity(bad, F5, s).pass);
}

TEST(Identity, SampledNeedsSeed) {
  Identity zero{"zero", {{"x", 2}}, [](const std::vector<Vector>&) { return zero_vector(F5, 1); }};
  CheckOptions s;
  s.method = Method::sampled;
  EXPECT_THROW(check_polynomial_identity(zero, F5, s), Error);
}

TEST(Identity, EnumerationCap) {
  ::setenv("JGL_MAX_ENUM", "10", 1);
  EXPECT_THROW(require_within_cap(11, "test"), Error);
  EXPECT_NO_THROW(require_within_cap(10, "test"));
  ::unsetenv("JGL_MAX_ENUM");
  EXPECT_EQ(max_enum(), 10'000'000ULL);
}
