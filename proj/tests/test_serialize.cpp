#include <gtest/gtest.h>

#include "jgl/catalog.hpp"
#include "jgl/serialize.hpp"

using namespace jgl;

namespace {

const Ring Q = Ring::rational();
const Ring F5 = Ring::prime_field(5);

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(RoundTrip, Pairs) {
  for (const Ring& r : {Q, F5}) {
    for (const auto& e : catalog::standard_pairs(r)) {
      Json j = to_json(e.pair);
      EXPECT_EQ(pair_from_json(Json::parse(j.dump())), e.pair) << e.name;
    }
  }
}

TEST(RoundTrip, TriplesAndAlgebras) {
  auto j = polarized_jts(catalog::hermitian_pair(2, 1, Q));
  EXPECT_EQ(jts_from_json(to_json(j)), j);
  auto q = jts_to_lts(j);
  EXPECT_EQ(lts_from_json(to_json(q)), q);
  auto g = catalog::gl_3graded(1, 2, F5);
  auto back = lie_from_json(Json::parse(to_json(g).dump()));
  EXPECT_EQ(back.bracket(), g.bracket());
  EXPECT_EQ(back.grading(), g.grading());
  EXPECT_EQ(back.euler(), g.euler());
  auto t = catalog::spin_pair_dot(3, Q).tplus();
  EXPECT_EQ(tensor_from_json(to_json(t)), t);
}

TEST(RoundTrip, FlagsFiltrationsPoints) {
  Flag f = make_flag({Subspace::coordinate(F5, 3, {1}), Subspace::full(F5, 3)});
  EXPECT_EQ(flag_from_json(flag_to_json(f)), f);
  auto g = catalog::sl2(F5);
  auto lf = filtration_from_grading(g);
  EXPECT_EQ(filtration_from_json(filtration_to_json(lf, F5, 3, "sl2")), lf);
  Point x = make_point(Matrix::from_ints(F5, {{1}, {2}}));
  EXPECT_EQ(point_from_json(to_json(x), F5), x);
  DualPoint a = make_dual(Matrix::from_ints(F5, {{3, 1}}));
  EXPECT_EQ(dual_from_json(to_json(a), F5), a);
}

TEST(RoundTrip, ScalarsAreStrings) {
  Json j = to_json(catalog::scalar_pair(Q, -3));
  EXPECT_EQ(j["tplus"][0][4], "-3");
  EXPECT_EQ(j["schema"], "jgl/1");
  EXPECT_EQ(j["kind"], "pair");
}

TEST(Rejection, MalformedCoefficients) {
  Json j = to_json(catalog::scalar_pair(Q));
  j["tplus"][0][4] = "1/0";
  std::string msg = error_of([&] { pair_from_json(j); });
  EXPECT_NE(msg.find("/tplus/0/4"), std::string::npos) << msg;

  Json k = to_json(catalog::scalar_pair(F5));
  k["tminus"][0][4] = "7";
  msg = error_of([&] { pair_from_json(k); });
  EXPECT_NE(msg.find("/tminus/0/4"), std::string::npos) << msg;

  k = to_json(catalog::scalar_pair(F5));
  k["tplus"][0][4] = 2;
  EXPECT_NE(error_of([&] { pair_from_json(k); }).find("expected a string"), std::string::npos);
}

TEST(Rejection, Structure) {
  Json j = to_json(catalog::rectangular_pair(1, 2, F5));
  Json bad = j;
  bad["tplus"][0][0] = 9;
  EXPECT_NE(error_of([&] { pair_from_json(bad); }).find("/tplus/0/0"), std::string::npos);
  bad = j;
  bad.erase("dims");
  EXPECT_NE(error_of([&] { pair_from_json(bad); }).find("missing key 'dims'"), std::string::npos);
  bad = j;
  bad["kind"] = "jts";
  EXPECT_FALSE(error_of([&] { pair_from_json(bad); }).empty());
  bad = j;
  bad["schema"] = "jgl/2";
  EXPECT_FALSE(error_of([&] { pair_from_json(bad); }).empty());
  bad = j;
  bad["ring"] = "f4";
  EXPECT_NE(error_of([&] { pair_from_json(bad); }).find("/ring"), std::string::npos);
  bad = j;
  bad["tplus"][0] = Json::array({0, 0});
  EXPECT_FALSE(error_of([&] { pair_from_json(bad); }).empty());
}

TEST(Rejection, DegeneratePoint) {
  Json p{{"rep", Json::array({Json::array({"0"}), Json::array({"0"})})}};
  EXPECT_NE(error_of([&] { point_from_json(p, F5); }).find("/rep"), std::string::npos);
  Json ragged{{"rep", Json::array({Json::array({"1", "0"}), Json::array({"0"})})}};
  EXPECT_NE(error_of([&] { point_from_json(ragged, F5); }).find("ragged"), std::string::npos);
}
