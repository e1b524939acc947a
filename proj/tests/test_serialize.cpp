#include <doctest.h>

#include <random>

#include "asepgf/closed_form.hpp"
#include "asepgf/serialize.hpp"
#include "support/random_series.hpp"

using namespace asepgf;

TEST_CASE("series JSON layout") {
    const Json j = series_to_json(kernel_gf({1, 1}, 2), "kernel");
    CHECK(j.dump() ==
          R"({"kind":"kernel","order":2,"homogeneous_degree":1,"coefficients":[)"
          R"({"t":0,"terms":[{"x":1,"value":"1/1"}]},)"
          R"({"t":1,"terms":[{"x":0,"value":"1/1"}]},)"
          R"({"t":2,"terms":[{"x":1,"value":"1/1"}]}]})");
    CHECK(series_to_json(p_series(1), "p")["homogeneous_degree"].is_null());
}

TEST_CASE("series JSON round trip") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 50; ++i) {
        const StepSeries s = testing::random_series(rng, 7).with_homogeneous_degree(i % 2 ? std::optional<long>(3) : std::nullopt);
        const StepSeries back = series_from_json(Json::parse(series_to_json(s, "random").dump()));
        CHECK(back == s);
        CHECK(back.homogeneous_degree() == s.homogeneous_degree());
    }
}

TEST_CASE("marked series JSON round trip") {
    const MarkedSeries a = two_type_gf({2, 8});
    const Json j = marked_to_json(a, "two-type");
    REQUIRE(j.is_array());
    CHECK(j[0]["d_grade"] == 0);
    CHECK(j[1]["d_grade"] == 1);
    CHECK(marked_from_json(Json::parse(j.dump())) == a);
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(series_from_json(Json::parse(R"({"order":1})")), std::invalid_argument);
    CHECK_THROWS_AS(series_from_json(Json::parse(
                        R"({"order":0,"homogeneous_degree":null,"coefficients":[{"t":0,"terms":[{"x":0,"value":"1/0"}]}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(series_from_json(Json::parse(
                        R"({"order":1,"homogeneous_degree":null,"coefficients":[{"t":0,"terms":[]}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(marked_from_json(Json::parse("[]")), std::invalid_argument);
}

TEST_CASE("CSV layout") {
    CHECK(series_to_csv(return_gf(1, 2)) == "t,x,d,value\n0,0,0,1/1\n2,0,0,1/1\n");
    CHECK(marked_to_csv(two_type_gf({1, 0})) == "t,x,d,value\n0,1,0,1/1\n0,1,1,1/1\n");
}

TEST_CASE("markov JSON") {
    const Lambda lambda({1, 0, 0});
    const auto m = transition_matrix(lambda);
    const Json j = markov_to_json(lambda, m, Rational(1, 2), stationary(m, Rational(1, 2)), false);
    CHECK(j["states"] == Json::array({"100", "010", "001"}));
    CHECK(j["row_sums"] == Json::array({"1/1", "1/1", "1/1"}));
    CHECK(j["stationary"] == Json::array({"1/3", "1/3", "1/3"}));
    CHECK(j["matrix"][0][1] == "1/6");

    const Json s = markov_to_json(lambda, m, Rational(1, 2), stationary(m, Rational(1, 2)), true);
    CHECK(s["matrix"][0][1]["c0"] == "0/1");
    CHECK(s["matrix"][0][1]["c1"] == "1/3");
}
