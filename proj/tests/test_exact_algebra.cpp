#include <doctest.h>

#include <random>

#include "asepgf/errors.hpp"
#include "asepgf/step_series.hpp"
#include "support/random_series.hpp"

using namespace asepgf;

namespace {

GapPolynomial x(long e, long c = 1) { return GapPolynomial::monomial(c, e); }
GapPolynomial c(long v) { return GapPolynomial::constant(v); }

StepSeries series(std::vector<GapPolynomial> coefficients) {
    return StepSeries(std::move(coefficients));
}

StepSeries scalars(std::vector<long> values) {
    std::vector<Rational> r(values.begin(), values.end());
    return StepSeries::from_scalars(r);
}

bool canonical(const Rational& r) {
    return r.denominator() > 0 && gcd(r.numerator(), r.denominator()) == 1;
}

} // namespace

TEST_CASE("rational canonical form") {
    const Rational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(Rational(0, 7).to_string() == "0/1");
    CHECK(Rational(5).to_string() == "5/1");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational exact square root") {
    CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(exact_sqrt(Rational(0)) == Rational(0));
    CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
    CHECK_FALSE(exact_sqrt(Rational(-4)).has_value());
}

TEST_CASE("gap polynomial drops zero terms") {
    const GapPolynomial p = x(1) + x(-1) - x(1);
    CHECK(p == x(-1));
    CHECK((x(2) - x(2)).is_zero());
    CHECK(c(0).is_zero());
    CHECK((x(1) * x(-1)) == c(1));
    CHECK(c(3).is_constant());
    CHECK_FALSE(x(1).is_constant());
    CHECK((x(0) + x(3, 2)).reflected(3) == x(3) + x(0, 2));
    CHECK((x(1) + x(2)).evaluate_at_one() == Rational(2));
    CHECK_THROWS_AS((x(1)).divided_by_monomial(x(0) + x(1)), NonInvertibleLeadingTerm);
    CHECK_THROWS_AS((x(1)).divided_by_monomial(GapPolynomial()), NonInvertibleLeadingTerm);
}

TEST_CASE("series_add") {
    CHECK((scalars({1}) + scalars({-1})).is_zero());
    // (x + t) + t = x + 2t
    CHECK(series({x(1), c(1)}) + series({c(0), c(1)}) == series({x(1), c(2)}));
    // truncation to the smaller order
    CHECK((scalars({1, 1, 1}) + scalars({1, 1})).order() == 1);

    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        const StepSeries a = testing::random_series(rng, 6);
        CHECK(a + StepSeries(6) == a);
    }
}

TEST_CASE("series_mul") {
    CHECK(scalars({1, 1, 0}) * scalars({1, -1, 0}) == scalars({1, 0, -1}));

    const std::size_t N = 9;
    std::vector<long> geometric(N + 1, 1);
    std::vector<long> one_minus_t(N + 1, 0);
    one_minus_t[0] = 1;
    one_minus_t[1] = -1;
    std::vector<long> unit(N + 1, 0);
    unit[0] = 1;
    CHECK(scalars(one_minus_t) * scalars(geometric) == scalars(unit));

    // (x + t x^-1)^2 = x^2 + 2t + t^2 x^-2
    const StepSeries s = series({x(1), x(-1), c(0)});
    CHECK(s * s == series({x(2), c(2), x(-2)}));
}

TEST_CASE("series_div") {
    const std::size_t N = 8;
    std::vector<long> one_minus_t(N + 1, 0);
    one_minus_t[0] = 1;
    one_minus_t[1] = -1;
    std::vector<long> unit(N + 1, 0);
    unit[0] = 1;
    CHECK(scalars(unit) / scalars(one_minus_t) == scalars(std::vector<long>(N + 1, 1)));

    CHECK(series({x(1, 2), c(0)}) / series({x(1, 2), c(0)}) == series({c(1), c(0)}));

    // (x + t) / (1 - t^2): the quotient alternates x, 1, x, 1, ...
    const StepSeries numer = series({x(1), c(1), c(0), c(0), c(0), c(0)});
    const StepSeries denom = scalars({1, 0, -1, 0, 0, 0});
    const StepSeries q = numer / denom;
    CHECK(q * denom == numer);
    CHECK(q == series({x(1), c(1), x(1), c(1), x(1), c(1)}));

    CHECK_THROWS_AS(scalars({0, 1}) / scalars({0, 1}), NonInvertibleLeadingTerm);
    CHECK_THROWS_AS(scalars({1, 1}) / series({x(0) + x(1), c(0)}), NonInvertibleLeadingTerm);
}

TEST_CASE("series_sqrt") {
    CHECK(series_sqrt(scalars({1, 2, 1, 0})) == scalars({1, 1, 0, 0}));
    CHECK(series_sqrt(series({x(2), c(0)})) == series({x(1), c(0)}));

    // sqrt(1 - 4t^2) = 1 - 2t^2 - 2t^4 - 4t^6 - 10t^8 - ...; checked by squaring
    const StepSeries a = scalars({1, 0, -4, 0, 0, 0, 0, 0, 0});
    const StepSeries s = series_sqrt(a);
    CHECK(s * s == a);
    CHECK(s == scalars({1, 0, -2, 0, -2, 0, -4, 0, -10}));

    // positive branch for a non-unit leading coefficient
    CHECK(series_sqrt(series({x(4, 9), c(0)}))[0] == x(2, 3));

    CHECK_THROWS_AS(series_sqrt(scalars({2, 1})), NotASquare);
    CHECK_THROWS_AS(series_sqrt(scalars({-1, 1})), NotASquare);
    CHECK_THROWS_AS(series_sqrt(series({x(1), c(0)})), NotASquare);
    CHECK_THROWS_AS(series_sqrt(scalars({0, 1})), NotASquare);
    CHECK_THROWS_AS(series_sqrt(series({x(0) + x(2), c(0)})), NotASquare);
}

TEST_CASE("series_shift_down") {
    CHECK(series_shift_down(scalars({0, 0, 1}), 2) == scalars({1}));
    CHECK(series_shift_down(scalars({0, 1, 0, 1}), 1) == scalars({1, 0, 1}));
    CHECK_THROWS_AS(series_shift_down(scalars({1, 1}), 1), NonzeroLowOrderTerm);
    CHECK_THROWS_AS(series_shift_down(scalars({0, 0}), 2), NonzeroLowOrderTerm);
}

TEST_CASE("valuation and x-freeness") {
    CHECK(scalars({0, 0, 3}).valuation() == 2u);
    CHECK_FALSE(StepSeries(4).valuation().has_value());
    CHECK(scalars({1, 2}).is_x_free());
    CHECK_FALSE(series({c(1), x(1)}).is_x_free());
}

TEST_CASE("marked series requires matching orders") {
    CHECK_THROWS_AS(MarkedSeries(StepSeries(2), StepSeries(3)), std::invalid_argument);
    const MarkedSeries m(scalars({1, 2}), scalars({3, 4}));
    CHECK(m.grade(1) == scalars({3, 4}));
    CHECK_THROWS_AS(m.grade(2), std::out_of_range);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(20240607);
    for (int i = 0; i < 60; ++i) {
        const StepSeries a = testing::random_series(rng, 8);
        const StepSeries b = testing::random_series(rng, 8);
        const StepSeries c3 = testing::random_series(rng, 8);
        CHECK((a * b) * c3 == a * (b * c3));
        CHECK(a * (b + c3) == a * b + a * c3);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("division and square root invert multiplication") {
    std::mt19937 rng(99);
    for (int i = 0; i < 60; ++i) {
        const StepSeries a = testing::random_series(rng, 8);
        const StepSeries b = testing::random_unit_series(rng, 8);
        CHECK(series_div(a, b) * b == a);

        const StepSeries sq = b * b;
        const StepSeries root = series_sqrt(sq);
        CHECK(root * root == sq);
        CHECK(root[0].terms().begin()->second.sign() > 0);

        const StepSeries q = a / b;
        for (const auto& coefficient : q.coefficients()) {
            for (const auto& [e, value] : coefficient.terms())
                CHECK(canonical(value));
        }
    }
}
