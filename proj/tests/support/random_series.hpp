#ifndef ASEPGF_TESTS_RANDOM_SERIES_HPP
#define ASEPGF_TESTS_RANDOM_SERIES_HPP

#include <random>

#include "asepgf/step_series.hpp"

namespace asepgf::testing {

// Small rationals num/den with |num| <= 6, 1 <= den <= 4.
inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(rng), den(rng));
}

// Up to max_terms terms with exponents in [-3, 3].
inline GapPolynomial random_polynomial(std::mt19937& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<long> exponent(-3, 3);
    GapPolynomial p;
    for (int k = count(rng); k > 0; --k)
        p += GapPolynomial::monomial(random_rational(rng), exponent(rng));
    return p;
}

inline StepSeries random_series(std::mt19937& rng, std::size_t order) {
    std::vector<GapPolynomial> c(order + 1);
    for (auto& p : c)
        p = random_polynomial(rng);
    return StepSeries(std::move(c));
}

// A series whose constant term is a nonzero monomial, so it is a valid divisor.
inline StepSeries random_unit_series(std::mt19937& rng, std::size_t order) {
    std::vector<GapPolynomial> c(order + 1);
    std::uniform_int_distribution<long> exponent(-2, 2);
    Rational lead;
    while (lead.is_zero())
        lead = random_rational(rng);
    c[0] = GapPolynomial::monomial(lead, exponent(rng));
    for (std::size_t n = 1; n <= order; ++n)
        c[n] = random_polynomial(rng);
    return StepSeries(std::move(c));
}

} // namespace asepgf::testing

#endif
