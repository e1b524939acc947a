#ifndef ASEPGF_STEP_SERIES_HPP
#define ASEPGF_STEP_SERIES_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "asepgf/gap_polynomial.hpp"
#include "asepgf/rational.hpp"

namespace asepgf {

// Truncated power series in the step marker t with GapPolynomial
// coefficients: sum_{n <= order} c_n t^n, computed modulo t^(order+1).
// Binary operations truncate to the smaller operand order.
class StepSeries {
public:
    explicit StepSeries(std::size_t order = 0) : coefficients_(order + 1) {}
    // Order is coefficients.size() - 1; an empty vector is rejected.
    explicit StepSeries(std::vector<GapPolynomial> coefficients);

    static StepSeries constant(const GapPolynomial& c, std::size_t order);
    // c * t^k; zero if k > order.
    static StepSeries t_power(std::size_t k, std::size_t order, const Rational& c = 1);
    // From scalar t-coefficients, x-free.
    static StepSeries from_scalars(const std::vector<Rational>& values);

    std::size_t order() const { return coefficients_.size() - 1; }
    const GapPolynomial& operator[](std::size_t n) const { return coefficients_.at(n); }
    std::span<const GapPolynomial> coefficients() const { return coefficients_; }

    bool is_zero() const;
    // Smallest n with a nonzero t^n coefficient.
    std::optional<std::size_t> valuation() const;
    // Every coefficient has x-degree 0.
    bool is_x_free() const;
    bool supported_in(GapPolynomial::Exponent lo, GapPolynomial::Exponent hi) const;

    StepSeries truncated(std::size_t order) const;
    StepSeries reflected(GapPolynomial::Exponent L) const;
    StepSeries shifted_x(GapPolynomial::Exponent k) const;
    // Substitutes x = 1 coefficientwise.
    std::vector<Rational> evaluated_at_one() const;

    StepSeries with_homogeneous_degree(std::optional<GapPolynomial::Exponent> L) const;
    // The degree shared by every coefficient, if any.
    std::optional<GapPolynomial::Exponent> homogeneous_degree() const;

    friend bool operator==(const StepSeries& a, const StepSeries& b) {
        return a.coefficients_ == b.coefficients_;
    }
    friend std::ostream& operator<<(std::ostream& os, const StepSeries& s);

private:
    std::vector<GapPolynomial> coefficients_;
};

StepSeries series_add(const StepSeries& a, const StepSeries& b);
StepSeries series_sub(const StepSeries& a, const StepSeries& b);
StepSeries series_neg(const StepSeries& a);
StepSeries series_scale(const StepSeries& a, const Rational& c);
StepSeries series_scale(const StepSeries& a, const GapPolynomial& c);
StepSeries series_mul(const StepSeries& a, const StepSeries& b);
StepSeries series_pow(const StepSeries& a, unsigned exponent);

// Quotient a / b. The constant coefficient of b must be a single monomial
// c*x^k; otherwise NonInvertibleLeadingTerm.
StepSeries series_div(const StepSeries& a, const StepSeries& b);

// Square root by term recursion 2*s0*s_n = a_n - sum_{0<i<n} s_i s_(n-i).
// The constant coefficient must be c*x^(2k) with c a rational square;
// otherwise NotASquare. The root with positive leading rational is returned.
StepSeries series_sqrt(const StepSeries& a);

// a / t^k, order reduced by k. NonzeroLowOrderTerm if valuation(a) < k.
StepSeries series_shift_down(const StepSeries& a, std::size_t k);

inline StepSeries operator+(const StepSeries& a, const StepSeries& b) { return series_add(a, b); }
inline StepSeries operator-(const StepSeries& a, const StepSeries& b) { return series_sub(a, b); }
inline StepSeries operator-(const StepSeries& a) { return series_neg(a); }
inline StepSeries operator*(const StepSeries& a, const StepSeries& b) { return series_mul(a, b); }
inline StepSeries operator/(const StepSeries& a, const StepSeries& b) { return series_div(a, b); }

// Series graded by the switch marker d. Only d^0 and d^1 occur in the
// two-type model.
class MarkedSeries {
public:
    MarkedSeries(StepSeries d0, StepSeries d1);

    const StepSeries& d0() const { return d0_; }
    const StepSeries& d1() const { return d1_; }
    const StepSeries& grade(int d) const;
    std::size_t order() const { return d0_.order(); }

    friend bool operator==(const MarkedSeries&, const MarkedSeries&) = default;

private:
    StepSeries d0_;
    StepSeries d1_;
};

} // namespace asepgf

#endif // ASEPGF_STEP_SERIES_HPP
