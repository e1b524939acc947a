#include "asepgf/step_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "asepgf/errors.hpp"

namespace asepgf {

StepSeries::StepSeries(std::vector<GapPolynomial> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty())
        throw std::invalid_argument("a step series needs at least the t^0 coefficient");
}

StepSeries StepSeries::constant(const GapPolynomial& c, std::size_t order) {
    StepSeries s(order);
    s.coefficients_[0] = c;
    return s;
}

StepSeries StepSeries::t_power(std::size_t k, std::size_t order, const Rational& c) {
    StepSeries s(order);
    if (k <= order)
        s.coefficients_[k] = GapPolynomial::constant(c);
    return s;
}

StepSeries StepSeries::from_scalars(const std::vector<Rational>& values) {
    std::vector<GapPolynomial> coefficients;
    coefficients.reserve(values.size());
    for (const auto& v : values)
        coefficients.push_back(GapPolynomial::constant(v));
    return StepSeries(std::move(coefficients));
}

bool StepSeries::is_zero() const {
    return std::ranges::all_of(coefficients_, [](const auto& c) { return c.is_zero(); });
}

std::optional<std::size_t> StepSeries::valuation() const {
    for (std::size_t n = 0; n < coefficients_.size(); ++n) {
        if (!coefficients_[n].is_zero())
            return n;
    }
    return std::nullopt;
}

bool StepSeries::is_x_free() const {
    return std::ranges::all_of(coefficients_, [](const auto& c) { return c.is_constant(); });
}

bool StepSeries::supported_in(GapPolynomial::Exponent lo, GapPolynomial::Exponent hi) const {
    return std::ranges::all_of(coefficients_, [&](const auto& c) { return c.supported_in(lo, hi); });
}

StepSeries StepSeries::truncated(std::size_t order) const {
    if (order > this->order())
        throw std::invalid_argument("cannot extend a truncated series beyond its order");
    return StepSeries(std::vector<GapPolynomial>(coefficients_.begin(),
                                                 coefficients_.begin() + order + 1));
}

StepSeries StepSeries::reflected(GapPolynomial::Exponent L) const {
    StepSeries out(order());
    for (std::size_t n = 0; n <= order(); ++n)
        out.coefficients_[n] = coefficients_[n].reflected(L);
    return out;
}

StepSeries StepSeries::shifted_x(GapPolynomial::Exponent k) const {
    StepSeries out(order());
    for (std::size_t n = 0; n <= order(); ++n)
        out.coefficients_[n] = coefficients_[n].shifted(k);
    return out;
}

std::vector<Rational> StepSeries::evaluated_at_one() const {
    std::vector<Rational> out;
    out.reserve(coefficients_.size());
    for (const auto& c : coefficients_)
        out.push_back(c.evaluate_at_one());
    return out;
}

StepSeries StepSeries::with_homogeneous_degree(std::optional<GapPolynomial::Exponent> L) const {
    StepSeries out = *this;
    for (auto& c : out.coefficients_)
        c = c.with_homogeneous_degree(L);
    return out;
}

std::optional<GapPolynomial::Exponent> StepSeries::homogeneous_degree() const {
    const auto first = coefficients_.front().homogeneous_degree();
    for (const auto& c : coefficients_) {
        if (c.homogeneous_degree() != first)
            return std::nullopt;
    }
    return first;
}

std::ostream& operator<<(std::ostream& os, const StepSeries& s) {
    bool any = false;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (s[n].is_zero())
            continue;
        if (any)
            os << " + ";
        any = true;
        os << "[" << s[n] << "]";
        if (n > 0)
            os << "*t^" << n;
    }
    if (!any)
        os << "0";
    return os << " + O(t^" << s.order() + 1 << ")";
}

StepSeries series_add(const StepSeries& a, const StepSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<GapPolynomial> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        out[n] = a[n] + b[n];
    return StepSeries(std::move(out));
}

StepSeries series_sub(const StepSeries& a, const StepSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<GapPolynomial> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        out[n] = a[n] - b[n];
    return StepSeries(std::move(out));
}

StepSeries series_neg(const StepSeries& a) {
    std::vector<GapPolynomial> out(a.order() + 1);
    for (std::size_t n = 0; n <= a.order(); ++n)
        out[n] = -a[n];
    return StepSeries(std::move(out));
}

StepSeries series_scale(const StepSeries& a, const Rational& c) {
    std::vector<GapPolynomial> out(a.order() + 1);
    for (std::size_t n = 0; n <= a.order(); ++n)
        out[n] = a[n] * c;
    return StepSeries(std::move(out));
}

StepSeries series_scale(const StepSeries& a, const GapPolynomial& c) {
    std::vector<GapPolynomial> out(a.order() + 1);
    for (std::size_t n = 0; n <= a.order(); ++n)
        out[n] = a[n] * c;
    return StepSeries(std::move(out));
}

StepSeries series_mul(const StepSeries& a, const StepSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<GapPolynomial> out(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (!b[j].is_zero())
                out[i + j] += a[i] * b[j];
        }
    }
    return StepSeries(std::move(out));
}

StepSeries series_pow(const StepSeries& a, unsigned exponent) {
    StepSeries result = StepSeries::constant(GapPolynomial::constant(1), a.order());
    StepSeries base = a;
    while (exponent > 0) {
        if (exponent & 1U)
            result = series_mul(result, base);
        exponent >>= 1U;
        if (exponent > 0)
            base = series_mul(base, base);
    }
    return result;
}

StepSeries series_div(const StepSeries& a, const StepSeries& b) {
    if (!b[0].is_monomial())
        throw NonInvertibleLeadingTerm(
            "constant coefficient of the divisor must be a single nonzero monomial");
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<GapPolynomial> q(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        GapPolynomial rhs = a[n];
        for (std::size_t i = 1; i <= n; ++i) {
            if (!b[i].is_zero() && !q[n - i].is_zero())
                rhs -= b[i] * q[n - i];
        }
        q[n] = rhs.divided_by_monomial(b[0]);
    }
    return StepSeries(std::move(q));
}

StepSeries series_sqrt(const StepSeries& a) {
    const GapPolynomial& lead = a[0];
    if (!lead.is_monomial())
        throw NotASquare("constant coefficient must be a single monomial c*x^(2k)");
    const auto& [exponent, c] = *lead.terms().begin();
    if (exponent % 2 != 0)
        throw NotASquare("constant coefficient has odd x-exponent " + std::to_string(exponent));
    const auto root = exact_sqrt(c);
    if (!root)
        throw NotASquare("constant coefficient " + c.to_string() + " is not a rational square");

    std::vector<GapPolynomial> s(a.order() + 1);
    s[0] = GapPolynomial::monomial(*root, exponent / 2);
    const GapPolynomial twice_lead = s[0] * Rational(2);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        GapPolynomial rhs = a[n];
        for (std::size_t i = 1; i < n; ++i) {
            if (!s[i].is_zero() && !s[n - i].is_zero())
                rhs -= s[i] * s[n - i];
        }
        s[n] = rhs.divided_by_monomial(twice_lead);
    }
    return StepSeries(std::move(s));
}

StepSeries series_shift_down(const StepSeries& a, std::size_t k) {
    if (k > a.order())
        throw NonzeroLowOrderTerm("shift by " + std::to_string(k) +
                                  " exceeds series order " + std::to_string(a.order()));
    for (std::size_t n = 0; n < k; ++n) {
        if (!a[n].is_zero())
            throw NonzeroLowOrderTerm("coefficient of t^" + std::to_string(n) + " is nonzero");
    }
    return StepSeries(std::vector<GapPolynomial>(a.coefficients().begin() + k,
                                                 a.coefficients().end()));
}

MarkedSeries::MarkedSeries(StepSeries d0, StepSeries d1)
    : d0_(std::move(d0)), d1_(std::move(d1)) {
    if (d0_.order() != d1_.order())
        throw std::invalid_argument("d-graded components must share one order");
}

const StepSeries& MarkedSeries::grade(int d) const {
    if (d == 0)
        return d0_;
    if (d == 1)
        return d1_;
    throw std::out_of_range("only d^0 and d^1 components exist");
}

} // namespace asepgf
