#include "asepgf/closed_form.hpp"

#include <stdexcept>
#include <string>

#include "asepgf/errors.hpp"

namespace asepgf {

namespace {

StepSeries one(std::size_t order) {
    return StepSeries::constant(GapPolynomial::constant(1), order);
}

StepSeries x_power(GapPolynomial::Exponent k, std::size_t order) {
    return StepSeries::constant(GapPolynomial::monomial(1, k), order);
}

void require_x_free(const StepSeries& s, const std::string& what) {
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (!s[n].is_constant())
            throw XDependenceViolation(what + ": coefficient of t^" + std::to_string(n) +
                                       " depends on x");
    }
}

void require_support(const StepSeries& s, int L, const std::string& what) {
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (!s[n].supported_in(0, L))
            throw SupportViolation(what + ": coefficient of t^" + std::to_string(n) +
                                   " has x-exponents outside [0, " + std::to_string(L) + "]");
    }
}

// G_{m,0}, G_{0,m} on lattice m.
StepSeries boundary_gf(int m, bool from_top, std::size_t order) {
    return kernel_gf(LatticeWalkSpec{m, from_top ? m : 0}, order);
}

} // namespace

void LatticeWalkSpec::validate() const {
    if (L < 0)
        throw std::invalid_argument("L must be ≥ 0");
    if (u < 0 || u > L)
        throw std::invalid_argument("u must lie in [0, L]");
}

void TwoTypeSpec::validate() const {
    if (m < 1)
        throw std::invalid_argument("m must be ≥ 1");
}

StepSeries p_series(std::size_t order) {
    // sqrt(1 - 4t^2) to order+1, then (1 - root) / t / 2.
    const std::size_t work = order + 1;
    const StepSeries root = series_sqrt(one(work) - StepSeries::t_power(2, work, 4));
    return series_scale(series_shift_down(one(work) - root, 1), Rational(1, 2));
}

StepSeries kernel_gf(const LatticeWalkSpec& spec, std::size_t order) {
    spec.validate();
    const int L = spec.L;
    const int u = spec.u;
    const int v = spec.v();

    const StepSeries p = p_series(order);
    const StepSeries unit = one(order);
    const StepSeries denom = unit - series_pow(p, 2 * L + 4);

    const StepSeries far_end = series_div(
        series_pow(p, v + 1) * (unit - series_pow(p, 2 * u + 2)), denom);
    const StepSeries near_end = series_div(
        series_pow(p, u + 1) * (unit - series_pow(p, 2 * v + 2)), denom);

    const StepSeries bracket = x_power(u, order)
                             - far_end.shifted_x(L + 1)
                             - near_end.shifted_x(-1);

    // 1 - t (x + 1/x)
    std::vector<GapPolynomial> kernel(order + 1);
    kernel[0] = GapPolynomial::constant(1);
    if (order >= 1)
        kernel[1] = GapPolynomial::monomial(-1, 1) + GapPolynomial::monomial(-1, -1);

    StepSeries g = series_div(bracket, StepSeries(std::move(kernel)));
    require_support(g, L, "kernel_gf(L=" + std::to_string(L) + ", u=" + std::to_string(u) + ")");
    return g.with_homogeneous_degree(L);
}

StepSeries return_ratio(int m, std::size_t order) {
    if (m < 0)
        throw std::invalid_argument("m must be ≥ 0");
    const StepSeries g_m = boundary_gf(m, true, order);
    const StepSeries g_next = boundary_gf(m + 1, true, order);
    const StepSeries numer = x_power(m + 1, order) + StepSeries::t_power(1, order) * g_m;
    StepSeries ratio = series_div(numer, g_next);
    require_x_free(ratio, "return ratio for m=" + std::to_string(m));
    return ratio;
}

StepSeries return_gf(int m, std::size_t order) {
    const StepSeries ratio = return_ratio(m, order + 2);
    return series_shift_down(one(order + 2) - ratio, 2);
}

StepSeries return_gf_recursive(int m, std::size_t order) {
    if (m < 0)
        throw std::invalid_argument("m must be ≥ 0");
    StepSeries r = one(order);
    const StepSeries t2 = StepSeries::t_power(2, order);
    for (int k = 1; k <= m; ++k)
        r = series_div(one(order), one(order) - t2 * r);
    return r;
}

StepSeries crossing_gf(int m, std::size_t order) {
    if (m < 1)
        throw std::invalid_argument("m must be ≥ 1");
    const std::size_t work = order + 1;
    const StepSeries g_top = boundary_gf(m, true, work);
    const StepSeries g_bottom = boundary_gf(m, false, work);
    const StepSeries g_next = boundary_gf(m + 1, true, work);

    const StepSeries discriminant =
        g_bottom * g_bottom
        + series_scale(g_next * (g_next - g_top.shifted_x(1)), Rational(4));
    const StepSeries numer = series_sqrt(discriminant) - g_bottom;
    StepSeries q = series_div(series_shift_down(numer, 1),
                              series_scale(g_next.truncated(order), Rational(2)));
    require_x_free(q, "crossing series for m=" + std::to_string(m));
    return q;
}

StepSeries crossing_gf_single_point(std::size_t order) {
    return one(order);
}

StepSeries crossing_quadratic_residual(int m, std::size_t order) {
    const StepSeries q = crossing_gf(m, order);
    const StepSeries g_top = boundary_gf(m, true, order);
    const StepSeries g_bottom = boundary_gf(m, false, order);
    const StepSeries g_next = boundary_gf(m + 1, true, order);
    const StepSeries t1 = StepSeries::t_power(1, order);
    const StepSeries t2 = StepSeries::t_power(2, order);
    return g_next * t2 * q * q + t1 * g_bottom * q + g_top.shifted_x(1) - g_next;
}

MarkedSeries two_type_gf(const TwoTypeSpec& spec) {
    spec.validate();
    const int m = spec.m;
    const std::size_t order = spec.order;

    const StepSeries g_top = boundary_gf(m, true, order);
    const StepSeries g_bottom = boundary_gf(m, false, order);
    const StepSeries r = return_gf(m, order);
    const StepSeries q = crossing_gf(m, order);
    const StepSeries denom = one(order) - q * q;

    const StepSeries d0 = g_top + series_div(r * q * g_bottom, denom);
    const StepSeries d1 = series_div(r * g_top, denom);
    const std::string tag = "two_type_gf(m=" + std::to_string(m) + ")";
    require_support(d0, m, tag);
    require_support(d1, m, tag);
    return MarkedSeries(d0.with_homogeneous_degree(m), d1.with_homogeneous_degree(m));
}

} // namespace asepgf
