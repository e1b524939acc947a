#ifndef ASEPGF_CLOSED_FORM_HPP
#define ASEPGF_CLOSED_FORM_HPP

#include <cstddef>

#include "asepgf/step_series.hpp"

namespace asepgf {

// A start point (u, v) on the linear simplex u + v = L, which is the path
// graph on the L + 1 points 0..L (coordinate u).
struct LatticeWalkSpec {
    int L = 0;
    int u = 0;

    int v() const { return L - u; }
    // Throws std::invalid_argument unless 0 <= u <= L.
    void validate() const;
};

// lambda = (2, 1, 0^m) started with the two particles adjacent.
struct TwoTypeSpec {
    int m = 1;
    std::size_t order = 20;

    void validate() const;
};

// p = (1 - sqrt(1 - 4t^2)) / (2t), the Catalan series with t p^2 - p + t = 0.
StepSeries p_series(std::size_t order);

// Generating function of walks from (u, v), endpoint marked by x^a y^(L-a),
// evaluated at y = 1:
//
//   (x^u - x^(L+1) p^(v+1) (1 - p^(2u+2)) / (1 - p^(2L+4))
//        - x^(-1) p^(u+1) (1 - p^(2v+2)) / (1 - p^(2L+4))) / (1 - t (x + 1/x))
//
// using p + 1/p = 1/t for the kernel. Negative and >L exponents appear in
// intermediate products and must cancel; SupportViolation if they do not.
StepSeries kernel_gf(const LatticeWalkSpec& spec, std::size_t order);

// Return series R_m of walks (m,0) -> (m,0), from the excursion identity
//   G_{m+1,0} = (x^(m+1) + t G_{m,0}) / (1 - t^2 R_m),
// i.e. R_m = (1 - (x^(m+1) + t G_{m,0}) / G_{m+1,0}) / t^2.
// The ratio must be x-free; XDependenceViolation otherwise.
StepSeries return_gf(int m, std::size_t order);

// The ratio (x^(m+1) + t G_{m,0}) / G_{m+1,0} = 1 - t^2 R_m, to the given
// order, with its x-independence checked.
StepSeries return_ratio(int m, std::size_t order);

// R_0 = 1, R_m = 1 / (1 - t^2 R_{m-1}). Independent route to return_gf.
StepSeries return_gf_recursive(int m, std::size_t order);

// Crossing series Q_m of walks (m,0) -> (0,m), m >= 1, as the root of
//   G_{m+1,0} t^2 Q^2 + t G_{0,m} Q + x G_{m,0} - G_{m+1,0} = 0
// with positive square-root branch:
//   Q_m = (-G_{0,m} + sqrt(G_{0,m}^2 + 4 G_{m+1,0} (G_{m+1,0} - x G_{m,0})))
//         / (2 t G_{m+1,0}).
StepSeries crossing_gf(int m, std::size_t order);

// Q_0 = 1: on a single point the only walk is the empty one. The quadratic
// degenerates there, so crossing_gf rejects m = 0.
StepSeries crossing_gf_single_point(std::size_t order);

// Left-hand side of the crossing quadratic with Q = crossing_gf(m, order)
// substituted; the zero series when the solution is correct.
StepSeries crossing_quadratic_residual(int m, std::size_t order);

// A(x, 1; t; d) = G_{m,0} + R_m (d G_{m,0} + Q_m G_{0,m}) / (1 - Q_m^2),
// split into d^0 and d^1 components.
MarkedSeries two_type_gf(const TwoTypeSpec& spec);

} // namespace asepgf

#endif // ASEPGF_CLOSED_FORM_HPP
