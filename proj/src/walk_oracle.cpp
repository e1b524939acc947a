#include "asepgf/walk_oracle.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include <Eigen/Dense>

#include "asepgf/errors.hpp"

namespace asepgf {

namespace {

void check_lattice(int L, int u, const char* name) {
    if (L < 0)
        throw std::invalid_argument("L must be ≥ 0");
    if (u < 0 || u > L)
        throw std::invalid_argument(std::string(name) + " must lie in [0, L]");
}

// counts[a] after one hop step on [0, L].
std::vector<mpz_class> hop(const std::vector<mpz_class>& counts) {
    const std::size_t size = counts.size();
    std::vector<mpz_class> next(size);
    for (std::size_t a = 0; a < size; ++a) {
        if (counts[a] == 0)
            continue;
        if (a > 0)
            next[a - 1] += counts[a];
        if (a + 1 < size)
            next[a + 1] += counts[a];
    }
    return next;
}

// (a, sigma, d-power) -> number of walks
using TwoTypeDistribution = std::map<std::tuple<int, int, int>, mpz_class>;

TwoTypeDistribution switch_moves(const TwoTypeDistribution& dist, int m) {
    TwoTypeDistribution out;
    for (const auto& [state, count] : dist) {
        const auto [a, sigma, dpow] = state;
        if (a == m && sigma == 0)
            out[{a, 1, dpow + 1}] += count;
        if (a == 0 && sigma == 1)
            out[{a, 0, dpow - 1}] += count;
    }
    return out;
}

// Adds every walk reachable by trailing step-free switches.
TwoTypeDistribution switch_closure(TwoTypeDistribution dist, int m) {
    TwoTypeDistribution frontier = dist;
    // For m >= 1 two consecutive switches are impossible, so this runs at
    // most twice; the bound guards against a modelling change.
    for (int round = 0; round < 4 && !frontier.empty(); ++round) {
        frontier = switch_moves(frontier, m);
        for (const auto& [state, count] : frontier)
            dist[state] += count;
        if (round == 3 && !frontier.empty())
            throw OracleInvariantViolation("unbounded chain of step-free switches");
    }
    return dist;
}

} // namespace

StepSeries walk_counts(int L, int start_u, std::size_t order) {
    check_lattice(L, start_u, "start_u");
    std::vector<mpz_class> counts(L + 1);
    counts[start_u] = 1;
    std::vector<GapPolynomial> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        GapPolynomial::Terms terms;
        for (int a = 0; a <= L; ++a)
            terms.emplace(a, Rational(counts[a]));
        out[n] = GapPolynomial(std::move(terms)).with_homogeneous_degree(L);
        if (n < order)
            counts = hop(counts);
    }
    return StepSeries(std::move(out));
}

StepSeries endpoint_filtered_counts(int L, int start_u, int end_u, std::size_t order) {
    check_lattice(L, start_u, "start_u");
    check_lattice(L, end_u, "end_u");
    std::vector<mpz_class> counts(L + 1);
    counts[start_u] = 1;
    std::vector<Rational> out;
    out.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        out.emplace_back(counts[end_u]);
        if (n < order)
            counts = hop(counts);
    }
    return StepSeries::from_scalars(out);
}

std::vector<std::int64_t> walk_totals_by_matrix_power(int L, int start_u, std::size_t order) {
    check_lattice(L, start_u, "start_u");
    if (order > 62)
        throw std::invalid_argument("matrix-power oracle supports order ≤ 62");
    using Matrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index size = L + 1;
    Matrix adjacency = Matrix::Zero(size, size);
    for (Eigen::Index a = 0; a + 1 < size; ++a) {
        adjacency(a, a + 1) = 1;
        adjacency(a + 1, a) = 1;
    }
    Matrix power = Matrix::Identity(size, size);
    std::vector<std::int64_t> totals;
    totals.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        totals.push_back(power.row(start_u).sum());
        power = power * adjacency;
    }
    return totals;
}

TwoTypeEnumeration two_type_enumerate(int m, std::size_t order, bool switches_enabled) {
    if (m < 1)
        throw std::invalid_argument("m must be ≥ 1");

    TwoTypeDistribution dist;
    dist[{m, 0, 0}] = 1;
    std::set<int> observed;
    std::vector<GapPolynomial> d0(order + 1);
    std::vector<GapPolynomial> d1(order + 1);

    for (std::size_t n = 0; n <= order; ++n) {
        if (switches_enabled)
            dist = switch_closure(std::move(dist), m);

        GapPolynomial::Terms terms0;
        GapPolynomial::Terms terms1;
        for (const auto& [state, count] : dist) {
            const auto [a, sigma, dpow] = state;
            observed.insert(dpow);
            if (dpow == 0)
                terms0[a] += Rational(count);
            else if (dpow == 1)
                terms1[a] += Rational(count);
            else
                throw OracleInvariantViolation("walk with net d-power " + std::to_string(dpow));
        }
        d0[n] = GapPolynomial(std::move(terms0)).with_homogeneous_degree(m);
        d1[n] = GapPolynomial(std::move(terms1)).with_homogeneous_degree(m);

        if (n == order)
            break;
        TwoTypeDistribution next;
        for (const auto& [state, count] : dist) {
            const auto [a, sigma, dpow] = state;
            if (a > 0)
                next[{a - 1, sigma, dpow}] += count;
            if (a < m)
                next[{a + 1, sigma, dpow}] += count;
        }
        dist = std::move(next);
    }
    return {MarkedSeries(StepSeries(std::move(d0)), StepSeries(std::move(d1))), std::move(observed)};
}

MarkedSeries two_type_counts(int m, std::size_t order, bool switches_enabled) {
    return two_type_enumerate(m, order, switches_enabled).series;
}

} // namespace asepgf
