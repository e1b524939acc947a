#include <doctest.h>

#include <functional>
#include <map>
#include <tuple>

#include "asepgf/walk_oracle.hpp"

using namespace asepgf;

namespace {

GapPolynomial x(long e, long c = 1) { return GapPolynomial::monomial(c, e); }

// Lists every +-1 step sequence of length n and keeps those inside [0, L].
std::map<int, long> exhaustive_endpoints(int L, int u, int n) {
    std::map<int, long> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        int a = u;
        bool inside = true;
        for (int k = 0; k < n && inside; ++k) {
            a += (mask >> k) & 1 ? 1 : -1;
            inside = a >= 0 && a <= L;
        }
        if (inside)
            ++out[a];
    }
    return out;
}

// Depth-first listing of switch walks with at most max_hops hops.
// Key: (hops, a, net d-power).
std::map<std::tuple<int, int, int>, long> list_switch_walks(int m, int max_hops) {
    std::map<std::tuple<int, int, int>, long> out;
    std::function<void(int, int, int, int)> walk = [&](int hops, int a, int sigma, int d) {
        ++out[{hops, a, d}];
        if (a == m && sigma == 0)
            walk(hops, a, 1, d + 1);
        if (a == 0 && sigma == 1)
            walk(hops, a, 0, d - 1);
        if (hops == max_hops)
            return;
        if (a > 0)
            walk(hops + 1, a - 1, sigma, d);
        if (a < m)
            walk(hops + 1, a + 1, sigma, d);
    };
    walk(0, m, 0, 0);
    return out;
}

} // namespace

TEST_CASE("walk_counts examples") {
    CHECK(walk_counts(1, 1, 2)[2] == x(1));
    CHECK(walk_counts(2, 2, 2)[2] == x(2) + x(0));
    for (int L = 0; L <= 4; ++L) {
        for (int u = 0; u <= L; ++u)
            CHECK(walk_counts(L, u, 3)[0] == x(u));
    }
    CHECK_THROWS_AS(walk_counts(2, 3, 2), std::invalid_argument);
}

TEST_CASE("walk_counts agrees with exhaustive listing") {
    for (int L = 0; L <= 4; ++L) {
        for (int u = 0; u <= L; ++u) {
            const StepSeries s = walk_counts(L, u, 10);
            for (int n = 0; n <= 10; ++n) {
                GapPolynomial expected;
                for (const auto& [a, count] : exhaustive_endpoints(L, u, n))
                    expected += x(a, count);
                CHECK(s[n] == expected);
            }
        }
    }
}

TEST_CASE("walk_counts totals agree with adjacency-matrix powers") {
    for (int L = 0; L <= 5; ++L) {
        for (int u = 0; u <= L; ++u) {
            const auto sums = walk_counts(L, u, 20).evaluated_at_one();
            const auto totals = walk_totals_by_matrix_power(L, u, 20);
            for (std::size_t n = 0; n <= 20; ++n)
                CHECK(sums[n] == Rational(totals[n]));
        }
    }
    CHECK_THROWS_AS(walk_totals_by_matrix_power(2, 0, 63), std::invalid_argument);
}

TEST_CASE("walk_counts nonnegative integers and reflection symmetry") {
    for (int L = 0; L <= 5; ++L) {
        for (int u = 0; u <= L; ++u) {
            const StepSeries s = walk_counts(L, u, 12);
            for (const auto& c : s.coefficients()) {
                for (const auto& [a, value] : c.terms())
                    CHECK((value.is_integer() && value.sign() > 0));
            }
            CHECK(s.reflected(L) == walk_counts(L, L - u, 12));
        }
    }
}

TEST_CASE("endpoint_filtered_counts") {
    CHECK(endpoint_filtered_counts(1, 1, 1, 6) ==
          StepSeries::from_scalars({1, 0, 1, 0, 1, 0, 1}));
    CHECK(endpoint_filtered_counts(2, 2, 0, 6) ==
          StepSeries::from_scalars({0, 0, 1, 0, 2, 0, 4}));
    for (int L = 0; L <= 5; ++L) {
        for (int u = 0; u <= L; ++u) {
            for (int w = 0; w <= L; ++w) {
                const StepSeries s = endpoint_filtered_counts(L, u, w, 14);
                if (u == w)
                    CHECK(s[0] == GapPolynomial::constant(1));
                for (std::size_t n = 0; n <= 14; ++n) {
                    const int diff = u > w ? u - w : w - u;
                    if ((static_cast<int>(n) - diff) % 2 != 0)
                        CHECK(s[n].is_zero());
                }
            }
        }
    }
}

TEST_CASE("two_type_counts examples") {
    const MarkedSeries a = two_type_counts(1, 1);
    CHECK(a.d0()[0] == x(1));
    CHECK(a.d1()[0] == x(1));
    CHECK(a.d0()[1] == x(0, 2));
    CHECK(a.d1()[1] == x(0, 1));
    CHECK_THROWS_AS(two_type_counts(0, 3), std::invalid_argument);
}

TEST_CASE("two_type_counts agrees with depth-first listing") {
    for (int m = 1; m <= 3; ++m) {
        const int hops = 8;
        const MarkedSeries dp = two_type_counts(m, hops);
        const auto listed = list_switch_walks(m, hops);
        std::vector<GapPolynomial> d0(hops + 1), d1(hops + 1);
        for (const auto& [key, count] : listed) {
            const auto [n, a, d] = key;
            REQUIRE((d == 0 || d == 1));
            (d == 0 ? d0 : d1)[n] += x(a, count);
        }
        CHECK(dp == MarkedSeries(StepSeries(d0), StepSeries(d1)));
    }
}

TEST_CASE("two-type net d-powers stay in {0, 1}") {
    for (int m = 1; m <= 4; ++m) {
        const auto e = two_type_enumerate(m, 12);
        CHECK(e.observed_d_powers == std::set<int>{0, 1});
    }
}

TEST_CASE("two_type_counts without switches is walk_counts") {
    for (int m = 1; m <= 4; ++m) {
        const MarkedSeries a = two_type_counts(m, 12, false);
        CHECK(a.d0() == walk_counts(m, m, 12));
        CHECK(a.d1().is_zero());
    }
}
