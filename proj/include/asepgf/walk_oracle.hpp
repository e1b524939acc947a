#ifndef ASEPGF_WALK_ORACLE_HPP
#define ASEPGF_WALK_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "asepgf/step_series.hpp"

// Brute-force enumeration of walks. Nothing here uses series algebra beyond
// packaging the final counts, so it is the ground truth for closed_form.
namespace asepgf {

// t^n coefficient: sum_a (#n-step walks start_u -> a on [0, L]) x^a.
StepSeries walk_counts(int L, int start_u, std::size_t order);

// x-free count of walks start_u -> end_u on [0, L].
StepSeries endpoint_filtered_counts(int L, int start_u, int end_u, std::size_t order);

// Second route: row sums of powers of the path-graph adjacency matrix.
// Entry n is the total number of n-step walks from start_u. Counts are
// bounded by 2^n, so order is limited to 62.
std::vector<std::int64_t> walk_totals_by_matrix_power(int L, int start_u, std::size_t order);

struct TwoTypeState {
    int a = 0;     // lattice coordinate u in [0, m]
    int sigma = 0; // parity of switches so far
};

struct TwoTypeEnumeration {
    MarkedSeries series;
    std::set<int> observed_d_powers;
};

// Switch-walk model on [0, m]: hops a -> a +- 1 cost one t; the step-free
// switch (m, 0) -> (m, 1) contributes d and (0, 1) -> (0, 0) contributes
// 1/d. Walks start at (m, 0), and the endpoint is marked x^a for either
// sigma. Throws OracleInvariantViolation if a net d-power other than 0 or 1
// is ever reached.
TwoTypeEnumeration two_type_enumerate(int m, std::size_t order, bool switches_enabled = true);

MarkedSeries two_type_counts(int m, std::size_t order, bool switches_enabled = true);

} // namespace asepgf

#endif // ASEPGF_WALK_ORACLE_HPP
