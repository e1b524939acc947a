#ifndef ASEPGF_VERIFY_HPP
#define ASEPGF_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "asepgf/step_series.hpp"

namespace asepgf {

// Describes the first coefficient where a and b differ, or nullopt if they
// agree to the smaller order. Orders must match.
std::optional<std::string> first_mismatch(const StepSeries& closed, const StepSeries& oracle);
std::optional<std::string> first_mismatch(const MarkedSeries& closed, const MarkedSeries& oracle);

struct VerifyReport {
    int theorem = 0;
    std::size_t instances = 0;
    bool all_equal = true;
    std::string first_mismatch;
};

// Closed form vs oracle over a parameter range:
//   1: kernel_gf(L, u) vs walk_counts, 0 <= u <= L <= max_param
//   2: return_gf(m) vs endpoint counts m -> m, 0 <= m <= max_param
//   3: crossing_gf(m) vs endpoint counts m -> 0, 1 <= m <= max_param
//   4: two_type_gf(m) vs two_type_counts(m), 1 <= m <= max_param
// std::invalid_argument for an unknown theorem or empty range.
VerifyReport verify_theorem(int theorem, int max_param, std::size_t order);

} // namespace asepgf

#endif // ASEPGF_VERIFY_HPP
