#include "asepgf/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "asepgf/closed_form.hpp"
#include "asepgf/walk_oracle.hpp"

namespace asepgf {

std::optional<std::string> first_mismatch(const StepSeries& closed, const StepSeries& oracle) {
    if (closed.order() != oracle.order())
        return "orders differ: " + std::to_string(closed.order()) + " vs " +
               std::to_string(oracle.order());
    for (std::size_t n = 0; n <= closed.order(); ++n) {
        if (closed[n] == oracle[n])
            continue;
        std::ostringstream out;
        out << "t^" << n << ": closed form " << closed[n] << ", oracle " << oracle[n];
        return out.str();
    }
    return std::nullopt;
}

std::optional<std::string> first_mismatch(const MarkedSeries& closed, const MarkedSeries& oracle) {
    for (int d : {0, 1}) {
        if (auto m = first_mismatch(closed.grade(d), oracle.grade(d)))
            return "d^" + std::to_string(d) + " " + *m;
    }
    return std::nullopt;
}

VerifyReport verify_theorem(int theorem, int max_param, std::size_t order) {
    VerifyReport report;
    report.theorem = theorem;
    auto record = [&](const std::string& instance, std::optional<std::string> mismatch) {
        ++report.instances;
        if (mismatch && report.all_equal) {
            report.all_equal = false;
            report.first_mismatch = instance + ": " + *mismatch;
        }
    };

    switch (theorem) {
    case 1:
        if (max_param < 0)
            throw std::invalid_argument("max-L must be ≥ 0");
        for (int L = 0; L <= max_param; ++L) {
            for (int u = 0; u <= L; ++u)
                record("L=" + std::to_string(L) + " u=" + std::to_string(u),
                       first_mismatch(kernel_gf({L, u}, order), walk_counts(L, u, order)));
        }
        break;
    case 2:
        if (max_param < 0)
            throw std::invalid_argument("max-m must be ≥ 0");
        for (int m = 0; m <= max_param; ++m)
            record("m=" + std::to_string(m),
                   first_mismatch(return_gf(m, order), endpoint_filtered_counts(m, m, m, order)));
        break;
    case 3:
        if (max_param < 1)
            throw std::invalid_argument("max-m must be ≥ 1");
        for (int m = 1; m <= max_param; ++m)
            record("m=" + std::to_string(m),
                   first_mismatch(crossing_gf(m, order), endpoint_filtered_counts(m, m, 0, order)));
        break;
    case 4:
        if (max_param < 1)
            throw std::invalid_argument("max-m must be ≥ 1");
        for (int m = 1; m <= max_param; ++m)
            record("m=" + std::to_string(m),
                   first_mismatch(two_type_gf({m, order}), two_type_counts(m, order)));
        break;
    default:
        throw std::invalid_argument("theorem must be 1, 2, 3 or 4");
    }
    return report;
}

} // namespace asepgf
