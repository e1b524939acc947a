#ifndef ASEPGF_SERIALIZE_HPP
#define ASEPGF_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "asepgf/asep_chain.hpp"
#include "asepgf/step_series.hpp"

namespace asepgf {

using Json = nlohmann::ordered_json;

// {"kind", "order", "homogeneous_degree" (null if unset),
//  "coefficients": [{"t": n, "terms": [{"x": a, "value": "num/den"}]}]}
Json series_to_json(const StepSeries& s, const std::string& kind);
// Array of two series objects, each with an extra "d_grade" of 0 or 1.
Json marked_to_json(const MarkedSeries& s, const std::string& kind);

// Throw std::invalid_argument on schema errors.
StepSeries series_from_json(const Json& j);
MarkedSeries marked_from_json(const Json& j);

// Header "t,x,d,value"; one row per nonzero term. Plain series use d = 0.
std::string series_to_csv(const StepSeries& s);
std::string marked_to_csv(const MarkedSeries& s);

// states, entries as "num/den" at t (or {"c0","c1"} pairs when symbolic),
// row sums, stationary vector.
Json markov_to_json(const Lambda& lambda, const TransitionMatrix& matrix, const Rational& t,
                    const std::vector<Rational>& pi, bool symbolic);
// Header "record,from,to,value": record "P" for nonzero entries at t,
// "pi" (to empty) for the stationary vector.
std::string markov_to_csv(const TransitionMatrix& matrix, const Rational& t,
                          const std::vector<Rational>& pi);

} // namespace asepgf

#endif // ASEPGF_SERIALIZE_HPP
