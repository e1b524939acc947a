#include "asepgf/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace asepgf {

namespace {

void append_csv_rows(std::ostringstream& out, const StepSeries& s, int d) {
    for (std::size_t n = 0; n <= s.order(); ++n) {
        for (const auto& [x, c] : s[n].terms())
            out << n << ',' << x << ',' << d << ',' << c.to_string() << '\n';
    }
}

} // namespace

Json series_to_json(const StepSeries& s, const std::string& kind) {
    Json j;
    j["kind"] = kind;
    j["order"] = s.order();
    if (const auto L = s.homogeneous_degree())
        j["homogeneous_degree"] = *L;
    else
        j["homogeneous_degree"] = nullptr;
    Json coefficients = Json::array();
    for (std::size_t n = 0; n <= s.order(); ++n) {
        Json terms = Json::array();
        for (const auto& [x, c] : s[n].terms())
            terms.push_back(Json{{"x", x}, {"value", c.to_string()}});
        coefficients.push_back(Json{{"t", n}, {"terms", std::move(terms)}});
    }
    j["coefficients"] = std::move(coefficients);
    return j;
}

Json marked_to_json(const MarkedSeries& s, const std::string& kind) {
    Json out = Json::array();
    for (int d : {0, 1}) {
        Json j = series_to_json(s.grade(d), kind);
        j["d_grade"] = d;
        out.push_back(std::move(j));
    }
    return out;
}

StepSeries series_from_json(const Json& j) {
    try {
        const auto order = j.at("order").get<std::size_t>();
        const auto& coefficients = j.at("coefficients");
        if (coefficients.size() != order + 1)
            throw std::invalid_argument("coefficient count does not match order");
        std::optional<GapPolynomial::Exponent> degree;
        if (!j.at("homogeneous_degree").is_null())
            degree = j.at("homogeneous_degree").get<GapPolynomial::Exponent>();

        std::vector<GapPolynomial> out(order + 1);
        for (const auto& entry : coefficients) {
            const auto n = entry.at("t").get<std::size_t>();
            if (n > order)
                throw std::invalid_argument("t-exponent beyond order");
            GapPolynomial::Terms terms;
            for (const auto& term : entry.at("terms")) {
                const auto x = term.at("x").get<GapPolynomial::Exponent>();
                if (!terms.emplace(x, Rational::parse(term.at("value").get<std::string>())).second)
                    throw std::invalid_argument("duplicate x-exponent");
            }
            out[n] = GapPolynomial(std::move(terms)).with_homogeneous_degree(degree);
        }
        return StepSeries(std::move(out));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("series JSON: ") + e.what());
    }
}

MarkedSeries marked_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("marked series JSON must be an array of two grades");
    std::optional<StepSeries> grades[2];
    for (const auto& g : j) {
        int d = -1;
        try {
            d = g.at("d_grade").get<int>();
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("marked series JSON: ") + e.what());
        }
        if (d != 0 && d != 1)
            throw std::invalid_argument("d_grade must be 0 or 1");
        grades[d] = series_from_json(g);
    }
    if (!grades[0] || !grades[1])
        throw std::invalid_argument("marked series JSON needs both d grades");
    return MarkedSeries(*grades[0], *grades[1]);
}

std::string series_to_csv(const StepSeries& s) {
    std::ostringstream out;
    out << "t,x,d,value\n";
    append_csv_rows(out, s, 0);
    return out.str();
}

std::string marked_to_csv(const MarkedSeries& s) {
    std::ostringstream out;
    out << "t,x,d,value\n";
    append_csv_rows(out, s.d0(), 0);
    append_csv_rows(out, s.d1(), 1);
    return out.str();
}

Json markov_to_json(const Lambda& lambda, const TransitionMatrix& matrix, const Rational& t,
                    const std::vector<Rational>& pi, bool symbolic) {
    Json j;
    j["lambda"] = lambda.parts();
    j["n"] = lambda.n();
    j["t"] = t.to_string();
    Json states = Json::array();
    for (const auto& w : matrix.states)
        states.push_back(to_string(w));
    j["states"] = std::move(states);

    const auto numeric = matrix.evaluated(t);
    Json rows = Json::array();
    Json sums = Json::array();
    for (std::size_t r = 0; r < matrix.size(); ++r) {
        Json row = Json::array();
        Rational sum;
        for (std::size_t c = 0; c < matrix.size(); ++c) {
            sum += numeric[r][c];
            if (symbolic) {
                row.push_back(Json{{"c0", matrix.entries[r][c].c0.to_string()},
                                   {"c1", matrix.entries[r][c].c1.to_string()}});
            } else {
                row.push_back(numeric[r][c].to_string());
            }
        }
        rows.push_back(std::move(row));
        sums.push_back(sum.to_string());
    }
    j["matrix"] = std::move(rows);
    j["row_sums"] = std::move(sums);
    Json stationary = Json::array();
    for (const auto& p : pi)
        stationary.push_back(p.to_string());
    j["stationary"] = std::move(stationary);
    return j;
}

std::string markov_to_csv(const TransitionMatrix& matrix, const Rational& t,
                          const std::vector<Rational>& pi) {
    std::ostringstream out;
    out << "record,from,to,value\n";
    const auto numeric = matrix.evaluated(t);
    for (std::size_t r = 0; r < matrix.size(); ++r) {
        for (std::size_t c = 0; c < matrix.size(); ++c) {
            if (!numeric[r][c].is_zero())
                out << "P," << to_string(matrix.states[r]) << ',' << to_string(matrix.states[c])
                    << ',' << numeric[r][c].to_string() << '\n';
        }
    }
    for (std::size_t r = 0; r < pi.size(); ++r)
        out << "pi," << to_string(matrix.states[r]) << ",," << pi[r].to_string() << '\n';
    return out.str();
}

} // namespace asepgf
