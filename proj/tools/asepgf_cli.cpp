// asepgf: compute walk and two-type ASEP generating functions, check them
// against enumeration, and build exact ASEP transition matrices.
//
// Exit codes: 0 success, 1 verification or solve failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "asepgf/asep_chain.hpp"
#include "asepgf/closed_form.hpp"
#include "asepgf/errors.hpp"
#include "asepgf/serialize.hpp"
#include "asepgf/verify.hpp"
#include "asepgf/walk_oracle.hpp"

namespace {

using namespace asepgf;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string kind;
    std::size_t order = 20;
    std::optional<int> m;
    std::optional<int> L;
    std::optional<int> u;
    std::optional<int> end;
    int thm = 0;
    std::optional<int> max_param;
    std::string lambda;
    std::string t_value = "1";
    bool symbolic = false;
    bool no_switches = false;
    std::string format = "json";
    std::string output_path;
};

int require(const std::optional<int>& value, const char* flag) {
    if (!value)
        throw UsageError(std::string("missing --") + flag);
    return *value;
}

void emit(const RunConfig& config, const std::string& text) {
    if (config.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(config.output_path);
    if (!out)
        throw std::runtime_error("cannot open output file " + config.output_path);
    out << text;
}

void emit_series(const RunConfig& config, const StepSeries& s) {
    if (config.format == "csv")
        emit(config, series_to_csv(s));
    else
        emit(config, series_to_json(s, config.kind).dump(2) + "\n");
}

void emit_marked(const RunConfig& config, const MarkedSeries& s) {
    if (config.format == "csv")
        emit(config, marked_to_csv(s));
    else
        emit(config, marked_to_json(s, config.kind).dump(2) + "\n");
}

int run_gf(const RunConfig& config) {
    const auto& kind = config.kind;
    if (kind == "p") {
        emit_series(config, p_series(config.order));
    } else if (kind == "kernel") {
        const LatticeWalkSpec spec{require(config.L, "L"), require(config.u, "u")};
        spec.validate();
        emit_series(config, kernel_gf(spec, config.order));
    } else if (kind == "return") {
        const int m = require(config.m, "m");
        if (m < 0)
            throw UsageError("m must be ≥ 0");
        emit_series(config, return_gf(m, config.order));
    } else if (kind == "crossing") {
        const int m = require(config.m, "m");
        if (m < 1)
            throw UsageError("m must be ≥ 1");
        emit_series(config, crossing_gf(m, config.order));
    } else if (kind == "two-type") {
        const TwoTypeSpec spec{require(config.m, "m"), config.order};
        if (spec.m < 1)
            throw UsageError("m must be ≥ 1");
        emit_marked(config, two_type_gf(spec));
    } else {
        throw UsageError("unknown --kind " + kind);
    }
    return 0;
}

int run_enumerate(const RunConfig& config) {
    const auto& kind = config.kind;
    if (kind == "walks") {
        emit_series(config, walk_counts(require(config.L, "L"), require(config.u, "u"), config.order));
    } else if (kind == "endpoint") {
        emit_series(config, endpoint_filtered_counts(require(config.L, "L"), require(config.u, "u"),
                                                     require(config.end, "end"), config.order));
    } else if (kind == "two-type") {
        const int m = require(config.m, "m");
        if (m < 1)
            throw UsageError("m must be ≥ 1");
        emit_marked(config, two_type_counts(m, config.order, !config.no_switches));
    } else {
        throw UsageError("unknown --kind " + kind);
    }
    return 0;
}

int run_verify(const RunConfig& config) {
    const int max_param = require(config.max_param, config.thm == 1 ? "max-L" : "max-m");
    const VerifyReport report = verify_theorem(config.thm, max_param, config.order);
    if (report.all_equal) {
        std::cout << "theorem " << report.theorem << ": all equal (" << report.instances
                  << " instances, order " << config.order << ")\n";
        return 0;
    }
    std::cout << "theorem " << report.theorem << ": MISMATCH " << report.first_mismatch << "\n";
    return kExitFailure;
}

int run_markov(const RunConfig& config) {
    const Lambda lambda = Lambda::parse(config.lambda);
    const Rational t = Rational::parse(config.t_value);
    if (t < Rational(0) || t > Rational(1))
        throw UsageError("t must lie in [0, 1]");
    const TransitionMatrix matrix = transition_matrix(lambda);
    const auto pi = stationary(matrix, t);
    if (config.format == "csv")
        emit(config, markov_to_csv(matrix, t, pi));
    else
        emit(config, markov_to_json(lambda, matrix, t, pi, config.symbolic).dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generating functions for walks on the linear simplex and the two-type ring ASEP"};
    app.require_subcommand(1);
    RunConfig config;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", config.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("-o,--output", config.output_path, "Write to file instead of stdout");
    };

    auto* gf = app.add_subcommand("gf", "Compute a closed-form series");
    gf->add_option("--kind", config.kind, "p, kernel, return, crossing or two-type")->required();
    gf->add_option("--order", config.order, "Truncation order N");
    gf->add_option("--m", config.m, "Boundary size m");
    gf->add_option("--L", config.L, "Lattice size L");
    gf->add_option("--u", config.u, "Start coordinate u");
    add_format(gf);

    auto* enumerate = app.add_subcommand("enumerate", "Brute-force walk counts");
    enumerate->add_option("--kind", config.kind, "walks, endpoint or two-type")->required();
    enumerate->add_option("--order", config.order, "Truncation order N");
    enumerate->add_option("--m", config.m, "Boundary size m");
    enumerate->add_option("--L", config.L, "Lattice size L");
    enumerate->add_option("--u", config.u, "Start coordinate u");
    enumerate->add_option("--end", config.end, "End coordinate");
    enumerate->add_flag("--no-switches", config.no_switches, "Disable 2-1 switch moves");
    add_format(enumerate);

    auto* verify = app.add_subcommand("verify", "Compare closed forms with enumeration");
    verify->add_option("--thm", config.thm, "Which generating function: 1 kernel, 2 return, 3 crossing, 4 two-type")
        ->required();
    verify->add_option("--max-L,--max-m", config.max_param, "Largest L (thm 1) or m (thm 2-4)");
    verify->add_option("--order", config.order, "Truncation order N");

    auto* markov = app.add_subcommand("markov", "Transition matrix and stationary vector of ASEP(lambda)");
    markov->add_option("--lambda", config.lambda, "Partition, e.g. 2,1,0")->required();
    markov->add_option("--t", config.t_value, "Rate parameter as p/q in [0, 1]");
    markov->add_flag("--symbolic", config.symbolic, "Emit entries as c0 + c1 t");
    add_format(markov);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gf->parsed())
            return run_gf(config);
        if (enumerate->parsed())
            return run_enumerate(config);
        if (verify->parsed())
            return run_verify(config);
        return run_markov(config);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SingularChain& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
