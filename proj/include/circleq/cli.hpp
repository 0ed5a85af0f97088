#ifndef CIRCLEQ_CLI_HPP
#define CIRCLEQ_CLI_HPP

#include "circleq/observable.hpp"
#include "circleq/symbol_analysis.hpp"
#include "circleq/types.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace circleq {

// Exit-code contract.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_io = 2;
inline constexpr int exit_assert = 3;

enum class Command {
    quantize,
    phase_state,
    spectrum,
    commutator,
    scan,
    compare_pb,
    ladder,
    resolution_check
};

enum class OutputFormat { csv, json };

enum class SpectrumTarget { allones, phase, pegg_barnett, number_phase_commutator, quantized };

struct RunConfig {
    Command command = Command::quantize;
    std::optional<int> dim;
    std::vector<int> dims;
    std::optional<std::string> observable_spec;
    std::optional<double> theta;
    double theta0 = 0.0;
    std::optional<int> grid;
    std::optional<int> grid_factor;
    std::string out_path;  // empty: stdout
    OutputFormat format = OutputFormat::json;
    MatrixNorm norm = MatrixNorm::frobenius;
    bool include_reference_diagonal = false;
    bool assert_checks = false;
    bool emit_plot = false;
    std::optional<ScanQuantity> quantity;
    SpectrumTarget spectrum_target = SpectrumTarget::allones;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by parse_args when --help was requested; carries the help text.
struct HelpRequested {
    std::string text;
};

/// Observable spec grammar: "const:<re>[,<im>]", "theta", "theta2",
/// "exp:<k>", "trigpoly:<k0>:<re>,<im>;<re>,<im>;...".
/// Unknown specs raise UsageError listing the catalog names.
ClassicalObservable parse_observable_spec(const std::string& spec);

/// argv (without the program name) -> validated RunConfig.
/// Throws UsageError on unknown commands, malformed numbers, missing or
/// conflicting flags; throws HelpRequested for --help.
RunConfig parse_args(const std::vector<std::string>& args);

/// Execute a parsed config; writes the artifact to --out (or stdout) and
/// returns an exit code per the contract above.
int run(const RunConfig& config);

/// parse_args + run with all errors mapped to exit codes.
int cli_main(const std::vector<std::string>& args);

}  // namespace circleq

#endif
