#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hodgekit::cli {

enum class Command {
    Betti,
    Boundary,
    Laplacian,
    Spectrum,
    Sft,
    Decompose,
    Filter,
    SheafCohomology,
    SheafCheck,
    SpectraCompare,
    Generate,
};

enum class LaplacianPart { Up, Down, Full };

struct RunConfig {
    Command command = Command::Betti;
    std::string complex_path;
    std::string signal_path;
    std::string filter_path;
    std::string sheaf_path;
    std::string assignment_path;
    std::string weights_path;
    std::string field = "gf2";
    int dim = 0;
    LaplacianPart part = LaplacianPart::Full;
    bool inverse = false;
    std::optional<double> tol;
    std::string output_path;
    std::string dump_matrix_path;

    // generate
    std::string kind;
    std::size_t n = 0;
    std::size_t k = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Executes one command, writing its artifact to `out` (or the configured
/// output file) and diagnostics to `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses command-line arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hodgekit::cli
