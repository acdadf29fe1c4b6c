#ifndef SUZUKI_CLI_HPP
#define SUZUKI_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace suzuki::cli {

enum class Command {
    params,
    a_number,
    basis,
    matrix,
    rank_profile,
    eo_constraints,
    eo_enumerate,
    points,
    verify,
    all,
};

enum class Format { pretty, json, csv };

struct RunConfig {
    int m = 1;
    Command command = Command::params;
    Format format = Format::pretty;
    std::optional<std::string> cache_dir; // flag wins over SUZUKI_CARTIER_CACHE_DIR
    bool verify_oracle = false;           // force the oracle cross-check for m > 2
    bool allow_large = false;             // lift the m <= 4 bound on matrix commands
    int jobs = 1;
    std::vector<int> k_values = {1};      // points
    bool naive_check = false;             // points: brute-force cross-check
    uint64_t cap = 1'000'000;             // eo-enumerate
    std::optional<std::string> matrix_out; // matrix: explicit output file
};

/// Executes one command.  Returns 0 on success, 1 on verification failure or
/// runtime error, 2 on usage error.  Output for a fixed config is
/// deterministic, including across --jobs settings.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

std::filesystem::path cache_file_path(const std::filesystem::path& dir, int m);
std::optional<std::string> cache_dir_from_env();

} // namespace suzuki::cli

#endif // SUZUKI_CLI_HPP
