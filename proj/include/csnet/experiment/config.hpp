#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace csnet {

inline constexpr const char* kToolkitVersion = "1.0.0";

/// Malformed or invalid experiment configuration. The CLI exits with code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed experiment file:
///
///     [experiment]
///     scenario = omp-sweep
///     seeds = 0-99
///     output_dir = results/omp
///
///     [params]
///     n = 256
///     m = 20:80:10
///
/// `seeds` is a comma list whose items are integers or inclusive a-b ranges.
/// Parameter values are raw text; the scenario schema types and expands them.
struct ExperimentConfig {
    std::string scenario;
    std::vector<std::uint64_t> seeds;
    std::string output_dir = "results";
    std::map<std::string, std::string> params;
    /// FNV-1a hash of the file text, hex encoded.
    std::string hash;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

std::vector<std::uint64_t> parse_seeds(const std::string& text);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& text);

}  // namespace csnet
