#pragma once

#include "csnet/core/types.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace csnet {

enum class ParamType { Integer, Real, Text };

struct ParamSpec {
    std::string name;
    ParamType type = ParamType::Real;
    std::string fallback;
    std::string help;
};

/// One point of a parameter sweep: every declared parameter with a single
/// value.
class ParamSet {
public:
    ParamSet() = default;
    explicit ParamSet(std::vector<std::pair<std::string, std::string>> values) : values_(std::move(values)) {}

    Index integer(const std::string& name) const;
    double real(const std::string& name) const;
    const std::string& text(const std::string& name) const;

    /// "name=value" pairs joined by ';' in declaration order.
    std::string snapshot() const;
    const std::vector<std::pair<std::string, std::string>>& values() const { return values_; }

private:
    const std::string& raw(const std::string& name) const;
    std::vector<std::pair<std::string, std::string>> values_;
};

/// Metrics of one (parameter point, seed) trial, plus the problem sizes that
/// fill the fixed n, m, k, s report columns when they apply.
struct TrialOutput {
    std::optional<Index> n, m, k, s;
    std::vector<std::pair<std::string, double>> metrics;

    void add(const std::string& name, double value) { metrics.emplace_back(name, value); }
};

using ScenarioFn = std::function<TrialOutput(const ParamSet&, std::uint64_t seed)>;

struct Scenario {
    std::string id;
    std::string topic;
    std::string description;
    std::vector<ParamSpec> params;
    ScenarioFn run;
};

const std::vector<Scenario>& scenario_registry();
/// nullptr when the id is unknown.
const Scenario* find_scenario(const std::string& id);

/// Expands raw parameter text into sweep points. Numeric parameters accept a
/// comma list or an inclusive lo:hi:step range; text parameters accept a comma
/// list. Points are the cartesian product in declaration order, the first
/// parameter varying slowest. Unknown keys and malformed values throw
/// ConfigError.
std::vector<ParamSet> expand_params(const Scenario& scenario, const std::map<std::string, std::string>& raw);

}  // namespace csnet
