#include "csnet/experiment/scenario.hpp"

#include "csnet/experiment/config.hpp"
#include "csnet/experiment/report.hpp"

#include <boost/algorithm/string.hpp>

#include <cerrno>
#include <cmath>
#include <cstdlib>

namespace csnet {

const std::string& ParamSet::raw(const std::string& name) const {
    for (const auto& [key, value] : values_)
        if (key == name) return value;
    throw ConfigError("scenario reads undeclared parameter '" + name + "'");
}

Index ParamSet::integer(const std::string& name) const { return std::stoll(raw(name)); }

double ParamSet::real(const std::string& name) const { return std::stod(raw(name)); }

const std::string& ParamSet::text(const std::string& name) const { return raw(name); }

std::string ParamSet::snapshot() const {
    std::string out;
    for (const auto& [key, value] : values_) {
        if (!out.empty()) out += ';';
        out += key + '=' + value;
    }
    return out;
}

namespace {

long long to_integer(const std::string& name, const std::string& text) {
    const std::string t = boost::algorithm::trim_copy(text);
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(t.c_str(), &end, 10);
    if (t.empty() || *end != '\0' || errno != 0)
        throw ConfigError("parameter '" + name + "': '" + text + "' is not an integer");
    return v;
}

double to_real(const std::string& name, const std::string& text) {
    const std::string t = boost::algorithm::trim_copy(text);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || *end != '\0' || errno != 0 || !std::isfinite(v))
        throw ConfigError("parameter '" + name + "': '" + text + "' is not a number");
    return v;
}

std::vector<std::string> expand_value(const ParamSpec& spec, const std::string& text) {
    std::vector<std::string> out;
    if (spec.type != ParamType::Text && text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        boost::algorithm::split(parts, text, boost::algorithm::is_any_of(":"));
        if (parts.size() != 3) throw ConfigError("parameter '" + spec.name + "': range must be lo:hi:step");
        if (spec.type == ParamType::Integer) {
            const long long lo = to_integer(spec.name, parts[0]);
            const long long hi = to_integer(spec.name, parts[1]);
            const long long step = to_integer(spec.name, parts[2]);
            if (step <= 0 || hi < lo) throw ConfigError("parameter '" + spec.name + "': empty range '" + text + "'");
            for (long long v = lo; v <= hi; v += step) out.push_back(std::to_string(v));
        } else {
            const double lo = to_real(spec.name, parts[0]);
            const double hi = to_real(spec.name, parts[1]);
            const double step = to_real(spec.name, parts[2]);
            if (step <= 0.0 || hi < lo) throw ConfigError("parameter '" + spec.name + "': empty range '" + text + "'");
            const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
            for (long long i = 0; i <= count; ++i) out.push_back(format_value(lo + static_cast<double>(i) * step));
        }
    } else {
        std::vector<std::string> items;
        boost::algorithm::split(items, text, boost::algorithm::is_any_of(","));
        for (auto& item : items) {
            boost::algorithm::trim(item);
            switch (spec.type) {
                case ParamType::Integer: out.push_back(std::to_string(to_integer(spec.name, item))); break;
                case ParamType::Real: out.push_back(format_value(to_real(spec.name, item))); break;
                case ParamType::Text:
                    if (item.empty()) throw ConfigError("parameter '" + spec.name + "': empty value");
                    out.push_back(item);
                    break;
            }
        }
    }
    if (out.size() > 10000) throw ConfigError("parameter '" + spec.name + "': more than 10000 values");
    return out;
}

}  // namespace

std::vector<ParamSet> expand_params(const Scenario& scenario, const std::map<std::string, std::string>& raw) {
    for (const auto& [key, value] : raw) {
        bool known = false;
        for (const auto& p : scenario.params) known = known || p.name == key;
        if (!known) throw ConfigError("unknown parameter '" + key + "' for scenario '" + scenario.id + "'");
    }
    std::vector<std::vector<std::pair<std::string, std::string>>> points{{}};
    for (const auto& spec : scenario.params) {
        const auto it = raw.find(spec.name);
        const auto values = expand_value(spec, it == raw.end() ? spec.fallback : it->second);
        std::vector<std::vector<std::pair<std::string, std::string>>> next;
        for (const auto& prefix : points)
            for (const auto& v : values) {
                next.push_back(prefix);
                next.back().emplace_back(spec.name, v);
            }
        points = std::move(next);
        if (points.size() > 100000) throw ConfigError("parameter sweep has more than 100000 points");
    }
    std::vector<ParamSet> out;
    for (auto& p : points) out.emplace_back(std::move(p));
    return out;
}

const Scenario* find_scenario(const std::string& id) {
    for (const auto& s : scenario_registry())
        if (s.id == id) return &s;
    return nullptr;
}

}  // namespace csnet
