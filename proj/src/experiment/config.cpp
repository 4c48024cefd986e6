#include "csnet/experiment/config.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace csnet {

namespace {

std::uint64_t parse_u64(const std::string& text) {
    const std::string t = boost::algorithm::trim_copy(text);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError("invalid seed '" + text + "'");
    try {
        return std::stoull(t);
    } catch (const std::exception&) {
        throw ConfigError("seed out of range '" + text + "'");
    }
}

}  // namespace

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::string> items;
    boost::algorithm::split(items, text, boost::algorithm::is_any_of(","));
    std::vector<std::uint64_t> seeds;
    for (const auto& raw : items) {
        const std::string item = boost::algorithm::trim_copy(raw);
        if (item.empty()) throw ConfigError("empty item in seeds '" + text + "'");
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
            seeds.push_back(parse_u64(item));
            continue;
        }
        const auto lo = parse_u64(item.substr(0, dash));
        const auto hi = parse_u64(item.substr(dash + 1));
        if (hi < lo) throw ConfigError("descending seed range '" + item + "'");
        if (hi - lo >= 1000000) throw ConfigError("seed range too long '" + item + "'");
        for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
    }
    std::set<std::uint64_t> unique(seeds.begin(), seeds.end());
    if (unique.size() != seeds.size()) throw ConfigError("duplicate seeds in '" + text + "'");
    return seeds;
}

ExperimentConfig parse_config(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    boost::property_tree::ptree tree;
    try {
        std::istringstream copy(text);
        boost::property_tree::ini_parser::read_ini(copy, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError("config parse error: " + e.message() + " at line " + std::to_string(e.line()));
    }

    ExperimentConfig cfg;
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
    cfg.hash = hex;

    bool have_seeds = false;
    for (const auto& [section, body] : tree) {
        if (!body.data().empty()) throw ConfigError("key '" + section + "' outside a section");
        if (section == "experiment") {
            for (const auto& [key, value] : body) {
                const std::string v = boost::algorithm::trim_copy(value.data());
                if (key == "scenario") {
                    cfg.scenario = v;
                } else if (key == "seeds") {
                    cfg.seeds = parse_seeds(v);
                    have_seeds = true;
                } else if (key == "output_dir") {
                    cfg.output_dir = v;
                } else {
                    throw ConfigError("unknown key '" + key + "' in [experiment]");
                }
            }
        } else if (section == "params") {
            for (const auto& [key, value] : body) cfg.params[key] = boost::algorithm::trim_copy(value.data());
        } else {
            throw ConfigError("unknown section [" + section + "]");
        }
    }
    if (cfg.scenario.empty()) throw ConfigError("missing [experiment] scenario");
    if (!have_seeds || cfg.seeds.empty()) throw ConfigError("missing [experiment] seeds");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    return parse_config(in);
}

}  // namespace csnet
