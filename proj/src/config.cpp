#include "botsim/config.hpp"

#include <cctype>
#include <fstream>

namespace botsim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

std::int64_t parse_int(const std::string& value, const std::string& key,
                       const std::string& where) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty()) {
        throw ConfigError(where + ": key '" + key + "': expected integer, got '" + value + "'");
    }
    return v;
}

std::uint64_t parse_uint(const std::string& value, const std::string& key,
                         const std::string& where) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty() || value[0] == '-') {
        throw ConfigError(where + ": key '" + key + "': expected unsigned integer, got '" +
                          value + "'");
    }
    return v;
}

double parse_double(const std::string& value, const std::string& key,
                    const std::string& where) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty()) {
        throw ConfigError(where + ": key '" + key + "': expected number, got '" + value + "'");
    }
    return v;
}

Heading parse_heading(const std::string& value, const std::string& key,
                      const std::string& where) {
    if (value == "toward_red") return Heading::TowardRed;
    if (value == "toward_green") return Heading::TowardGreen;
    throw ConfigError(where + ": key '" + key +
                      "': expected toward_red or toward_green, got '" + value + "'");
}

bool parse_agent_key(const std::string& key, int& index) {
    if (key.size() < 6 || key.compare(0, 5, "agent") != 0) return false;
    const std::string digits = key.substr(5);
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    index = std::stoi(digits);
    return true;
}

}  // namespace

void apply_setting(SimConfig& cfg, const std::string& key, const std::string& value,
                   const std::string& where) {
    if (key == "n_agents") {
        cfg.n_agents = parse_int(value, key, where);
    } else if (key == "strip_length") {
        cfg.strip_length = parse_int(value, key, where);
    } else if (key == "capacity") {
        cfg.capacity = parse_int(value, key, where);
    } else if (key == "thresholds") {
        const auto parts = split(value, ',');
        if (parts.size() != 4) {
            throw ConfigError(where + ": key 'thresholds': expected 4 comma-separated "
                              "fractions, got '" + value + "'");
        }
        cfg.thresholds.t1 = parse_double(parts[0], key, where);
        cfg.thresholds.t2 = parse_double(parts[1], key, where);
        cfg.thresholds.t3 = parse_double(parts[2], key, where);
        cfg.thresholds.t4 = parse_double(parts[3], key, where);
    } else if (key == "move_drain") {
        cfg.move_drain = parse_int(value, key, where);
    } else if (key == "idle_drain") {
        cfg.idle_drain = parse_int(value, key, where);
    } else if (key == "charge_rate") {
        cfg.charge_rate = parse_int(value, key, where);
    } else if (key == "dock_to_charger_ticks") {
        cfg.dock_to_charger_ticks = parse_int(value, key, where);
    } else if (key == "charge_to") {
        cfg.charge_to = parse_double(value, key, where);
    } else if (key == "weights") {
        cfg.weights.clear();
        for (const auto& part : split(value, ',')) {
            cfg.weights.push_back(parse_double(part, key, where));
        }
    } else if (key == "policy") {
        if (value == "plain") {
            cfg.policy = Policy::PlainFcfs;
        } else if (value == "immune") {
            cfg.policy = Policy::ImmuneFcfs;
        } else {
            throw ConfigError(where + ": key 'policy': expected plain or immune, got '" +
                              value + "'");
        }
    } else if (key == "ticks") {
        cfg.ticks = parse_int(value, key, where);
    } else if (key == "seed") {
        cfg.seed = parse_uint(value, key, where);
    } else if (int index = 0; parse_agent_key(key, index)) {
        const auto parts = split(value, ',');
        if (parts.size() != 3) {
            throw ConfigError(where + ": key '" + key + "': expected position,heading,charge, "
                              "got '" + value + "'");
        }
        AgentInit init;
        init.position = parse_int(parts[0], key, where);
        init.heading = parse_heading(parts[1], key, where);
        init.charge = parse_int(parts[2], key, where);
        if (index < 1) {
            throw ConfigError(where + ": key '" + key + "': agent index is 1-based");
        }
        if (static_cast<std::size_t>(index) > cfg.initial_override.size()) {
            // Gaps are sentinel-filled and must be covered by later lines;
            // finalize_config rejects anything left unset.
            cfg.initial_override.resize(index, AgentInit{-1, Heading::TowardRed, -1});
        }
        cfg.initial_override[index - 1] = init;
    } else {
        throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

void finalize_config(SimConfig& cfg) {
    if (cfg.n_agents < 1) {
        throw ConfigError("n_agents must be at least 1");
    }
    if (cfg.strip_length < 1) {
        throw ConfigError("strip_length must be positive");
    }
    if (cfg.capacity < 1) {
        throw ConfigError("capacity must be positive");
    }
    const BandThresholds& t = cfg.thresholds;
    if (!(t.t1 < 1.0 && t.t1 > t.t2 && t.t2 > t.t3 && t.t3 > t.t4 && t.t4 >= 0.0 &&
          t.t3 > 0.0)) {
        throw ConfigError("thresholds must satisfy 1 > t1 > t2 > t3 > t4 >= 0");
    }
    cfg.bounds = BandBoundaries::from(t, cfg.capacity);
    if (!(cfg.bounds.edge_high > cfg.bounds.edge_average &&
          cfg.bounds.edge_average > cfg.bounds.edge_medium &&
          cfg.bounds.edge_medium > cfg.bounds.edge_low)) {
        throw ConfigError("thresholds collapse at this capacity: band boundaries must be "
                          "strictly decreasing");
    }
    if (cfg.move_drain < 1) {
        throw ConfigError("move_drain must be at least 1");
    }
    if (cfg.idle_drain < 1) {
        throw ConfigError("idle_drain must be at least 1");
    }
    if (cfg.charge_rate <= cfg.move_drain) {
        throw ConfigError("charge_rate must exceed move_drain (charge_rate = " +
                          std::to_string(cfg.charge_rate) + ", move_drain = " +
                          std::to_string(cfg.move_drain) + ")");
    }
    if (cfg.dock_to_charger_ticks < 0) {
        throw ConfigError("dock_to_charger_ticks must be non-negative");
    }
    if (!(cfg.charge_to > 0.0 && cfg.charge_to <= 1.0)) {
        throw ConfigError("charge_to must be in (0, 1]");
    }
    cfg.charge_target = charge_units(cfg.charge_to, cfg.capacity);
    if (cfg.weights.empty()) {
        cfg.weights.assign(static_cast<std::size_t>(cfg.n_agents), 1.0);
    }
    if (cfg.weights.size() != static_cast<std::size_t>(cfg.n_agents)) {
        throw ConfigError("weights: expected " + std::to_string(cfg.n_agents) +
                          " entries, got " + std::to_string(cfg.weights.size()));
    }
    for (double w : cfg.weights) {
        if (w < 0.0) throw ConfigError("weights must be non-negative");
    }
    if (cfg.ticks < 0) {
        throw ConfigError("ticks must be non-negative");
    }
    if (!cfg.initial_override.empty()) {
        if (cfg.initial_override.size() != static_cast<std::size_t>(cfg.n_agents)) {
            throw ConfigError("agentN start lines must cover all " +
                              std::to_string(cfg.n_agents) + " agents or none");
        }
        for (std::size_t i = 0; i < cfg.initial_override.size(); ++i) {
            const AgentInit& init = cfg.initial_override[i];
            const std::string key = "agent" + std::to_string(i + 1);
            if (init.position == -1 && init.charge == -1) {
                throw ConfigError(key + ": start line missing (agent starts must cover all "
                                  "agents or none)");
            }
            if (init.position < 0 || init.position > cfg.strip_length) {
                throw ConfigError(key + ": position must be in [0, " +
                                  std::to_string(cfg.strip_length) + "]");
            }
            if (init.charge < 0 || init.charge > cfg.capacity) {
                throw ConfigError(key + ": charge must be in [0, " +
                                  std::to_string(cfg.capacity) + "]");
            }
        }
    }
}

void apply_overrides(SimConfig& cfg, const std::vector<std::string>& overrides) {
    for (const std::string& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("--set: expected key=value, got '" + item + "'");
        }
        apply_setting(cfg, trim(item.substr(0, eq)), trim(item.substr(eq + 1)), "--set");
    }
}

SimConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    SimConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        }
        apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)),
                      "line " + std::to_string(line_no));
    }
    apply_overrides(cfg, overrides);
    finalize_config(cfg);
    return cfg;
}

SimConfig config_from_overrides(const std::vector<std::string>& overrides) {
    SimConfig cfg;
    apply_overrides(cfg, overrides);
    finalize_config(cfg);
    return cfg;
}

}  // namespace botsim
