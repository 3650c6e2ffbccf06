// Experiment parameterization: defaults, the flat `key = value` config
// file schema, command-line overrides and validation.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "botsim/energy.hpp"
#include "botsim/scheduler.hpp"
#include "botsim/world.hpp"

namespace botsim {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Explicit start for one agent; used by the bundled replay scenario and
// by `agentN = position,heading,charge` config lines. When present the
// seeded generator is bypassed entirely.
struct AgentInit {
    std::int64_t position = 0;
    Heading heading = Heading::TowardRed;
    std::int64_t charge = 0;
};

struct SimConfig {
    std::int64_t n_agents = 4;       // also the number of sub-environments
    std::int64_t strip_length = 100; // cm, red post position
    std::int64_t capacity = 1000;    // micro-charge units
    BandThresholds thresholds{};
    std::int64_t move_drain = 1;     // units/tick while moving
    std::int64_t idle_drain = 1;     // units/tick while waiting at the dock
    std::int64_t charge_rate = 20;   // units/tick while on the charger
    std::int64_t dock_to_charger_ticks = 2;
    double charge_to = 1.0;          // charging completes at this fraction
    std::vector<double> weights;     // per-environment; empty = all 1
    Policy policy = Policy::ImmuneFcfs;
    std::int64_t ticks = 1000;
    std::uint64_t seed = 1;
    std::vector<AgentInit> initial_override;  // empty = seeded random init

    // Derived at validation time.
    BandBoundaries bounds{};
    std::int64_t charge_target = 0;
};

// Check invariants, fill derived fields. Throws ConfigError naming the
// offending key and constraint.
void finalize_config(SimConfig& cfg);

// Apply one `key=value` / `key = value` setting. `where` prefixes error
// messages ("line 3", "--set", ...).
void apply_setting(SimConfig& cfg, const std::string& key, const std::string& value,
                   const std::string& where);

// Apply a batch of "key=value" strings (no validation; callers finalize
// once everything is layered).
void apply_overrides(SimConfig& cfg, const std::vector<std::string>& overrides);

// Parse a config file (one `key = value` per line, `#` starts a
// comment), then apply overrides ("key=value" strings) on top, then
// validate. A missing file is an error; an empty one yields defaults.
SimConfig load_config(const std::string& path, const std::vector<std::string>& overrides);

// Overrides on top of the built-in defaults (no file).
SimConfig config_from_overrides(const std::vector<std::string>& overrides);

}  // namespace botsim
