// 1-D patrol strips: green/red posts, docks, patrol kinematics and the
// weighted work-done aggregation.

#pragma once

#include <cstdint>
#include <span>

namespace botsim {

// One patrol strip. The green post is always position 0; the red post
// is at red_post > 0. Each strip has a private dock near the shared
// charger.
struct SubEnvironment {
    int index = 1;                   // 1-based
    std::int64_t red_post = 100;     // strip length in cm
    std::int64_t dock_position = 0;  // in [0, red_post]
    double weight = 1.0;             // work weight, non-negative
};

enum class Heading { TowardRed, TowardGreen };

const char* heading_name(Heading h);

struct PatrolStep {
    std::int64_t position;
    Heading heading;
};

// Move 1 cm along the strip, bouncing at both posts. A start sitting on
// a post while facing outward (possible only from a raw initial draw)
// turns around first, so every call moves exactly 1 cm.
PatrolStep advance(std::int64_t position, Heading heading, const SubEnvironment& env);

// Move 1 cm toward target, arriving exactly and never overshooting.
std::int64_t step_toward(std::int64_t position, std::int64_t target);

// Weighted total: sum of odometer[i] * envs[i].weight.
// Throws std::invalid_argument if the lengths differ.
double total_work(std::span<const std::int64_t> odometers,
                  std::span<const SubEnvironment> envs);

}  // namespace botsim
