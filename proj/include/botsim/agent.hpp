// Per-bot lifecycle: patrol, detect low battery, save the working
// position, travel to the dock, wait, charge, return, resume.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "botsim/energy.hpp"
#include "botsim/world.hpp"

namespace botsim {

enum class AgentState {
    Working,
    TravelingToDock,
    Queued,
    Charging,
    Returning,
    Failed,  // absorbing; implies charge == 0
};

const char* state_name(AgentState s);

struct Agent {
    int id = 1;         // 1-based
    int env_index = 1;  // owning sub-environment, 1-based
    std::int64_t position = 0;
    Heading heading = Heading::TowardRed;
    // Present exactly while on a charge trip (TravelingToDock, Queued,
    // Charging, Returning); the patrol spot to come back to.
    std::optional<std::int64_t> saved_position;
    BatteryGauge gauge;
    AgentState state = AgentState::Working;
    std::int64_t odometer = 0;  // cm of patrol work done, monotone
    // First tick the gauge went VeryLow during the current trip; cleared
    // on resume. Orders simultaneous criticals in the queue.
    std::optional<std::int64_t> critical_since;
};

// What a single tick of behavior produced; the engine turns these into
// charger requests, escalations, releases and trace events.
struct StepOutcome {
    std::int64_t drained = 0;
    std::int64_t charged = 0;
    bool worked = false;
    bool started_trip = false;
    bool arrived_at_dock = false;
    bool became_critical = false;
    bool finished_charging = false;
    bool resumed = false;
};

struct StepParams {
    std::int64_t move_drain = 1;
    std::int64_t idle_drain = 1;
    std::int64_t charge_rate = 20;
    std::int64_t charge_target = 1000;  // charging completes at this level
    BandBoundaries bounds;
};

// Save the current position and head for the dock. Requires a Working
// agent whose gauge needs charging; throws std::logic_error otherwise.
void begin_charge_trip(Agent& a, const BandBoundaries& bounds);

// Back at the saved position: drop the trip bookkeeping and work on.
// The heading is untouched for the whole trip, so patrol resumes in the
// direction the agent was moving when it left.
// Throws std::logic_error unless Returning and exactly at the spot.
void resume_work(Agent& a);

// Exactly one tick of behavior for the agent's current state. Does not
// touch the charger; queue membership, grants and the dock-to-charger
// transit countdown belong to the engine. Throws on a Failed agent.
StepOutcome step_agent(Agent& a, const SubEnvironment& env, const StepParams& p);

}  // namespace botsim
