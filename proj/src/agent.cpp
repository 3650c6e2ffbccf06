#include "botsim/agent.hpp"

namespace botsim {

const char* state_name(AgentState s) {
    switch (s) {
        case AgentState::Working: return "Working";
        case AgentState::TravelingToDock: return "TravelingToDock";
        case AgentState::Queued: return "Queued";
        case AgentState::Charging: return "Charging";
        case AgentState::Returning: return "Returning";
        case AgentState::Failed: return "Failed";
    }
    return "?";
}

void begin_charge_trip(Agent& a, const BandBoundaries& bounds) {
    if (a.state != AgentState::Working) {
        throw std::logic_error("begin_charge_trip: agent is not working");
    }
    if (!needs_charge(a.gauge, bounds)) {
        throw std::logic_error("begin_charge_trip: gauge does not need charging");
    }
    a.saved_position = a.position;
    a.state = AgentState::TravelingToDock;
}

void resume_work(Agent& a) {
    if (a.state != AgentState::Returning) {
        throw std::logic_error("resume_work: agent is not returning");
    }
    if (!a.saved_position || a.position != *a.saved_position) {
        throw std::logic_error("resume_work: agent is not at its saved position");
    }
    a.state = AgentState::Working;
    a.saved_position.reset();
    a.critical_since.reset();
}

StepOutcome step_agent(Agent& a, const SubEnvironment& env, const StepParams& p) {
    if (a.state == AgentState::Failed) {
        throw std::logic_error("step_agent: agent has failed");
    }
    StepOutcome out;
    const bool was_critical = is_critical(a.gauge, p.bounds);
    switch (a.state) {
        case AgentState::Working: {
            const PatrolStep s = advance(a.position, a.heading, env);
            a.position = s.position;
            a.heading = s.heading;
            a.odometer += 1;
            out.worked = true;
            out.drained += a.gauge.discharge(p.move_drain);
            if (needs_charge(a.gauge, p.bounds)) {
                begin_charge_trip(a, p.bounds);
                out.started_trip = true;
            }
            break;
        }
        case AgentState::TravelingToDock: {
            a.position = step_toward(a.position, env.dock_position);
            out.drained += a.gauge.discharge(p.move_drain);
            if (a.position == env.dock_position) out.arrived_at_dock = true;
            break;
        }
        case AgentState::Queued: {
            out.drained += a.gauge.discharge(p.idle_drain);
            break;
        }
        case AgentState::Charging: {
            out.charged += a.gauge.recharge(p.charge_rate);
            if (a.gauge.charge >= p.charge_target) {
                a.state = AgentState::Returning;
                out.finished_charging = true;
            }
            break;
        }
        case AgentState::Returning: {
            a.position = step_toward(a.position, *a.saved_position);
            out.drained += a.gauge.discharge(p.move_drain);
            if (a.position == *a.saved_position) {
                resume_work(a);
                out.resumed = true;
            }
            break;
        }
        case AgentState::Failed:
            break;  // unreachable
    }
    out.became_critical = !was_critical && is_critical(a.gauge, p.bounds);
    return out;
}

}  // namespace botsim
