// Deterministic tick loop: agents, world and charger wired together,
// seeded initialization, trace rows and run metrics.
//
// Within a tick, agents are processed in ascending id; dock arrivals
// request the charger on their arrival tick, a completed charge releases
// it and grants the head immediately, and a failure sweep at the end of
// the tick retires any drained agent (grants are resolved before the
// sweep, so an agent granted as it hits zero still charges when the
// charger transit is zero). Everything is a pure function of the config,
// so a (config, seed) pair always yields the identical trace.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "botsim/agent.hpp"
#include "botsim/config.hpp"
#include "botsim/scheduler.hpp"

namespace botsim {

enum class TraceEvent : int {
    None = 0,
    TripStarted,
    DockArrival,
    Resumed,
    Enqueued,
    Escalated,
    Granted,
    ChargeDone,
    Failed,
};

const char* event_name(TraceEvent e);

// End-of-tick snapshot, one row per agent per tick, ordered by
// (tick, agent_id). When one tick produces several events for an agent
// the most significant tag wins (Failed highest, then ChargeDone,
// Granted, Escalated, Enqueued, Resumed, DockArrival, TripStarted).
struct TraceRow {
    std::int64_t tick = 0;  // 1-based
    int agent_id = 0;
    AgentState state = AgentState::Working;
    std::int64_t position = 0;
    std::int64_t charge = 0;
    Band band = Band::High;
    int queue_len = 0;
    TraceEvent event = TraceEvent::None;
};

struct Metrics {
    std::int64_t ticks_run = 0;
    double total_work = 0.0;                  // sum of odometer * weight
    std::vector<std::int64_t> per_agent_work; // odometers, cm
    int failures = 0;                         // Failed agents at end
    std::int64_t queue_jumps = 0;
    std::int64_t max_wait_ticks = 0;          // dock arrival -> grant
    double mean_wait_ticks = 0.0;
    double charger_busy_fraction = 0.0;       // occupied ticks / elapsed
    std::int64_t charger_output = 0;          // units delivered
    std::int64_t total_drain = 0;             // units drained
    std::int64_t initial_total_charge = 0;
    std::int64_t final_total_charge = 0;
};

struct RunResult {
    std::vector<TraceRow> trace;
    Metrics metrics;
    std::vector<int> grant_order;                        // agent ids
    std::vector<std::pair<std::int64_t, int>> escalations;  // (tick, agent)
};

class Simulation {
public:
    // Validates the config (throws ConfigError) and seeds the agents.
    // Without an explicit start list, each agent draws position, heading
    // and charge (in that order, ids ascending) from splitmix64(seed):
    // position uniform in [0, L], heading from the low bit, charge
    // uniform in [low-band boundary t3*capacity, capacity] so nobody is
    // born already needing a charge.
    explicit Simulation(SimConfig cfg);

    void step();  // one tick; no-op once finished
    bool finished() const;
    void run_to_end();

    std::int64_t ticks_elapsed() const { return tick_; }
    const SimConfig& config() const { return cfg_; }
    const std::vector<Agent>& agents() const { return agents_; }
    const std::vector<SubEnvironment>& environments() const { return envs_; }
    const ChargerStation& station() const { return station_; }
    const std::vector<TraceRow>& trace() const { return trace_; }
    const std::vector<int>& grant_order() const { return grant_order_; }
    const std::vector<std::pair<std::int64_t, int>>& escalations() const {
        return escalations_;
    }
    Metrics metrics() const;

private:
    void note_event(std::vector<TraceEvent>& events, int agent_id, TraceEvent e);
    void start_occupancy(int agent_id, std::vector<TraceEvent>& events);
    void fail_agent(int agent_id, std::vector<TraceEvent>& events);

    SimConfig cfg_;
    StepParams params_;
    std::vector<SubEnvironment> envs_;
    std::vector<Agent> agents_;
    ChargerStation station_;
    std::int64_t tick_ = 0;
    std::vector<TraceRow> trace_;
    std::vector<int> grant_order_;
    std::vector<std::pair<std::int64_t, int>> escalations_;
    std::vector<std::int64_t> request_tick_;  // per agent, last dock request
    std::vector<std::int64_t> waits_;         // per granted request
    std::int64_t queue_jumps_ = 0;
    std::int64_t busy_ticks_ = 0;
    std::int64_t charger_output_ = 0;
    std::int64_t total_drain_ = 0;
    std::int64_t initial_total_charge_ = 0;
};

// Run to completion (cfg.ticks ticks, or until every agent has failed).
RunResult run_simulation(const SimConfig& cfg);

// Worst-case slack, in ticks, between triggering a charge trip at the
// Low boundary and draining to zero while every other agent charges
// ahead: floor(b3 / idle_drain)
//        - ((n - 1) * (ceil(capacity / charge_rate) + dock_to_charger_ticks)
//           + strip_length).
// Positive margin defines the feasibility envelope for the no-death
// guarantee under the immune policy.
std::int64_t feasibility_margin(const SimConfig& cfg);

// CSV with header tick,agent_id,state,position,charge,band,queue_len,event.
std::string trace_to_csv(const std::vector<TraceRow>& trace);

// Flat `key = value` block with the metrics, grant order and escalations.
std::string run_report_text(const SimConfig& cfg, const RunResult& result);

// The bundled four-bot walkthrough: staggered low-battery starts on a
// shared charger. Under the immune policy the grant order is 3,1,4,2
// with bot 4 jumping the queue from criticality; under plain FCFS the
// order is 3,1,2,4 and bot 4 drains out while waiting.
SimConfig replay_scenario_config();

}  // namespace botsim
