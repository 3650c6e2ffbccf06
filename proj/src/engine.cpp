#include "botsim/engine.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <numeric>

#include "botsim/rng.hpp"

namespace botsim {

const char* event_name(TraceEvent e) {
    switch (e) {
        case TraceEvent::None: return "none";
        case TraceEvent::TripStarted: return "trip_started";
        case TraceEvent::DockArrival: return "dock_arrival";
        case TraceEvent::Resumed: return "resumed";
        case TraceEvent::Enqueued: return "enqueued";
        case TraceEvent::Escalated: return "escalated";
        case TraceEvent::Granted: return "granted";
        case TraceEvent::ChargeDone: return "charge_done";
        case TraceEvent::Failed: return "failed";
    }
    return "?";
}

Simulation::Simulation(SimConfig cfg)
    : cfg_(std::move(cfg)), station_(0, 0) {
    finalize_config(cfg_);
    params_ = StepParams{cfg_.move_drain, cfg_.idle_drain, cfg_.charge_rate,
                         cfg_.charge_target, cfg_.bounds};
    station_ = ChargerStation(cfg_.charge_rate, cfg_.dock_to_charger_ticks);

    const int n = static_cast<int>(cfg_.n_agents);
    envs_.reserve(n);
    for (int i = 1; i <= n; ++i) {
        envs_.push_back(SubEnvironment{i, cfg_.strip_length, 0,
                                       cfg_.weights[static_cast<std::size_t>(i - 1)]});
    }

    agents_.reserve(n);
    if (!cfg_.initial_override.empty()) {
        for (int i = 1; i <= n; ++i) {
            const AgentInit& init = cfg_.initial_override[static_cast<std::size_t>(i - 1)];
            Agent a;
            a.id = i;
            a.env_index = i;
            a.position = init.position;
            a.heading = init.heading;
            a.gauge = BatteryGauge{cfg_.capacity, init.charge};
            agents_.push_back(a);
        }
    } else {
        SplitMix64 rng(cfg_.seed);
        for (int i = 1; i <= n; ++i) {
            Agent a;
            a.id = i;
            a.env_index = i;
            a.position = rng.bounded(0, cfg_.strip_length);
            a.heading = (rng.next() & 1) == 0 ? Heading::TowardRed : Heading::TowardGreen;
            a.gauge = BatteryGauge{cfg_.capacity,
                                   rng.bounded(cfg_.bounds.edge_medium, cfg_.capacity)};
            agents_.push_back(a);
        }
    }

    request_tick_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Agent& a : agents_) initial_total_charge_ += a.gauge.charge;
}

bool Simulation::finished() const {
    if (tick_ >= cfg_.ticks) return true;
    return std::all_of(agents_.begin(), agents_.end(),
                       [](const Agent& a) { return a.state == AgentState::Failed; });
}

void Simulation::run_to_end() {
    while (!finished()) step();
}

void Simulation::note_event(std::vector<TraceEvent>& events, int agent_id, TraceEvent e) {
    TraceEvent& slot = events[static_cast<std::size_t>(agent_id)];
    if (static_cast<int>(e) > static_cast<int>(slot)) slot = e;
}

void Simulation::start_occupancy(int agent_id, std::vector<TraceEvent>& events) {
    Agent& a = agents_[static_cast<std::size_t>(agent_id - 1)];
    grant_order_.push_back(agent_id);
    waits_.push_back(tick_ - request_tick_[static_cast<std::size_t>(agent_id)]);
    note_event(events, agent_id, TraceEvent::Granted);
    // With no dock-to-charger transit the grant puts the agent straight
    // on the charger; otherwise it walks over in Queued state.
    a.state = station_.transit_remaining() == 0 ? AgentState::Charging : AgentState::Queued;
}

void Simulation::fail_agent(int agent_id, std::vector<TraceEvent>& events) {
    Agent& a = agents_[static_cast<std::size_t>(agent_id - 1)];
    a.state = AgentState::Failed;
    a.saved_position.reset();
    a.critical_since.reset();
    note_event(events, agent_id, TraceEvent::Failed);
    if (station_.occupant() == agent_id) {
        // Died walking from dock to charger; free it for the next in line.
        if (auto next = station_.release()) start_occupancy(*next, events);
    } else {
        station_.remove(agent_id);
    }
}

void Simulation::step() {
    if (finished()) return;
    ++tick_;
    const int n = static_cast<int>(cfg_.n_agents);
    std::vector<TraceEvent> events(static_cast<std::size_t>(n) + 1, TraceEvent::None);

    for (int id = 1; id <= n; ++id) {
        Agent& a = agents_[static_cast<std::size_t>(id - 1)];
        if (a.state == AgentState::Failed) continue;
        const SubEnvironment& env = envs_[static_cast<std::size_t>(a.env_index - 1)];
        // Occupant-elect walking from dock to charger (pre-step state, so
        // a grant landing during this agent's own step starts its transit
        // next tick).
        const bool in_transit = a.state == AgentState::Queued && station_.occupant() == id;
        const bool waiting = a.state == AgentState::Queued && !in_transit;

        const StepOutcome out = step_agent(a, env, params_);
        total_drain_ += out.drained;
        charger_output_ += out.charged;

        if (out.started_trip) note_event(events, id, TraceEvent::TripStarted);
        if (out.resumed) note_event(events, id, TraceEvent::Resumed);
        if (out.became_critical) {
            if (!a.critical_since) a.critical_since = tick_;
            if (waiting) {
                const bool jumped = station_.escalate(id, tick_, cfg_.policy);
                note_event(events, id, TraceEvent::Escalated);
                escalations_.emplace_back(tick_, id);
                if (jumped) ++queue_jumps_;
            }
        }
        if (out.arrived_at_dock) {
            note_event(events, id, TraceEvent::DockArrival);
            const bool critical = is_critical(a.gauge, cfg_.bounds);
            request_tick_[static_cast<std::size_t>(id)] = tick_;
            const auto res = station_.request(id, tick_, critical,
                                              a.critical_since.value_or(tick_), cfg_.policy);
            if (res.granted) {
                start_occupancy(id, events);
            } else {
                a.state = AgentState::Queued;
                note_event(events, id, TraceEvent::Enqueued);
                if (res.jumped) ++queue_jumps_;
            }
        }
        if (in_transit && station_.tick_transit()) {
            a.state = AgentState::Charging;
        }
        if (out.finished_charging) {
            note_event(events, id, TraceEvent::ChargeDone);
            if (auto next = station_.release()) start_occupancy(*next, events);
        }
    }

    // End-of-tick failure sweep: release/grant above resolves first, so a
    // zero-charge agent that just reached Charging is exempt. Failing an
    // occupant-elect can grant the next waiter, which may itself be at
    // zero; loop until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int id = 1; id <= n; ++id) {
            Agent& a = agents_[static_cast<std::size_t>(id - 1)];
            if (a.state == AgentState::Failed || a.state == AgentState::Charging) continue;
            if (a.gauge.charge != 0) continue;
            fail_agent(id, events);
            changed = true;
        }
    }

    if (station_.occupant()) ++busy_ticks_;

    const int queue_len = static_cast<int>(station_.queue().size());
    for (int id = 1; id <= n; ++id) {
        const Agent& a = agents_[static_cast<std::size_t>(id - 1)];
        trace_.push_back(TraceRow{tick_, id, a.state, a.position, a.gauge.charge,
                                  band(a.gauge, cfg_.bounds), queue_len,
                                  events[static_cast<std::size_t>(id)]});
    }
}

Metrics Simulation::metrics() const {
    Metrics m;
    m.ticks_run = tick_;
    m.per_agent_work.reserve(agents_.size());
    for (const Agent& a : agents_) m.per_agent_work.push_back(a.odometer);
    m.total_work = total_work(m.per_agent_work, envs_);
    m.failures = static_cast<int>(std::count_if(
        agents_.begin(), agents_.end(),
        [](const Agent& a) { return a.state == AgentState::Failed; }));
    m.queue_jumps = queue_jumps_;
    if (!waits_.empty()) {
        m.max_wait_ticks = *std::max_element(waits_.begin(), waits_.end());
        m.mean_wait_ticks =
            static_cast<double>(std::accumulate(waits_.begin(), waits_.end(),
                                                std::int64_t{0})) /
            static_cast<double>(waits_.size());
    }
    m.charger_busy_fraction =
        tick_ > 0 ? static_cast<double>(busy_ticks_) / static_cast<double>(tick_) : 0.0;
    m.charger_output = charger_output_;
    m.total_drain = total_drain_;
    m.initial_total_charge = initial_total_charge_;
    for (const Agent& a : agents_) m.final_total_charge += a.gauge.charge;
    return m;
}

RunResult run_simulation(const SimConfig& cfg) {
    Simulation sim(cfg);
    sim.run_to_end();
    return RunResult{sim.trace(), sim.metrics(), sim.grant_order(), sim.escalations()};
}

std::int64_t feasibility_margin(const SimConfig& cfg) {
    SimConfig checked = cfg;
    finalize_config(checked);
    const std::int64_t budget = checked.bounds.edge_medium / checked.idle_drain;
    const std::int64_t full_charge_ticks =
        (checked.capacity + checked.charge_rate - 1) / checked.charge_rate;
    const std::int64_t worst_wait =
        (checked.n_agents - 1) * (full_charge_ticks + checked.dock_to_charger_ticks) +
        checked.strip_length;
    return budget - worst_wait;
}

std::string trace_to_csv(const std::vector<TraceRow>& trace) {
    std::string out = "tick,agent_id,state,position,charge,band,queue_len,event\n";
    for (const TraceRow& r : trace) {
        out += std::to_string(r.tick);
        out += ',';
        out += std::to_string(r.agent_id);
        out += ',';
        out += state_name(r.state);
        out += ',';
        out += std::to_string(r.position);
        out += ',';
        out += std::to_string(r.charge);
        out += ',';
        out += band_name(r.band);
        out += ',';
        out += std::to_string(r.queue_len);
        out += ',';
        out += event_name(r.event);
        out += '\n';
    }
    return out;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string join_ints(const std::vector<int>& v) {
    if (v.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

std::string run_report_text(const SimConfig& cfg, const RunResult& result) {
    const Metrics& m = result.metrics;
    std::string out;
    out += "policy = " + std::string(policy_name(cfg.policy)) + "\n";
    out += "seed = " + std::to_string(cfg.seed) + "\n";
    out += "ticks_run = " + std::to_string(m.ticks_run) + "\n";
    out += "failures = " + std::to_string(m.failures) + "\n";
    out += "total_work = " + format_double(m.total_work) + "\n";
    for (std::size_t i = 0; i < m.per_agent_work.size(); ++i) {
        out += "work_agent_" + std::to_string(i + 1) + " = " +
               std::to_string(m.per_agent_work[i]) + "\n";
    }
    out += "queue_jumps = " + std::to_string(m.queue_jumps) + "\n";
    out += "max_wait_ticks = " + std::to_string(m.max_wait_ticks) + "\n";
    out += "mean_wait_ticks = " + format_double(m.mean_wait_ticks) + "\n";
    out += "charger_busy_fraction = " + format_double(m.charger_busy_fraction) + "\n";
    out += "charger_output = " + std::to_string(m.charger_output) + "\n";
    out += "total_drain = " + std::to_string(m.total_drain) + "\n";
    out += "initial_total_charge = " + std::to_string(m.initial_total_charge) + "\n";
    out += "final_total_charge = " + std::to_string(m.final_total_charge) + "\n";
    out += "grant_order = " + join_ints(result.grant_order) + "\n";
    std::string esc;
    for (std::size_t i = 0; i < result.escalations.size(); ++i) {
        if (i > 0) esc += ',';
        esc += std::to_string(result.escalations[i].second) + "@" +
               std::to_string(result.escalations[i].first);
    }
    out += "escalations = " + (esc.empty() ? std::string("none") : esc) + "\n";
    return out;
}

SimConfig replay_scenario_config() {
    SimConfig cfg;
    cfg.n_agents = 4;
    cfg.strip_length = 100;
    cfg.capacity = 1000;
    cfg.thresholds = BandThresholds{0.8, 0.6, 0.4, 0.2};
    cfg.move_drain = 1;
    cfg.idle_drain = 1;
    cfg.charge_rate = 5;
    cfg.dock_to_charger_ticks = 2;
    cfg.policy = Policy::ImmuneFcfs;
    cfg.ticks = 720;
    cfg.seed = 0;  // unused: starts are explicit
    cfg.initial_override = {
        AgentInit{10, Heading::TowardGreen, 430},
        AgentInit{60, Heading::TowardGreen, 504},
        AgentInit{20, Heading::TowardGreen, 420},
        AgentInit{49, Heading::TowardRed, 450},
    };
    finalize_config(cfg);
    return cfg;
}

}  // namespace botsim
