// The single shared charger and its queue discipline.
//
// PlainFcfs orders strictly by arrival. ImmuneFcfs keeps FCFS but moves
// critical agents ahead of every non-critical waiter: critical entries
// are ordered among themselves by the tick they became critical,
// non-critical entries by arrival tick, ties broken by agent id. The
// current occupant is never displaced; escalation reorders waiters only.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace botsim {

enum class Policy { PlainFcfs, ImmuneFcfs };

const char* policy_name(Policy p);

struct QueueEntry {
    int agent_id = 0;
    std::int64_t arrival_tick = 0;
    bool critical = false;
    std::int64_t critical_tick = 0;  // meaningful only when critical
};

class ChargerStation {
public:
    ChargerStation(std::int64_t charge_rate, std::int64_t dock_to_charger_ticks)
        : charge_rate_(charge_rate), dock_to_charger_ticks_(dock_to_charger_ticks) {}

    struct RequestResult {
        bool granted = false;
        bool jumped = false;  // overtook at least one earlier arrival
    };

    // Ask for the charger on dock arrival. Grants immediately when the
    // charger is idle, otherwise places the entry per the active policy.
    // Throws std::logic_error on a duplicate request.
    RequestResult request(int agent_id, std::int64_t tick, bool critical,
                          std::int64_t critical_tick, Policy policy);

    // Mark a queued entry critical. Under ImmuneFcfs the queue is
    // reordered; under PlainFcfs the flag is recorded and the order kept.
    // Returns true when the entry overtook at least one earlier arrival.
    // Throws std::logic_error if the agent is not queued.
    bool escalate(int agent_id, std::int64_t tick, Policy policy);

    // Clear the occupant and promote the queue head (if any) to the new
    // occupant, resetting the dock-to-charger transit countdown.
    // Throws std::logic_error when there is no occupant.
    std::optional<int> release();

    // Drop a queued entry (the agent failed). Returns false if absent.
    bool remove(int agent_id);

    // Count down one transit tick for the incoming occupant; returns
    // true when the occupant has reached the charger.
    bool tick_transit();

    std::optional<int> occupant() const { return occupant_; }
    std::int64_t transit_remaining() const { return transit_remaining_; }
    const std::vector<QueueEntry>& queue() const { return queue_; }
    bool is_queued(int agent_id) const;
    std::int64_t charge_rate() const { return charge_rate_; }
    std::int64_t dock_to_charger_ticks() const { return dock_to_charger_ticks_; }

private:
    void place(QueueEntry entry, Policy policy);
    bool overtakes_earlier_arrival(int agent_id) const;

    std::optional<int> occupant_;
    std::int64_t transit_remaining_ = 0;
    std::vector<QueueEntry> queue_;
    std::int64_t charge_rate_;
    std::int64_t dock_to_charger_ticks_;
};

}  // namespace botsim
