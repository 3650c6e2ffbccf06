#include "botsim/scheduler.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <tuple>

namespace botsim {

const char* policy_name(Policy p) {
    return p == Policy::PlainFcfs ? "plain" : "immune";
}

namespace {

// Strict ordering of queue entries under a policy. Agent ids are unique
// in the queue, so this is a total order and the queue layout is fully
// determined by its contents.
bool precedes(const QueueEntry& a, const QueueEntry& b, Policy policy) {
    if (policy == Policy::ImmuneFcfs && a.critical != b.critical) {
        return a.critical;
    }
    if (policy == Policy::ImmuneFcfs && a.critical && b.critical) {
        return std::tie(a.critical_tick, a.agent_id) < std::tie(b.critical_tick, b.agent_id);
    }
    return std::tie(a.arrival_tick, a.agent_id) < std::tie(b.arrival_tick, b.agent_id);
}

}  // namespace

ChargerStation::RequestResult ChargerStation::request(int agent_id, std::int64_t tick,
                                                      bool critical, std::int64_t critical_tick,
                                                      Policy policy) {
    if (occupant_ == agent_id || is_queued(agent_id)) {
        throw std::logic_error("charger request: agent " + std::to_string(agent_id) +
                               " already requested");
    }
    if (!occupant_) {
        // release() always promotes the head, so an idle charger implies
        // an empty queue.
        assert(queue_.empty());
        occupant_ = agent_id;
        transit_remaining_ = dock_to_charger_ticks_;
        return RequestResult{true, false};
    }
    place(QueueEntry{agent_id, tick, critical, critical ? critical_tick : 0}, policy);
    const bool jumped = policy == Policy::ImmuneFcfs && critical &&
                        overtakes_earlier_arrival(agent_id);
    return RequestResult{false, jumped};
}

bool ChargerStation::escalate(int agent_id, std::int64_t tick, Policy policy) {
    auto it = std::find_if(queue_.begin(), queue_.end(),
                           [&](const QueueEntry& e) { return e.agent_id == agent_id; });
    if (it == queue_.end()) {
        throw std::logic_error("charger escalate: agent " + std::to_string(agent_id) +
                               " is not queued");
    }
    if (it->critical) return false;
    QueueEntry entry = *it;
    entry.critical = true;
    entry.critical_tick = tick;
    if (policy == Policy::PlainFcfs) {
        *it = entry;  // flag recorded for metrics, order unchanged
        return false;
    }
    queue_.erase(it);
    place(entry, policy);
    return overtakes_earlier_arrival(agent_id);
}

std::optional<int> ChargerStation::release() {
    if (!occupant_) {
        throw std::logic_error("charger release: no occupant");
    }
    occupant_.reset();
    transit_remaining_ = 0;
    if (queue_.empty()) return std::nullopt;
    const int next = queue_.front().agent_id;
    queue_.erase(queue_.begin());
    occupant_ = next;
    transit_remaining_ = dock_to_charger_ticks_;
    return next;
}

bool ChargerStation::remove(int agent_id) {
    auto it = std::find_if(queue_.begin(), queue_.end(),
                           [&](const QueueEntry& e) { return e.agent_id == agent_id; });
    if (it == queue_.end()) return false;
    queue_.erase(it);
    return true;
}

bool ChargerStation::tick_transit() {
    assert(occupant_ && transit_remaining_ > 0);
    --transit_remaining_;
    return transit_remaining_ == 0;
}

bool ChargerStation::is_queued(int agent_id) const {
    return std::any_of(queue_.begin(), queue_.end(),
                       [&](const QueueEntry& e) { return e.agent_id == agent_id; });
}

void ChargerStation::place(QueueEntry entry, Policy policy) {
    auto pos = std::find_if(queue_.begin(), queue_.end(), [&](const QueueEntry& e) {
        return precedes(entry, e, policy);
    });
    queue_.insert(pos, entry);
}

bool ChargerStation::overtakes_earlier_arrival(int agent_id) const {
    auto it = std::find_if(queue_.begin(), queue_.end(),
                           [&](const QueueEntry& e) { return e.agent_id == agent_id; });
    assert(it != queue_.end());
    return std::any_of(it + 1, queue_.end(), [&](const QueueEntry& e) {
        return std::tie(e.arrival_tick, e.agent_id) < std::tie(it->arrival_tick, it->agent_id);
    });
}

}  // namespace botsim
