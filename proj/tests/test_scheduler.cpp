#include <doctest.h>

#include <algorithm>
#include <tuple>
#include <vector>

#include "botsim/rng.hpp"
#include "botsim/scheduler.hpp"

using namespace botsim;

namespace {

std::vector<int> queue_ids(const ChargerStation& st) {
    std::vector<int> ids;
    for (const QueueEntry& e : st.queue()) ids.push_back(e.agent_id);
    return ids;
}

// The ordering invariant, checked by scanning the queue: criticals
// before non-criticals, criticals by (critical_tick, id), non-criticals
// by (arrival_tick, id).
bool immune_order_holds(const ChargerStation& st) {
    const auto& q = st.queue();
    for (std::size_t i = 1; i < q.size(); ++i) {
        const QueueEntry& a = q[i - 1];
        const QueueEntry& b = q[i];
        if (!a.critical && b.critical) return false;
        if (a.critical && b.critical &&
            std::tie(a.critical_tick, a.agent_id) > std::tie(b.critical_tick, b.agent_id)) {
            return false;
        }
        if (!a.critical && !b.critical &&
            std::tie(a.arrival_tick, a.agent_id) > std::tie(b.arrival_tick, b.agent_id)) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("first request on an idle charger is granted") {
    ChargerStation st(20, 2);
    const auto res = st.request(3, 5, false, 0, Policy::ImmuneFcfs);
    CHECK(res.granted);
    CHECK(st.occupant() == 3);
    CHECK(st.transit_remaining() == 2);
    CHECK(st.queue().empty());
}

TEST_CASE("non-critical requests queue in arrival order") {
    ChargerStation st(20, 2);
    st.request(1, 1, false, 0, Policy::ImmuneFcfs);
    st.request(2, 2, false, 0, Policy::ImmuneFcfs);
    const auto res = st.request(4, 3, false, 0, Policy::ImmuneFcfs);
    CHECK_FALSE(res.granted);
    CHECK_FALSE(res.jumped);
    CHECK(queue_ids(st) == std::vector<int>{2, 4});
}

TEST_CASE("a critical request jumps ahead of every non-critical waiter") {
    ChargerStation st(20, 2);
    st.request(1, 1, false, 0, Policy::ImmuneFcfs);
    st.request(2, 2, false, 0, Policy::ImmuneFcfs);
    const auto res = st.request(4, 3, true, 3, Policy::ImmuneFcfs);
    CHECK_FALSE(res.granted);
    CHECK(res.jumped);
    CHECK(queue_ids(st) == std::vector<int>{4, 2});
    CHECK(st.occupant() == 1);  // the occupant is never displaced
}

TEST_CASE("under plain policy a critical request keeps arrival order") {
    ChargerStation st(20, 2);
    st.request(1, 1, false, 0, Policy::PlainFcfs);
    st.request(2, 2, false, 0, Policy::PlainFcfs);
    const auto res = st.request(4, 3, true, 3, Policy::PlainFcfs);
    CHECK_FALSE(res.jumped);
    CHECK(queue_ids(st) == std::vector<int>{2, 4});
}

TEST_CASE("escalation reorders only under the immune policy") {
    ChargerStation immune(20, 2);
    immune.request(1, 1, false, 0, Policy::ImmuneFcfs);
    immune.request(2, 2, false, 0, Policy::ImmuneFcfs);
    immune.request(4, 3, false, 0, Policy::ImmuneFcfs);
    CHECK(queue_ids(immune) == std::vector<int>{2, 4});
    CHECK(immune.escalate(4, 9, Policy::ImmuneFcfs));
    CHECK(queue_ids(immune) == std::vector<int>{4, 2});

    ChargerStation plain(20, 2);
    plain.request(1, 1, false, 0, Policy::PlainFcfs);
    plain.request(2, 2, false, 0, Policy::PlainFcfs);
    plain.request(4, 3, false, 0, Policy::PlainFcfs);
    CHECK_FALSE(plain.escalate(4, 9, Policy::PlainFcfs));
    CHECK(queue_ids(plain) == std::vector<int>{2, 4});
    CHECK(plain.queue()[1].critical);  // flag recorded for metrics
}

TEST_CASE("escalating a singleton queue changes nothing") {
    ChargerStation st(20, 2);
    st.request(1, 1, false, 0, Policy::ImmuneFcfs);
    st.request(2, 2, false, 0, Policy::ImmuneFcfs);
    CHECK_FALSE(st.escalate(2, 5, Policy::ImmuneFcfs));
    CHECK(queue_ids(st) == std::vector<int>{2});
}

TEST_CASE("simultaneous criticals order by escalation tick, then id") {
    ChargerStation st(20, 2);
    st.request(1, 1, false, 0, Policy::ImmuneFcfs);
    st.request(2, 2, false, 0, Policy::ImmuneFcfs);
    st.request(3, 3, false, 0, Policy::ImmuneFcfs);
    st.request(4, 4, false, 0, Policy::ImmuneFcfs);
    st.escalate(4, 10, Policy::ImmuneFcfs);
    st.escalate(3, 11, Policy::ImmuneFcfs);
    CHECK(queue_ids(st) == std::vector<int>{4, 3, 2});
    st.escalate(2, 11, Policy::ImmuneFcfs);  // same tick as 3: id breaks the tie
    CHECK(queue_ids(st) == std::vector<int>{4, 2, 3});
    CHECK(immune_order_holds(st));
}

TEST_CASE("release hands the charger to the queue head") {
    ChargerStation st(20, 2);
    st.request(1, 1, false, 0, Policy::ImmuneFcfs);
    st.request(2, 2, false, 0, Policy::ImmuneFcfs);
    st.request(4, 3, true, 3, Policy::ImmuneFcfs);
    CHECK(queue_ids(st) == std::vector<int>{4, 2});

    auto next = st.release();
    CHECK(next == 4);
    CHECK(st.occupant() == 4);
    CHECK(queue_ids(st) == std::vector<int>{2});

    next = st.release();
    CHECK(next == 2);
    CHECK(queue_ids(st).empty());

    next = st.release();
    CHECK_FALSE(next.has_value());
    CHECK_FALSE(st.occupant().has_value());
}

TEST_CASE("scheduler misuse throws") {
    ChargerStation st(20, 2);
    st.request(1, 1, false, 0, Policy::ImmuneFcfs);
    CHECK_THROWS_AS(st.request(1, 2, false, 0, Policy::ImmuneFcfs), std::logic_error);
    st.request(2, 2, false, 0, Policy::ImmuneFcfs);
    CHECK_THROWS_AS(st.request(2, 3, false, 0, Policy::ImmuneFcfs), std::logic_error);
    CHECK_THROWS_AS(st.escalate(7, 3, Policy::ImmuneFcfs), std::logic_error);
    st.release();
    st.release();
    CHECK_THROWS_AS(st.release(), std::logic_error);
}

TEST_CASE("transit countdown reaches the charger") {
    ChargerStation st(20, 3);
    st.request(1, 1, false, 0, Policy::ImmuneFcfs);
    CHECK(st.transit_remaining() == 3);
    CHECK_FALSE(st.tick_transit());
    CHECK_FALSE(st.tick_transit());
    CHECK(st.tick_transit());
    CHECK(st.transit_remaining() == 0);
}

TEST_CASE("plain policy grants follow arrival order on random request streams") {
    SplitMix64 rng(0xFCF5u);
    for (int round = 0; round < 50; ++round) {
        ChargerStation st(20, 0);
        std::vector<std::pair<std::int64_t, int>> arrivals;  // (tick, id), feed order
        std::vector<int> grants;
        std::int64_t tick = 0;
        const int n = 3 + static_cast<int>(rng.next() % 8);
        for (int id = 1; id <= n; ++id) {
            tick += static_cast<std::int64_t>(rng.next() % 3);
            arrivals.emplace_back(tick, id);
            const bool critical = (rng.next() % 4) == 0;  // flags must not matter
            const auto res = st.request(id, tick, critical, tick, Policy::PlainFcfs);
            if (res.granted) grants.push_back(id);
        }
        while (st.occupant()) {
            if (auto next = st.release()) grants.push_back(*next);
        }
        // brute-force oracle: stable sort of arrivals by (tick, id)
        std::stable_sort(arrivals.begin(), arrivals.end());
        std::vector<int> expected;
        for (const auto& [t, id] : arrivals) expected.push_back(id);
        CHECK(grants == expected);
    }
}

TEST_CASE("immune queue keeps its class ordering under random traffic") {
    SplitMix64 rng(0x1BBADu);
    for (int round = 0; round < 50; ++round) {
        ChargerStation st(20, 1);
        int next_id = 1;
        std::vector<int> queued;
        std::int64_t tick = 0;
        for (int op = 0; op < 60; ++op) {
            ++tick;
            const std::uint64_t choice = rng.next() % 3;
            if (choice == 0) {
                const int id = next_id++;
                const bool critical = (rng.next() % 5) == 0;
                const auto res = st.request(id, tick, critical, tick, Policy::ImmuneFcfs);
                if (!res.granted) queued.push_back(id);
            } else if (choice == 1 && !queued.empty()) {
                const int id = queued[rng.next() % queued.size()];
                st.escalate(id, tick, Policy::ImmuneFcfs);
            } else if (st.occupant()) {
                const auto next = st.release();
                if (next) queued.erase(std::find(queued.begin(), queued.end(), *next));
            }
            CHECK(immune_order_holds(st));
            if (st.occupant()) CHECK_FALSE(st.is_queued(*st.occupant()));
        }
    }
}
