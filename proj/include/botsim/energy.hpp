// Battery gauge arithmetic and the five-band strength classification.
//
// All quantities are integer micro-charge units. Band boundaries are
// derived once from fractional thresholds so the per-tick hot path is
// pure integer compares.

#pragma once

#include <cstdint>

namespace botsim {

// Strength levels, weakest first so the natural enum order matches
// "stronger >" comparisons. Display colors follow the usual
// green/yellow/orange/red/pink indicator convention.
enum class Band : int {
    VeryLow = 0,
    Low,
    Medium,
    Average,
    High,
};

const char* band_name(Band b);
const char* band_color(Band b);

struct BatteryGauge {
    std::int64_t capacity = 0;  // fixed for the life of the gauge
    std::int64_t charge = 0;    // invariant: 0 <= charge <= capacity

    // Saturating at zero; returns the units actually removed.
    std::int64_t discharge(std::int64_t amount);
    // Saturating at capacity; returns the units actually added.
    std::int64_t recharge(std::int64_t amount);

    bool full() const { return charge == capacity; }
};

// Fractions of capacity, strictly decreasing. t1..t3 in (0,1);
// t4 may be 0, which makes VeryLow unreachable.
struct BandThresholds {
    double t1 = 0.8;
    double t2 = 0.6;
    double t3 = 0.4;
    double t4 = 0.2;
};

// Lower charge edge of each band above VeryLow (half-open intervals,
// closed at the lower edge of the higher band):
//   charge >= edge_high                 -> High
//   edge_average <= charge < edge_high  -> Average
//   edge_medium <= charge < edge_average-> Medium
//   edge_low <= charge < edge_medium    -> Low
//   charge < edge_low                   -> VeryLow
struct BandBoundaries {
    std::int64_t edge_high = 0;
    std::int64_t edge_average = 0;
    std::int64_t edge_medium = 0;
    std::int64_t edge_low = 0;

    // edge = charge_units(t, capacity) for each threshold.
    static BandBoundaries from(const BandThresholds& th, std::int64_t capacity);
};

// ceil(fraction * capacity), with decimal-intent rounding so e.g.
// 0.8 * 1000 lands on 800 regardless of float representation.
std::int64_t charge_units(double fraction, std::int64_t capacity);

Band band(const BatteryGauge& g, const BandBoundaries& b);

// True once the gauge has fallen into Low or VeryLow.
bool needs_charge(const BatteryGauge& g, const BandBoundaries& b);

// True only in the last band (VeryLow).
bool is_critical(const BatteryGauge& g, const BandBoundaries& b);

}  // namespace botsim
