#include "botsim/energy.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace botsim {

const char* band_name(Band b) {
    switch (b) {
        case Band::High: return "High";
        case Band::Average: return "Average";
        case Band::Medium: return "Medium";
        case Band::Low: return "Low";
        case Band::VeryLow: return "VeryLow";
    }
    return "?";
}

const char* band_color(Band b) {
    switch (b) {
        case Band::High: return "Green";
        case Band::Average: return "Yellow";
        case Band::Medium: return "Orange";
        case Band::Low: return "Red";
        case Band::VeryLow: return "Pink";
    }
    return "?";
}

std::int64_t BatteryGauge::discharge(std::int64_t amount) {
    assert(amount >= 0);
    const std::int64_t removed = std::min(amount, charge);
    charge -= removed;
    return removed;
}

std::int64_t BatteryGauge::recharge(std::int64_t amount) {
    assert(amount >= 0);
    const std::int64_t added = std::min(amount, capacity - charge);
    charge += added;
    return added;
}

std::int64_t charge_units(double fraction, std::int64_t capacity) {
    const double x = fraction * static_cast<double>(capacity);
    const double nearest = std::round(x);
    // Snap to the nearest integer when the product is within float noise
    // of it, otherwise take the ceiling.
    if (std::abs(x - nearest) < 1e-9 * std::max(1.0, std::abs(x))) {
        return static_cast<std::int64_t>(nearest);
    }
    return static_cast<std::int64_t>(std::ceil(x));
}

BandBoundaries BandBoundaries::from(const BandThresholds& th, std::int64_t capacity) {
    return BandBoundaries{
        charge_units(th.t1, capacity),
        charge_units(th.t2, capacity),
        charge_units(th.t3, capacity),
        charge_units(th.t4, capacity),
    };
}

Band band(const BatteryGauge& g, const BandBoundaries& b) {
    if (g.charge >= b.edge_high) return Band::High;
    if (g.charge >= b.edge_average) return Band::Average;
    if (g.charge >= b.edge_medium) return Band::Medium;
    if (g.charge >= b.edge_low) return Band::Low;
    return Band::VeryLow;
}

bool needs_charge(const BatteryGauge& g, const BandBoundaries& b) {
    return g.charge < b.edge_medium;
}

bool is_critical(const BatteryGauge& g, const BandBoundaries& b) {
    return g.charge < b.edge_low;
}

}  // namespace botsim
