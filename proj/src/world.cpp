#include "botsim/world.hpp"

#include <cassert>
#include <stdexcept>

namespace botsim {

const char* heading_name(Heading h) {
    return h == Heading::TowardRed ? "toward_red" : "toward_green";
}

PatrolStep advance(std::int64_t position, Heading heading, const SubEnvironment& env) {
    assert(position >= 0 && position <= env.red_post);
    if (position == env.red_post && heading == Heading::TowardRed) {
        heading = Heading::TowardGreen;
    } else if (position == 0 && heading == Heading::TowardGreen) {
        heading = Heading::TowardRed;
    }
    position += heading == Heading::TowardRed ? 1 : -1;
    if (position == env.red_post) {
        heading = Heading::TowardGreen;
    } else if (position == 0) {
        heading = Heading::TowardRed;
    }
    return PatrolStep{position, heading};
}

std::int64_t step_toward(std::int64_t position, std::int64_t target) {
    if (position < target) return position + 1;
    if (position > target) return position - 1;
    return position;
}

double total_work(std::span<const std::int64_t> odometers,
                  std::span<const SubEnvironment> envs) {
    if (odometers.size() != envs.size()) {
        throw std::invalid_argument("total_work: one odometer per sub-environment required");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < envs.size(); ++i) {
        sum += static_cast<double>(odometers[i]) * envs[i].weight;
    }
    return sum;
}

}  // namespace botsim
