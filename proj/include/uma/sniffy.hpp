#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

#include "uma/bua.hpp"
#include "uma/observer.hpp"

namespace uma {

enum class StartMode { random, antipode };
std::string_view to_string(StartMode m);
std::optional<StartMode> parse_start_mode(std::string_view text);

struct SniffySettings {
    LearnerSettings learner;  // q defaults to 1 - 1/(N+1)
    std::size_t steps = 2500;     // total, training included
    std::size_t training = 2000;  // lazy-walk steps before the agents take over
    // antipode: when control starts, move to T + N/2 and reseed the delayed half
    StartMode start = StartMode::random;

    double q_for(const Environment& env) const;
};

struct SniffyRecord {
    std::size_t t = 0;
    std::size_t pos = 0;
    std::size_t dist = 0;
    Move action = Move::stay;  // the move that led to pos; stay at t = 0
    double value = 0.0;
    bool control = false;      // the move was chosen by the agents
    long displacement = 0;     // signed, unwrapped, since control started
};

struct SniffyResult {
    SniffyRecord final_record;
    std::size_t start_pos = 0;
    std::size_t control_pos = 0;
};

// Two agents, rt and lt, over the delay-extended alphabet of env.
SniffyResult run_sniffy(const Environment& env, const ValueSignal& signal, const SniffySettings& settings, Rng& rng,
                        const std::function<void(const SniffyRecord&)>& sink = {});

}  // namespace uma
