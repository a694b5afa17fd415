#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "uma/environment.hpp"
#include "uma/signal.hpp"
#include "uma/snapshot.hpp"

namespace uma {

struct LearnerSettings {
    SnapshotKind kind = SnapshotKind::qualitative;
    std::optional<double> q;    // the caller's default when absent
    std::optional<double> tau;  // 1/(2N) when absent
    Rank delta = 0;

    double tau_for(const Environment& env) const;
};

struct ObserverSettings {
    LearnerSettings learner;
    Sampling sampling = Sampling::iid;
    std::size_t steps = 10000;
    // 0 records only t = 0 and the final step
    std::size_t record_every = 1;
};

struct ObserverRecord {
    std::size_t t = 0;
    std::optional<std::size_t> pos;  // the position observed at step t; none at t = 0
    double value = 0.0;
    double err_pcr = 0.0;
    double err_closure = 0.0;
};

struct ObserverResult {
    Snapshot snapshot;
    Pcr expected;
    Pcr truth;
    ObserverRecord final_record;
};

// Passive learning: one snapshot fed sense(pos) and v(pos) for sampled
// positions. Records t = 0 (nothing observed) and then every record_every-th
// step, always including the last.
ObserverResult run_observer(const Environment& env, const ValueSignal& signal, const ObserverSettings& settings,
                            Rng& rng, const std::function<void(const ObserverRecord&)>& sink = {});

}  // namespace uma
