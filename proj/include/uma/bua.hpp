#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "uma/environment.hpp"
#include "uma/snapshot.hpp"

namespace uma {

// Base pairs first, then one delayed pair #a per base pair (pair n + i is #a_i).
Sigma delayed_extend(const Sigma& base);
// raw over the base plus #previous over the delayed half
LiteralSet extend_observation(const Sigma& extended, const LiteralSet& raw, const LiteralSet& previous_raw);
// Moves the base part of s onto the delayed half and adds 1. Delayed
// literals of s are dropped.
LiteralSet shift_to_delayed(const Sigma& extended, const LiteralSet& s);

// One action's agent: a snapshot for "acted" and one for "rested", each
// updated only on the transitions where that branch happened.
class BuaAgent {
public:
    BuaAgent(const Sigma& extended, SnapshotKind kind, double q, double tau, Rank delta);

    struct Branch {
        LiteralSet current;
        LiteralSet prediction;
        LiteralSet minset;
        std::size_t divergence = 0;
    };
    struct Assessment {
        Branch acted;
        Branch rested;
    };

    const Sigma& sigma() const { return sigma_; }
    const Snapshot& snapshot(bool acted) const { return acted ? acted_ : rested_; }
    Snapshot& snapshot(bool acted) { return acted ? acted_ : rested_; }
    // derived PCR of a branch, cached until its next weight change
    const Pcr& derived(bool acted);

    Assessment assess(const LiteralSet& observation);
    // true to act; ties go to a fair coin
    bool decide(const LiteralSet& observation, Rng& rng);
    void learn(bool acted, const LiteralSet& observation, double value);

private:
    Branch branch(bool acted, const LiteralSet& observation);

    Sigma sigma_;
    Snapshot acted_, rested_;
    std::array<std::optional<Pcr>, 2> cache_;
};

// Hard-wired conflict rule for the rt/lt pair: if both want to act, a fair
// coin suppresses one of them.
Move arbitrate(bool right_wants, bool left_wants, Rng& rng);

}  // namespace uma
