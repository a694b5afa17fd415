#pragma once

#include <cstddef>

#include "uma/environment.hpp"
#include "uma/rank.hpp"
#include "uma/signal.hpp"
#include "uma/snapshot.hpp"

namespace uma {

// PCR derived from the exact expected weights (real kinds) or from the exact
// limiting 2-ranking, the min of point masses over reachable positions
// (qualitative kind). Throws if the signal family does not fit the kind.
Pcr expected_pcr(const Environment& env, const ValueSignal& signal, SnapshotKind kind, Sampling sampling,
                 double tau, Rank delta = 0);

// ordered pairs (a, b) of proper literals from different complement pairs
std::size_t error_denominator(const Sigma& sigma);
// fraction of those pairs on which the stored relations disagree
double error_rate_pcr(const Pcr& learned, const Pcr& expected);
// same, comparing the transitive closures
double error_rate_closure(const Pcr& learned, const Pcr& truth);

}  // namespace uma
