#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "uma/environment.hpp"

namespace uma {

enum class SignalFamily { qual_dull, qual_sharp, real_dull, real_sharp };

std::string_view to_string(SignalFamily f);
std::optional<SignalFamily> parse_signal_family(std::string_view text);
bool is_qualitative(SignalFamily f);

struct ValueSignal {
    SignalFamily family;
    std::size_t target;
};

// qual-dull: 0 at the target, 1 elsewhere; qual-sharp: dist(p, T);
// real-dull: 1 + diam - dist(p, T); real-sharp: real-dull to the fourth power
double signal_value(const Environment& env, const ValueSignal& v, std::size_t pos);
double signal_cap(const Environment& env, const ValueSignal& v);

// Exact position distribution of the sampler: uniform, or the lazy walk's
// stationary distribution.
enum class Sampling { iid, lazy };
std::string_view to_string(Sampling s);
std::optional<Sampling> parse_sampling(std::string_view text);
std::vector<double> sampling_distribution(const Environment& env, Sampling s);

}  // namespace uma
