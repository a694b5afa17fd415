#include "uma/signal.hpp"

#include <algorithm>
#include <stdexcept>

#include "uma/oracle.hpp"

namespace uma {

std::string_view to_string(SignalFamily f) {
    switch (f) {
        case SignalFamily::qual_dull:
            return "qual-dull";
        case SignalFamily::qual_sharp:
            return "qual-sharp";
        case SignalFamily::real_dull:
            return "real-dull";
        case SignalFamily::real_sharp:
            return "real-sharp";
    }
    return "unknown";
}

std::optional<SignalFamily> parse_signal_family(std::string_view text) {
    if (text == "qual-dull") return SignalFamily::qual_dull;
    if (text == "qual-sharp") return SignalFamily::qual_sharp;
    if (text == "real-dull") return SignalFamily::real_dull;
    if (text == "real-sharp") return SignalFamily::real_sharp;
    return std::nullopt;
}

bool is_qualitative(SignalFamily f) { return f == SignalFamily::qual_dull || f == SignalFamily::qual_sharp; }

double signal_value(const Environment& env, const ValueSignal& v, std::size_t pos) {
    if (v.target >= env.positions()) throw std::out_of_range("signal target outside the environment");
    const auto d = static_cast<double>(env.distance(pos, v.target));
    const auto diam = static_cast<double>(env.diameter());
    switch (v.family) {
        case SignalFamily::qual_dull:
            return pos == v.target ? 0.0 : 1.0;
        case SignalFamily::qual_sharp:
            return d;
        case SignalFamily::real_dull:
            return 1.0 + diam - d;
        case SignalFamily::real_sharp: {
            double x = 1.0 + diam - d;
            return x * x * x * x;
        }
    }
    return 0.0;
}

double signal_cap(const Environment& env, const ValueSignal& v) {
    double cap = 0.0;
    for (std::size_t p = 0; p < env.positions(); ++p) cap = std::max(cap, signal_value(env, v, p));
    return cap;
}

std::string_view to_string(Sampling s) { return s == Sampling::iid ? "iid" : "lazy"; }

std::optional<Sampling> parse_sampling(std::string_view text) {
    if (text == "iid") return Sampling::iid;
    if (text == "lazy") return Sampling::lazy;
    return std::nullopt;
}

std::vector<double> sampling_distribution(const Environment& env, Sampling s) {
    if (s == Sampling::iid) return std::vector<double>(env.positions(), 1.0 / static_cast<double>(env.positions()));
    return oracle::stationary_distribution(env).distribution;
}

}  // namespace uma
