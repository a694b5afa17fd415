#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "uma/observer.hpp"
#include "uma/sniffy.hpp"

namespace uma {

enum class RunMode { observer, sniffy };
std::string_view to_string(RunMode m);
std::optional<RunMode> parse_run_mode(std::string_view text);

struct RunConfig {
    EnvKind env_kind = EnvKind::interval_gps;
    std::size_t n = 20;
    std::optional<std::size_t> radius;
    std::uint64_t env_seed = 0;

    SignalFamily family = SignalFamily::qual_dull;
    std::optional<std::size_t> target;  // drawn per run when absent

    LearnerSettings learner;

    RunMode mode = RunMode::observer;
    std::size_t steps = 10000;
    std::size_t training = 2000;
    std::size_t batch = 1;
    std::uint64_t seed = 0;
    Sampling sampling = Sampling::iid;
    StartMode start = StartMode::random;
    bool checkpoint = false;
    std::size_t record_every = 1;
};

Environment make_environment(const RunConfig& c);

// Independent stream per run, split from the master seed through seed_seq.
std::uint64_t run_seed(std::uint64_t master, std::size_t run_id);

struct MetricSummary {
    std::string name;
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation, 0 for a single run
};

struct BatchSummary {
    std::size_t runs = 0;
    std::size_t final_t = 0;
    std::vector<MetricSummary> metrics;
    // summary runs=R t=T err_pcr.mean=M err_pcr.std=S ..., shortest round-trip decimals
    std::string line() const;
};

MetricSummary summarize(std::string name, const std::vector<double>& xs);

struct BatchOptions {
    unsigned threads = 0;  // 0: hardware concurrency
    std::string checkpoint_prefix;  // observer runs save <prefix>_run<k>.snap when the config asks
};

// Runs every member of the batch, writes the CSV (header first, runs in id
// order) and returns the final-step statistics: err_pcr and err_closure for
// observers, dist for sniffy.
BatchSummary run_batch(const RunConfig& c, std::ostream& csv, const BatchOptions& options = {});

}  // namespace uma
