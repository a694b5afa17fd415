#include "uma/batch.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "uma/checkpoint.hpp"
#include "uma/csv.hpp"

namespace uma {

std::string_view to_string(RunMode m) { return m == RunMode::observer ? "observer" : "sniffy"; }

std::optional<RunMode> parse_run_mode(std::string_view text) {
    if (text == "observer") return RunMode::observer;
    if (text == "sniffy") return RunMode::sniffy;
    return std::nullopt;
}

Environment make_environment(const RunConfig& c) {
    switch (c.env_kind) {
        case EnvKind::interval_gps:
            return Environment::interval_gps(c.n);
        case EnvKind::circle_beacons:
            return Environment::circle_beacons(c.n, c.radius);
        case EnvKind::interval_random:
            return Environment::interval_random(c.n, c.env_seed);
    }
    throw std::invalid_argument("unknown environment kind");
}

std::uint64_t run_seed(std::uint64_t master, std::size_t run_id) {
    std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(run_id), static_cast<std::uint32_t>(std::uint64_t{run_id} >> 32)};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (std::uint64_t{out[0]} << 32) | out[1];
}

std::string BatchSummary::line() const {
    std::ostringstream os;
    os << "summary runs=" << runs << " t=" << final_t;
    for (const auto& m : metrics)
        os << ' ' << m.name << ".mean=" << format_double(m.mean) << ' ' << m.name << ".std=" << format_double(m.stddev);
    return os.str();
}

MetricSummary summarize(std::string name, const std::vector<double>& xs) {
    MetricSummary m{std::move(name), 0.0, 0.0};
    if (xs.empty()) return m;
    for (double x : xs) m.mean += x;
    m.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - m.mean) * (x - m.mean);
        m.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return m;
}

namespace {

struct RunOutput {
    std::string rows;
    std::vector<double> finals;
    std::size_t final_t = 0;
};

RunOutput one_run(const RunConfig& c, const Environment& env, std::size_t run_id, const BatchOptions& options) {
    Rng rng(run_seed(c.seed, run_id));
    std::size_t target = c.target ? *c.target : iid_step(env, rng);
    if (target >= env.positions()) throw std::invalid_argument("signal target outside the environment");
    ValueSignal signal{c.family, target};
    RunOutput out;
    const std::string stem = options.checkpoint_prefix + "_run" + std::to_string(run_id);
    if (c.mode == RunMode::observer) {
        ObserverSettings s{c.learner, c.sampling, c.steps, c.record_every};
        auto r = run_observer(env, signal, s, rng, [&](const ObserverRecord& rec) {
            out.rows += observer_row(run_id, env, target, rec);
            out.rows += '\n';
        });
        out.finals = {r.final_record.err_pcr, r.final_record.err_closure};
        out.final_t = r.final_record.t;
        if (c.checkpoint) save_checkpoint(stem + ".snap", r.snapshot);
    } else {
        SniffySettings s{c.learner, c.steps, c.training, c.start};
        auto r = run_sniffy(env, signal, s, rng, [&](const SniffyRecord& rec) {
            if (c.record_every != 0 && rec.t % c.record_every != 0 && rec.t != c.steps) return;
            if (c.record_every == 0 && rec.t != 0 && rec.t != c.steps) return;
            out.rows += sniffy_row(run_id, target, rec);
            out.rows += '\n';
        });
        out.finals = {static_cast<double>(r.final_record.dist)};
        out.final_t = r.final_record.t;
    }
    return out;
}

}  // namespace

BatchSummary run_batch(const RunConfig& c, std::ostream& csv, const BatchOptions& options) {
    if (c.batch == 0) throw std::invalid_argument("batch size must be positive");
    const Environment env = make_environment(c);
    std::vector<RunOutput> outputs(c.batch);
    std::vector<bool> done(c.batch, false);
    std::size_t flushed = 0;
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;

    csv << kCsvHeader << '\n';
    auto worker = [&] {
        for (std::size_t id; (id = next++) < c.batch;) {
            RunOutput out;
            try {
                out = one_run(c, env, id, options);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
                next = c.batch;
                return;
            }
            std::lock_guard lock(mu);
            outputs[id] = std::move(out);
            done[id] = true;
            // stream completed runs in id order, then drop their text
            while (flushed < c.batch && done[flushed]) {
                csv << outputs[flushed].rows;
                outputs[flushed].rows.clear();
                outputs[flushed].rows.shrink_to_fit();
                ++flushed;
            }
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, c.batch));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    BatchSummary summary;
    summary.runs = c.batch;
    summary.final_t = outputs.front().final_t;
    std::vector<std::string> names = c.mode == RunMode::observer ? std::vector<std::string>{"err_pcr", "err_closure"}
                                                                 : std::vector<std::string>{"dist"};
    for (std::size_t m = 0; m < names.size(); ++m) {
        std::vector<double> xs;
        for (const auto& o : outputs) xs.push_back(o.finals[m]);
        summary.metrics.push_back(summarize(names[m], xs));
    }
    return summary;
}

}  // namespace uma
