#include "uma/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace uma {

ConfigError::ConfigError(const std::string& origin, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Reader {
public:
    explicit Reader(std::string origin) : origin_(std::move(origin)) {}

    [[noreturn]] void fail(const YAML::Node& at, const std::string& msg) const {
        const YAML::Mark m = at.Mark();
        if (m.is_null()) throw ConfigError(origin_, 0, 0, msg);
        throw ConfigError(origin_, static_cast<std::size_t>(m.line) + 1, static_cast<std::size_t>(m.column) + 1, msg);
    }

    // Checks that node is a map whose keys all come from `allowed`.
    void expect_map(const YAML::Node& node, const std::string& what, const std::set<std::string>& allowed) const {
        if (!node.IsMap()) fail(node, what + " must be a mapping");
        for (const auto& kv : node) {
            auto key = kv.first.as<std::string>();
            if (!allowed.count(key)) fail(kv.first, "unknown key '" + key + "' in " + what);
        }
    }

    std::string text(const YAML::Node& node, const std::string& what) const {
        if (!node.IsScalar()) fail(node, what + " must be a scalar");
        return node.as<std::string>();
    }

    std::uint64_t natural(const YAML::Node& node, const std::string& what) const {
        std::string s = text(node, what);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            fail(node, what + " must be a non-negative integer, got '" + s + "'");
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            fail(node, what + " is out of range");
        }
    }

    double real(const YAML::Node& node, const std::string& what) const {
        try {
            if (!node.IsScalar()) fail(node, what + " must be a number");
            return node.as<double>();
        } catch (const YAML::BadConversion&) {
            fail(node, what + " must be a number, got '" + node.as<std::string>() + "'");
        }
    }

    bool boolean(const YAML::Node& node, const std::string& what) const {
        try {
            return node.as<bool>();
        } catch (const YAML::BadConversion&) {
            fail(node, what + " must be true or false");
        }
    }

    template <typename T>
    T choice(const YAML::Node& node, const std::string& what,
             const std::function<std::optional<T>(std::string_view)>& parse, const std::string& options) const {
        auto v = parse(text(node, what));
        if (!v) fail(node, "unknown " + what + " '" + node.as<std::string>() + "' (expected " + options + ")");
        return *v;
    }

private:
    std::string origin_;
};

}  // namespace

LoadedConfig parse_config(const std::string& text, const std::string& origin) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ConfigError(origin, static_cast<std::size_t>(e.mark.line) + 1, static_cast<std::size_t>(e.mark.column) + 1,
                          e.msg);
    }
    Reader r(origin);
    if (!root.IsMap()) {
        if (root.IsNull()) throw ConfigError(origin, 0, 0, "empty config");
        r.fail(root, "config must be a mapping with sections env, signal, learner, run");
    }
    r.expect_map(root, "config", {"env", "signal", "learner", "run"});

    LoadedConfig out;
    RunConfig& c = out.run;

    const YAML::Node env = root["env"];
    if (!env) throw ConfigError(origin, 0, 0, "missing section 'env'");
    r.expect_map(env, "env", {"kind", "N", "radius", "seed"});
    if (!env["kind"]) r.fail(env, "env.kind is required");
    c.env_kind = r.choice<EnvKind>(env["kind"], "env.kind", parse_env_kind,
                                   "interval-gps, circle-beacons or interval-random");
    if (env["N"]) c.n = r.natural(env["N"], "env.N");
    const std::size_t min_n = c.env_kind == EnvKind::circle_beacons ? 3 : 1;
    if (c.n < min_n || c.n > 4096)
        r.fail(env["N"] ? env["N"] : env, "env.N must lie in [" + std::to_string(min_n) + ", 4096]");
    if (env["radius"]) {
        if (c.env_kind != EnvKind::circle_beacons) r.fail(env["radius"], "env.radius applies to circle-beacons only");
        c.radius = r.natural(env["radius"], "env.radius");
        if (2 * *c.radius + 1 >= c.n) r.fail(env["radius"], "env.radius covers the whole circle");
    }
    if (env["seed"]) c.env_seed = r.natural(env["seed"], "env.seed");

    const YAML::Node learner = root["learner"];
    if (learner) {
        r.expect_map(learner, "learner", {"snapshot", "q", "tau", "delta"});
        if (learner["snapshot"])
            c.learner.kind = r.choice<SnapshotKind>(learner["snapshot"], "learner.snapshot", parse_snapshot_kind,
                                                    "qualitative, empirical or discounted");
        if (learner["q"]) {
            double q = r.real(learner["q"], "learner.q");
            if (!(q > 0.0 && q <= 1.0)) r.fail(learner["q"], "learner.q must lie in (0, 1]");
            c.learner.q = q;
        }
        if (learner["tau"]) {
            double tau = r.real(learner["tau"], "learner.tau");
            if (!(tau > 0.0 && tau < 1.0)) r.fail(learner["tau"], "learner.tau must lie in (0, 1)");
            c.learner.tau = tau;
        }
        if (learner["delta"]) {
            std::string s = r.text(learner["delta"], "learner.delta");
            c.learner.delta = s == "inf" ? kInfiniteRank : static_cast<Rank>(r.natural(learner["delta"], "learner.delta"));
            if (s != "inf" && c.learner.delta == kInfiniteRank) r.fail(learner["delta"], "learner.delta is out of range");
        }
    }
    const bool qual = c.learner.kind == SnapshotKind::qualitative;

    const YAML::Node signal = root["signal"];
    if (!signal) throw ConfigError(origin, 0, 0, "missing section 'signal'");
    r.expect_map(signal, "signal", {"family", "target"});
    if (!signal["family"]) r.fail(signal, "signal.family is required");
    {
        std::string f = r.text(signal["family"], "signal.family");
        if (f == "dull")
            c.family = qual ? SignalFamily::qual_dull : SignalFamily::real_dull;
        else if (f == "sharp")
            c.family = qual ? SignalFamily::qual_sharp : SignalFamily::real_sharp;
        else
            c.family = r.choice<SignalFamily>(signal["family"], "signal.family", parse_signal_family,
                                              "dull, sharp, qual-dull, qual-sharp, real-dull or real-sharp");
        if (is_qualitative(c.family) != qual)
            r.fail(signal["family"], "signal.family '" + f + "' does not fit learner.snapshot '" +
                                         std::string(to_string(c.learner.kind)) + "'");
    }
    const std::size_t positions = c.env_kind == EnvKind::circle_beacons ? c.n : c.n + 1;
    if (signal["target"] && r.text(signal["target"], "signal.target") != "random") {
        c.target = r.natural(signal["target"], "signal.target");
        if (*c.target >= positions)
            r.fail(signal["target"], "signal.target must be a position in [0, " + std::to_string(positions - 1) + "]");
    }

    const YAML::Node run = root["run"];
    if (!run) throw ConfigError(origin, 0, 0, "missing section 'run'");
    r.expect_map(run, "run", {"mode", "steps", "training", "batch", "seed", "sampling", "start", "checkpoint",
                              "record_every"});
    if (run["mode"]) c.mode = r.choice<RunMode>(run["mode"], "run.mode", parse_run_mode, "observer or sniffy");
    c.steps = c.mode == RunMode::observer ? 10000 : 2500;
    if (run["steps"]) c.steps = r.natural(run["steps"], "run.steps");
    if (run["training"]) {
        if (c.mode != RunMode::sniffy) r.fail(run["training"], "run.training applies to sniffy runs only");
        c.training = r.natural(run["training"], "run.training");
    }
    if (c.mode == RunMode::sniffy && c.training > c.steps)
        r.fail(run["training"] ? run["training"] : run, "run.training exceeds run.steps");
    if (run["batch"]) {
        c.batch = r.natural(run["batch"], "run.batch");
        if (c.batch == 0) r.fail(run["batch"], "run.batch must be positive");
    }
    if (run["seed"]) {
        c.seed = r.natural(run["seed"], "run.seed");
    } else {
        std::random_device rd;
        c.seed = (std::uint64_t{rd()} << 32) | rd();
        out.seed_generated = true;
    }
    if (run["sampling"])
        c.sampling = r.choice<Sampling>(run["sampling"], "run.sampling", parse_sampling, "iid or lazy");
    if (run["start"]) {
        c.start = r.choice<StartMode>(run["start"], "run.start", parse_start_mode, "random or antipode");
        if (c.start == StartMode::antipode && (c.mode != RunMode::sniffy || c.env_kind != EnvKind::circle_beacons))
            r.fail(run["start"], "run.start: antipode needs a sniffy run on circle-beacons");
    }
    if (run["checkpoint"]) {
        c.checkpoint = r.boolean(run["checkpoint"], "run.checkpoint");
        if (c.checkpoint && c.mode != RunMode::observer)
            r.fail(run["checkpoint"], "run.checkpoint applies to observer runs only");
    }
    if (run["record_every"]) c.record_every = r.natural(run["record_every"], "run.record_every");
    return out;
}

LoadedConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path, 0, 0, "cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

}  // namespace uma
