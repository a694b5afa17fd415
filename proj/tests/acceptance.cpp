// One PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "uma/batch.hpp"
#include "uma/bua.hpp"
#include "uma/metrics.hpp"
#include "uma/propagation.hpp"
#include "uma/real_snapshot.hpp"
#include "uma/chernoff.hpp"
#include "uma/suites.hpp"

using namespace uma;

namespace {

constexpr std::uint64_t kSeed = 20240607;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

void note(const std::string& text) {
    std::printf("    %s\n", text.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

void suite(int id, const std::string& name, const std::function<suites::Result(const suites::Options&)>& run,
           double max_seconds = 0.0) {
    suites::Options o;
    o.seed = kSeed;
    auto r = run(o);
    bool ok = r.passed() && (max_seconds == 0.0 || r.seconds < max_seconds);
    std::string detail = std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " failures, " +
                         fmt("%.1f s", r.seconds);
    if (max_seconds > 0.0) detail += fmt(" (limit %.0f s)", max_seconds);
    if (r.worst > 0.0) detail += ", worst " + fmt("%.3g", r.worst);
    report(id, name, ok, detail);
    for (const auto& c : r.counterexamples) note(c.case_name + ": " + c.counterexample);
}

// the per-run stream and target draw used by batch runs
struct Run {
    Rng rng;
    std::size_t target;
};

Run start_run(const Environment& env, std::uint64_t master, std::size_t id) {
    Rng rng(run_seed(master, id));
    std::size_t target = iid_step(env, rng);
    return {rng, target};
}

void interval_convergence() {
    const auto env = Environment::interval_gps(20);
    struct Variant {
        const char* name;
        SnapshotKind kind;
        SignalFamily family;
    };
    const Variant variants[] = {
        {"empirical/dull", SnapshotKind::empirical, SignalFamily::real_dull},
        {"empirical/sharp", SnapshotKind::empirical, SignalFamily::real_sharp},
        {"discounted/dull", SnapshotKind::discounted, SignalFamily::real_dull},
        {"discounted/sharp", SnapshotKind::discounted, SignalFamily::real_sharp},
        {"qualitative/dull", SnapshotKind::qualitative, SignalFamily::qual_dull},
        {"qualitative/sharp", SnapshotKind::qualitative, SignalFamily::qual_sharp},
    };
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& v : variants) {
        ObserverSettings st;
        st.learner.kind = v.kind;
        st.learner.q = 0.999;
        st.steps = 10000;
        st.record_every = 0;
        std::size_t good = 0;
        for (std::size_t id = 0; id < 100; ++id) {
            Run r = start_run(env, kSeed + 7, id);
            auto res = run_observer(env, {v.family, r.target}, st, r.rng);
            good += res.final_record.err_pcr == 0.0 && res.final_record.err_closure == 0.0;
        }
        ok = ok && good >= 95;
        detail += std::string(detail.empty() ? "" : ", ") + v.name + " " + std::to_string(good) + "/100";
    }
    report(7, "interval convergence, runs with both errors 0 (need >= 95/100)", ok,
           detail + fmt("; %.1f s", seconds_since(t0)));
}

void circle_discrepancy() {
    const auto env = Environment::circle_beacons(20);
    ObserverSettings st;
    st.learner.kind = SnapshotKind::qualitative;
    st.steps = 10000;
    st.record_every = 0;
    double dull_sum = 0, sharp_min = 1, sharp_sum = 0;
    bool dull_zero = true;
    const std::size_t runs = 20;
    for (std::size_t id = 0; id < runs; ++id) {
        Run a = start_run(env, kSeed + 8, id);
        auto d = run_observer(env, {SignalFamily::qual_dull, a.target}, st, a.rng);
        Run b = start_run(env, kSeed + 9, id);
        auto s = run_observer(env, {SignalFamily::qual_sharp, b.target}, st, b.rng);
        dull_sum += d.final_record.err_closure;
        dull_zero = dull_zero && d.final_record.err_closure == 0.0;
        sharp_sum += s.final_record.err_closure;
        sharp_min = std::min(sharp_min, s.final_record.err_closure);
    }
    report(8, "circle closure error, dull -> 0 and sharp > 0", dull_zero && sharp_min > 0.0,
           fmt("dull mean %.4g", dull_sum / runs) + fmt(", sharp mean %.4g", sharp_sum / runs) +
               fmt(", sharp min %.4g", sharp_min) + " over " + std::to_string(runs) + " runs of 10^4 steps");
}

void chernoff_frequencies() {
    const auto env = Environment::interval_gps(20);
    const Sigma& s = env.sigma();
    struct Setting {
        const char* name;
        SignalFamily family;
        std::size_t target;
        Literal a, b;
        double rel_delta;  // delta / cap
    };
    // a5* with a15 holds on positions 5..14
    const Setting settings[] = {
        {"real-dull w(a5*,a15)", SignalFamily::real_dull, 10, s.negative(4), s.positive(14), 0.15},
        {"real-dull w(a10)", SignalFamily::real_dull, 3, s.positive(9), s.positive(9), 0.2},
        {"real-sharp w(a5*,a15)", SignalFamily::real_sharp, 10, s.negative(4), s.positive(14), 0.12},
    };
    const std::size_t checkpoints[] = {50, 100, 200};
    const std::size_t trials = 1000;
    Rng rng(kSeed + 10);
    bool ok = true;
    std::string detail;
    for (const auto& st : settings) {
        ValueSignal sig{st.family, st.target};
        const double cap = signal_cap(env, sig);
        double mean = 0;
        for (std::size_t p = 0; p < env.positions(); ++p) {
            LiteralSet u = env.sense(p);
            if (u.test(st.a) && u.test(st.b)) mean += signal_value(env, sig, p);
        }
        mean /= static_cast<double>(env.positions());
        const double delta = st.rel_delta * cap;
        std::size_t hits[3] = {0, 0, 0};
        for (std::size_t k = 0; k < trials; ++k) {
            RealSnapshot snap(s, DiscountSchedule::empirical(), 0.025);
            for (std::size_t t = 1, c = 0; t <= 200; ++t) {
                std::size_t pos = iid_step(env, rng);
                snap.update(env.sense(pos), signal_value(env, sig, pos));
                if (t == checkpoints[c]) {
                    hits[c] += std::abs(snap.weight(st.a, st.b) - mean) >= delta;
                    ++c;
                }
            }
        }
        for (int c = 0; c < 3; ++c) {
            const double freq = static_cast<double>(hits[c]) / trials;
            const double bound = chernoff_bound(checkpoints[c] - 1, delta, mean / cap, cap);
            ok = ok && freq <= bound;
            detail += std::string(detail.empty() ? "" : "; ") + st.name + " t+1=" + std::to_string(checkpoints[c]) +
                      fmt(" freq %.3f", freq) + fmt(" <= %.3f", bound);
        }
    }
    report(9, "deviation frequency within the relative-entropy bound", ok, detail);
}

// Circle, target 0: both agents see every transition once, then are assessed
// at the standing observation of each position k.
void circle_fixture() {
    const auto env = Environment::circle_beacons(20, 4);
    const ValueSignal sig{SignalFamily::qual_dull, 0};
    const Sigma ext = delayed_extend(env.sigma());
    BuaAgent rt(ext, SnapshotKind::qualitative, 0.95, 0.025, 0), lt(ext, SnapshotKind::qualitative, 0.95, 0.025, 0);
    for (std::size_t p = 0; p < 20; ++p)
        for (Move m : {Move::left, Move::stay, Move::right}) {
            std::size_t n = env.apply(p, m);
            LiteralSet obs = extend_observation(ext, env.sense(n), env.sense(p));
            double v = signal_value(env, sig, n);
            rt.learn(m == Move::right, obs, v);
            lt.learn(m == Move::left, obs, v);
        }
    auto divergence = [&](BuaAgent& a, bool acted, std::size_t k) {
        LiteralSet cur = extend_observation(ext, env.sense(k), env.sense(k));
        LiteralSet pred = coherent_projection(a.derived(acted), shift_to_delayed(ext, cur));
        return (a.snapshot(acted).minset() - pred).count();
    };
    bool closed_ok = true, regions_ok = true;
    std::string lt_active, rt_active, mismatch;
    for (std::size_t k = 0; k < 20; ++k) {
        const std::size_t want_lt = 4 * std::min<std::size_t>(9, env.distance(1, k));
        const std::size_t want_rt = 4 * std::min<std::size_t>(9, env.distance(19, k));
        const std::size_t lt_act = divergence(lt, true, k), rt_act = divergence(rt, true, k);
        if (lt_act != want_lt || rt_act != want_rt) {
            closed_ok = false;
            mismatch += " k=" + std::to_string(k);
        }
        const bool lt_on = lt_act < divergence(lt, false, k);
        const bool rt_on = rt_act < divergence(rt, false, k);
        // T + {1..11} and T - {1..11} on Z_20
        const bool lt_want = k >= 1 && k <= 11;
        const bool rt_want = k >= 9 && k <= 19;
        regions_ok = regions_ok && lt_on == lt_want && rt_on == rt_want;
        if (lt_on) lt_active += (lt_active.empty() ? "" : ",") + std::to_string(k);
        if (rt_on) rt_active += (rt_active.empty() ? "" : ",") + std::to_string(k);
    }
    report(10, "circle fixture, acting divergences 4 min{9, dist(+-1,k)} and decision regions",
           closed_ok && regions_ok,
           std::string("divergences ") + (closed_ok ? "match" : "differ at" + mismatch) + "; lt active {" +
               lt_active + "} (want 1..11), rt active {" + rt_active + "} (want 9..19)");

    // resting divergence of lt against 4 min{9, dist(0,k)} + d(k), d = 0 on 1..9 and 1 at 10
    std::string rested = "lt resting divergence by k:";
    std::size_t agree = 0;
    for (std::size_t k = 0; k < 20; ++k) {
        const std::size_t got = divergence(lt, false, k);
        rested += " " + std::to_string(got);
        if (k >= 1 && k <= 10) agree += got == 4 * std::min<std::size_t>(9, k) + (k == 10 ? 1 : 0);
    }
    note(rested);
    note("lt resting closed form holds at " + std::to_string(agree) + " of the 10 positions k = 1..10");
}

void sniffy_interval() {
    const auto env = Environment::interval_gps(20);
    SniffySettings st;  // 2500 steps, 2000 training
    double sum = 0;
    std::size_t at_target = 0;
    const std::size_t runs = 100;
    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t id = 0; id < runs; ++id) {
        Run r = start_run(env, 1, id);
        auto res = run_sniffy(env, {SignalFamily::qual_dull, r.target}, st, r.rng);
        sum += static_cast<double>(res.final_record.dist);
        at_target += res.final_record.dist == 0;
    }
    const double mean = sum / runs;
    report(11, "interval sniffy, mean distance to target at t = training + 500 below 1", mean < 1.0,
           fmt("mean %.3f", mean) + ", at target " + std::to_string(at_target) + "/100" +
               fmt(", %.1f s", seconds_since(t0)));
}

void sniffy_circle() {
    const auto env = Environment::circle_beacons(20);
    const std::size_t runs = 100;
    SniffySettings st;
    std::size_t nearer = 0;
    for (std::size_t id = 0; id < runs; ++id) {
        Run r = start_run(env, 1, id);
        auto res = run_sniffy(env, {SignalFamily::qual_dull, r.target}, st, r.rng);
        const std::size_t to_target = res.final_record.dist;
        const std::size_t to_antipode = env.distance(res.final_record.pos, (r.target + 10) % 20);
        nearer += to_target < to_antipode;
    }
    const double frac = static_cast<double>(nearer) / runs;

    st.start = StartMode::antipode;
    std::vector<double> disp;
    for (std::size_t id = 0; id < runs; ++id) {
        Run r = start_run(env, 1, id);
        auto res = run_sniffy(env, {SignalFamily::qual_dull, r.target}, st, r.rng);
        disp.push_back(static_cast<double>(res.final_record.displacement));
    }
    auto m = summarize("displacement", disp);
    const double stderr_ = m.stddev / std::sqrt(static_cast<double>(runs));
    const bool drift_ok = std::abs(m.mean) <= 2 * stderr_;
    std::size_t moved = 0;
    for (double d : disp) moved += d != 0.0;
    report(12, "circle sniffy, random starts end nearer the target; antipode starts do not drift",
           frac > 0.5 && drift_ok,
           fmt("nearer %.2f", frac) + fmt("; antipode displacement mean %.3f", m.mean) +
               fmt(", 2 stderr %.3f", 2 * stderr_) + ", runs that moved " + std::to_string(moved) + "/100");
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    suite(1, "propagation equals BFS projection", suites::propagation, 60.0);
    suite(2, "median uniqueness and Helly", suites::median_helly);
    suite(3, "coherent projection laws", suites::coherent_projection);
    suite(4, "quotient duality", suites::quotient_duality);
    suite(5, "minset plateau equals hull of minima", suites::minset_plateau);
    suite(6, "2-weight validity after 10^4 discounted updates", suites::weight_validity);
    interval_convergence();
    circle_discrepancy();
    chernoff_frequencies();
    circle_fixture();
    sniffy_interval();
    sniffy_circle();
    std::printf("%d criteria failed, %.1f s\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
