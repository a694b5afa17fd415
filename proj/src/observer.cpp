#include "uma/observer.hpp"

#include "uma/metrics.hpp"

namespace uma {

double LearnerSettings::tau_for(const Environment& env) const {
    return tau.value_or(1.0 / (2.0 * static_cast<double>(env.size())));
}

ObserverResult run_observer(const Environment& env, const ValueSignal& signal, const ObserverSettings& settings,
                            Rng& rng, const std::function<void(const ObserverRecord&)>& sink) {
    const LearnerSettings& ls = settings.learner;
    const double tau = ls.tau_for(env);
    ObserverResult out{Snapshot::make(env.sigma(), ls.kind, ls.q.value_or(0.999), tau, ls.delta),
                       expected_pcr(env, signal, ls.kind, settings.sampling, tau, ls.delta), ground_truth_pcr(env),
                       {}};
    out.truth.freeze();

    ObserverRecord rec;
    Pcr learned = out.snapshot.derived_pcr();
    bool stale = false;
    auto measure = [&] {
        if (stale) {
            learned = out.snapshot.derived_pcr();
            stale = false;
        }
        rec.err_pcr = error_rate_pcr(learned, out.expected);
        rec.err_closure = error_rate_closure(learned, out.truth);
        if (sink) sink(rec);
    };
    measure();

    std::size_t pos = iid_step(env, rng);
    for (std::size_t t = 1; t <= settings.steps; ++t) {
        if (t > 1) pos = settings.sampling == Sampling::iid ? iid_step(env, rng) : lazy_step(env, pos, rng);
        rec.t = t;
        rec.pos = pos;
        rec.value = signal_value(env, signal, pos);
        stale |= out.snapshot.update(env.sense(pos), rec.value);
        bool due = t == settings.steps || (settings.record_every != 0 && t % settings.record_every == 0);
        if (due) measure();
    }
    out.final_record = rec;
    if (settings.steps == 0) out.final_record.t = 0;
    return out;
}

}  // namespace uma
