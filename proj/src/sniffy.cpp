#include "uma/sniffy.hpp"

#include <stdexcept>

namespace uma {

std::string_view to_string(StartMode m) { return m == StartMode::random ? "random" : "antipode"; }

std::optional<StartMode> parse_start_mode(std::string_view text) {
    if (text == "random") return StartMode::random;
    if (text == "antipode") return StartMode::antipode;
    return std::nullopt;
}

double SniffySettings::q_for(const Environment& env) const {
    return learner.q.value_or(1.0 - 1.0 / (static_cast<double>(env.size()) + 1.0));
}

SniffyResult run_sniffy(const Environment& env, const ValueSignal& signal, const SniffySettings& settings, Rng& rng,
                        const std::function<void(const SniffyRecord&)>& sink) {
    if (settings.training > settings.steps) throw std::invalid_argument("training period exceeds the run length");
    if (settings.start == StartMode::antipode && !env.is_circle())
        throw std::invalid_argument("antipode start needs a circle environment");
    if (is_qualitative(signal.family) != (settings.learner.kind == SnapshotKind::qualitative))
        throw std::invalid_argument("signal family does not match the snapshot kind");
    const Sigma ext = delayed_extend(env.sigma());
    const LearnerSettings& ls = settings.learner;
    const double tau = ls.tau_for(env), q = settings.q_for(env);
    BuaAgent rt(ext, ls.kind, q, tau, ls.delta), lt(ext, ls.kind, q, tau, ls.delta);

    SniffyResult result;
    SniffyRecord rec;
    rec.pos = result.start_pos = iid_step(env, rng);
    result.control_pos = rec.pos;
    rec.dist = env.distance(rec.pos, signal.target);
    rec.value = signal_value(env, signal, rec.pos);
    LiteralSet raw = env.sense(rec.pos);
    LiteralSet prev = raw;
    if (sink) sink(rec);

    for (std::size_t t = 0; t < settings.steps; ++t) {
        const bool control = t >= settings.training;
        if (control && t == settings.training) {
            if (settings.start == StartMode::antipode) {
                rec.pos = (signal.target + env.size() / 2) % env.size();
                raw = prev = env.sense(rec.pos);
            }
            result.control_pos = rec.pos;
        }
        Move move;
        if (control) {
            LiteralSet obs = extend_observation(ext, raw, prev);
            bool right = rt.decide(obs, rng);
            bool left = lt.decide(obs, rng);
            move = arbitrate(right, left, rng);
        } else {
            move = random_move(rng);
        }
        std::size_t next = env.apply(rec.pos, move);
        if (control) {
            if (env.is_circle())
                rec.displacement += move == Move::right ? 1 : move == Move::left ? -1 : 0;
            else
                rec.displacement += static_cast<long>(next) - static_cast<long>(rec.pos);
        }
        prev = raw;
        raw = env.sense(next);
        rec.t = t + 1;
        rec.pos = next;
        rec.dist = env.distance(next, signal.target);
        rec.action = move;
        rec.control = control;
        rec.value = signal_value(env, signal, next);
        LiteralSet obs = extend_observation(ext, raw, prev);
        rt.learn(move == Move::right, obs, rec.value);
        lt.learn(move == Move::left, obs, rec.value);
        if (sink) sink(rec);
    }
    result.final_record = rec;
    return result;
}

}  // namespace uma
