#include "uma/metrics.hpp"

#include <stdexcept>

namespace uma {

Pcr expected_pcr(const Environment& env, const ValueSignal& signal, SnapshotKind kind, Sampling sampling,
                 double tau, Rank delta) {
    const bool qual_kind = kind == SnapshotKind::qualitative;
    if (qual_kind != is_qualitative(signal.family))
        throw std::invalid_argument("signal family does not match the snapshot kind");
    const auto pi = sampling_distribution(env, sampling);
    const Sigma& sigma = env.sigma();
    if (qual_kind) {
        QualSnapshot limit(sigma, delta);
        for (std::size_t p = 0; p < env.positions(); ++p)
            if (pi[p] > 0.0) limit.update(env.sense(p), static_cast<Rank>(signal_value(env, signal, p)));
        return limit.derived_pcr();
    }
    const std::size_t n = sigma.size();
    std::vector<double> w(n * n, 0.0);
    for (std::size_t p = 0; p < env.positions(); ++p) {
        double mass = pi[p] * signal_value(env, signal, p);
        LiteralSet u = env.sense(p);
        u.for_each([&](Literal a) { u.for_each([&](Literal b) { w[a.id() * n + b.id()] += mass; }); });
    }
    auto schedule = kind == SnapshotKind::empirical ? DiscountSchedule::empirical() : DiscountSchedule::fixed(0.5);
    return RealSnapshot::from_matrix(sigma, std::move(w), schedule, tau, 1).derived_pcr();
}

std::size_t error_denominator(const Sigma& sigma) {
    std::size_t proper = 2 * sigma.n_pairs();
    return proper * (proper - 2);
}

namespace {

template <typename Rel>
double disagreement(const Sigma& sigma, Rel&& differs) {
    const std::size_t denom = error_denominator(sigma);
    if (denom == 0) return 0.0;
    std::size_t bad = 0;
    for (std::uint32_t a = 2; a < sigma.size(); ++a)
        for (std::uint32_t b = 2; b < sigma.size(); ++b)
            if ((a >> 1) != (b >> 1) && differs(Literal{a}, Literal{b})) ++bad;
    return static_cast<double>(bad) / static_cast<double>(denom);
}

}  // namespace

double error_rate_pcr(const Pcr& learned, const Pcr& expected) {
    if (!(learned.sigma() == expected.sigma())) throw std::invalid_argument("error_rate_pcr: alphabets differ");
    return disagreement(learned.sigma(),
                        [&](Literal a, Literal b) { return learned.contains(a, b) != expected.contains(a, b); });
}

double error_rate_closure(const Pcr& learned, const Pcr& truth) {
    if (!(learned.sigma() == truth.sigma())) throw std::invalid_argument("error_rate_closure: alphabets differ");
    Pcr l = learned, t = truth;
    l.freeze();
    t.freeze();
    return disagreement(l.sigma(), [&](Literal a, Literal b) { return l.leq(a, b) != t.leq(a, b); });
}

}  // namespace uma
