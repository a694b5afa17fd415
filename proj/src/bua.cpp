#include "uma/bua.hpp"

#include <stdexcept>

#include "uma/propagation.hpp"

namespace uma {

Sigma delayed_extend(const Sigma& base) {
    std::vector<std::string> names = base.query_names();
    for (const auto& n : base.query_names()) names.push_back("#" + n);
    return Sigma(std::move(names));
}

LiteralSet extend_observation(const Sigma& extended, const LiteralSet& raw, const LiteralSet& previous_raw) {
    const std::size_t n = extended.n_pairs() / 2;
    if (raw.size() != 2 * n + 2 || previous_raw.size() != raw.size())
        throw std::invalid_argument("extend_observation: raw selection does not fit the base alphabet");
    LiteralSet out = extended.empty_set();
    raw.for_each([&](Literal a) { out.set(a); });
    for (std::size_t i = 0; i < n; ++i) {
        if (previous_raw.test(extended.positive(i))) out.set(extended.positive(n + i));
        if (previous_raw.test(extended.negative(i))) out.set(extended.negative(n + i));
    }
    return out;
}

LiteralSet shift_to_delayed(const Sigma& extended, const LiteralSet& s) {
    const std::size_t n = extended.n_pairs() / 2;
    LiteralSet out = extended.empty_set();
    out.set(kTrue);
    if (s.test(kFalse)) out.set(kFalse);
    for (std::size_t i = 0; i < n; ++i) {
        if (s.test(extended.positive(i))) out.set(extended.positive(n + i));
        if (s.test(extended.negative(i))) out.set(extended.negative(n + i));
    }
    return out;
}

BuaAgent::BuaAgent(const Sigma& extended, SnapshotKind kind, double q, double tau, Rank delta)
    : sigma_(extended),
      acted_(Snapshot::make(extended, kind, q, tau, delta)),
      rested_(Snapshot::make(extended, kind, q, tau, delta)) {
    if (extended.n_pairs() % 2 != 0) throw std::invalid_argument("BuaAgent: alphabet is not delay-extended");
}

const Pcr& BuaAgent::derived(bool acted) {
    auto& slot = cache_[acted ? 1 : 0];
    if (!slot) {
        slot = snapshot(acted).derived_pcr();
        slot->freeze();
    }
    return *slot;
}

BuaAgent::Branch BuaAgent::branch(bool acted, const LiteralSet& observation) {
    const Pcr& g = derived(acted);
    Branch b;
    b.current = coherent_projection(g, observation);
    b.prediction = coherent_projection(g, shift_to_delayed(sigma_, b.current));
    b.minset = snapshot(acted).minset();
    b.divergence = (b.minset - b.prediction).count();
    return b;
}

BuaAgent::Assessment BuaAgent::assess(const LiteralSet& observation) {
    return Assessment{branch(true, observation), branch(false, observation)};
}

bool BuaAgent::decide(const LiteralSet& observation, Rng& rng) {
    auto a = assess(observation);
    if (a.acted.divergence != a.rested.divergence) return a.acted.divergence < a.rested.divergence;
    return std::bernoulli_distribution(0.5)(rng);
}

void BuaAgent::learn(bool acted, const LiteralSet& observation, double value) {
    if (snapshot(acted).update(observation, value)) cache_[acted ? 1 : 0].reset();
}

Move arbitrate(bool right_wants, bool left_wants, Rng& rng) {
    if (right_wants && left_wants) return std::bernoulli_distribution(0.5)(rng) ? Move::right : Move::left;
    if (right_wants) return Move::right;
    if (left_wants) return Move::left;
    return Move::stay;
}

}  // namespace uma
