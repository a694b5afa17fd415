#include "uma/environment.hpp"

#include <stdexcept>
#include <string>

namespace uma {

std::string_view to_string(EnvKind kind) {
    switch (kind) {
        case EnvKind::interval_gps:
            return "interval-gps";
        case EnvKind::circle_beacons:
            return "circle-beacons";
        case EnvKind::interval_random:
            return "interval-random";
    }
    return "unknown";
}

std::optional<EnvKind> parse_env_kind(std::string_view text) {
    if (text == "interval-gps") return EnvKind::interval_gps;
    if (text == "circle-beacons") return EnvKind::circle_beacons;
    if (text == "interval-random") return EnvKind::interval_random;
    return std::nullopt;
}

std::string_view to_string(Move m) {
    switch (m) {
        case Move::stay:
            return "stay";
        case Move::right:
            return "rt";
        case Move::left:
            return "lt";
    }
    return "?";
}

namespace {

std::vector<std::string> names(std::size_t first, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back("a" + std::to_string(first + i));
    return out;
}

}  // namespace

Environment::Environment(EnvKind kind, std::size_t n, Sigma sigma) : kind_(kind), n_(n), sigma_(std::move(sigma)) {}

Environment Environment::interval_gps(std::size_t n) {
    if (n == 0) throw std::invalid_argument("interval environment needs N >= 1");
    return Environment(EnvKind::interval_gps, n, Sigma(names(1, n)));
}

Environment Environment::circle_beacons(std::size_t n, std::optional<std::size_t> radius) {
    if (n < 3) throw std::invalid_argument("circle environment needs N >= 3");
    Environment env(EnvKind::circle_beacons, n, Sigma(names(0, n)));
    env.radius_ = radius.value_or(n == 20 ? 4 : n / 5);
    if (2 * env.radius_ + 1 >= n) throw std::invalid_argument("beacon radius covers the whole circle");
    return env;
}

Environment Environment::interval_random(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("interval environment needs N >= 1");
    Environment env(EnvKind::interval_random, n, Sigma(names(1, n)));
    Rng rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> set(n + 1);
        std::size_t members;
        do {
            members = 0;
            for (std::size_t p = 0; p <= n; ++p) {
                set[p] = coin(rng);
                members += set[p];
            }
        } while (members == 0 || members == n + 1);
        env.sets_.push_back(std::move(set));
    }
    return env;
}

bool Environment::sensor(std::size_t i, std::size_t pos) const {
    if (pos >= positions() || i >= n_) throw std::out_of_range("sensor or position out of range");
    switch (kind_) {
        case EnvKind::interval_gps:
            return pos < i + 1;
        case EnvKind::circle_beacons:
            return distance(i, pos) <= radius_;
        case EnvKind::interval_random:
            return sets_[i][pos];
    }
    return false;
}

LiteralSet Environment::sense(std::size_t pos) const {
    LiteralSet s = sigma_.empty_set();
    s.set(kTrue);
    for (std::size_t i = 0; i < n_; ++i) s.set(sensor(i, pos) ? sigma_.positive(i) : sigma_.negative(i));
    return s;
}

std::vector<bool> Environment::realization(Literal a) const {
    std::vector<bool> out(positions());
    for (std::size_t p = 0; p < positions(); ++p) out[p] = sense(p).test(a);
    return out;
}

std::size_t Environment::distance(std::size_t p, std::size_t q) const {
    std::size_t d = p > q ? p - q : q - p;
    if (is_circle()) d = std::min(d, n_ - d);
    return d;
}

std::size_t Environment::apply(std::size_t pos, Move m) const {
    switch (m) {
        case Move::stay:
            return pos;
        case Move::right:
            if (is_circle()) return (pos + 1) % n_;
            return std::min(pos + 1, n_);
        case Move::left:
            if (is_circle()) return (pos + n_ - 1) % n_;
            return pos == 0 ? 0 : pos - 1;
    }
    return pos;
}

std::vector<std::vector<double>> Environment::lazy_transition() const {
    const std::size_t m = positions();
    std::vector<std::vector<double>> t(m, std::vector<double>(m, 0.0));
    for (std::size_t p = 0; p < m; ++p)
        for (Move mv : {Move::stay, Move::right, Move::left}) t[p][apply(p, mv)] += 1.0 / 3.0;
    return t;
}

std::size_t iid_step(const Environment& env, Rng& rng) {
    return std::uniform_int_distribution<std::size_t>(0, env.positions() - 1)(rng);
}

Move random_move(Rng& rng) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0:
            return Move::stay;
        case 1:
            return Move::right;
        default:
            return Move::left;
    }
}

std::size_t lazy_step(const Environment& env, std::size_t pos, Rng& rng) { return env.apply(pos, random_move(rng)); }

Pcr pcr_from_worlds(const Sigma& sigma, const std::vector<LiteralSet>& worlds) {
    Pcr out(sigma);
    for (std::uint32_t a = 0; a < sigma.size(); ++a) {
        LiteralSet common = sigma.all();
        for (const auto& w : worlds)
            if (w.test(Literal{a})) common &= w;
        common.for_each([&](Literal b) {
            if (b.id() != a) out.insert(Literal{a}, b);
        });
    }
    return out;
}

Pcr ground_truth_pcr(const Environment& env) {
    std::vector<LiteralSet> worlds;
    for (std::size_t p = 0; p < env.positions(); ++p) worlds.push_back(env.sense(p));
    return pcr_from_worlds(env.sigma(), worlds);
}

}  // namespace uma
