#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "uma/pcr.hpp"

namespace uma {

using Rng = std::mt19937_64;

enum class EnvKind { interval_gps, circle_beacons, interval_random };
enum class Move { stay, right, left };

std::string_view to_string(EnvKind kind);
std::optional<EnvKind> parse_env_kind(std::string_view text);
std::string_view to_string(Move m);

// A finite world of positions with a fixed sensor realization.
class Environment {
public:
    // positions 0..n, sensor a_i (i = 1..n) true iff pos < i
    static Environment interval_gps(std::size_t n);
    // positions Z_n, sensor a_i (i = 0..n-1) true iff circular dist(i, pos) <= radius;
    // radius defaults to 4 at n = 20 and n/5 otherwise
    static Environment circle_beacons(std::size_t n, std::optional<std::size_t> radius = std::nullopt);
    // positions 0..n, sensor a_i true on a random proper nonempty subset A_i
    static Environment interval_random(std::size_t n, std::uint64_t seed);

    EnvKind kind() const { return kind_; }
    std::size_t size() const { return n_; }
    std::size_t positions() const { return is_circle() ? n_ : n_ + 1; }
    std::size_t radius() const { return radius_; }
    bool is_circle() const { return kind_ == EnvKind::circle_beacons; }
    const Sigma& sigma() const { return sigma_; }

    bool sensor(std::size_t i, std::size_t pos) const;
    LiteralSet sense(std::size_t pos) const;
    // every literal's realization: positions where it holds
    std::vector<bool> realization(Literal a) const;

    std::size_t distance(std::size_t p, std::size_t q) const;
    std::size_t diameter() const { return is_circle() ? n_ / 2 : n_; }
    std::size_t apply(std::size_t pos, Move m) const;
    // row-stochastic matrix of the lazy walk
    std::vector<std::vector<double>> lazy_transition() const;

private:
    Environment(EnvKind kind, std::size_t n, Sigma sigma);

    EnvKind kind_;
    std::size_t n_;
    std::size_t radius_ = 0;
    Sigma sigma_;
    std::vector<std::vector<bool>> sets_;  // interval_random only
};

std::size_t iid_step(const Environment& env, Rng& rng);
std::size_t lazy_step(const Environment& env, std::size_t pos, Rng& rng);
Move random_move(Rng& rng);

// ab iff every world containing a contains b
Pcr pcr_from_worlds(const Sigma& sigma, const std::vector<LiteralSet>& worlds);
// ab iff rho(a) is contained in rho(b) over all positions
Pcr ground_truth_pcr(const Environment& env);

}  // namespace uma
