#pragma once

#include <cstdint>
#include <vector>

#include "uma/rank.hpp"
#include "uma/sigma.hpp"

namespace uma {

// A ranking on the Hamming cube of Sigma, stored densely by cube mask
// (see complete_from_mask). Oracle scale only.
class Ranking {
public:
    // Throws if no value is finite or the table size is not 2^n_pairs.
    Ranking(Sigma sigma, std::vector<Rank> values);

    static Ranking point_mass(const Sigma& sigma, const LiteralSet& u, Rank r);

    const Sigma& sigma() const { return sigma_; }
    Rank at(const LiteralSet& complete) const;
    Rank at_mask(std::uint64_t mask) const { return values_.at(mask); }
    const std::vector<Rank>& values() const { return values_; }

    // minimum over the given complete selections; infinite for an empty family
    Rank min_over(const std::vector<LiteralSet>& family) const;
    Rank global_min() const;
    std::vector<LiteralSet> minima() const;

    friend Ranking min(const Ranking& a, const Ranking& b);

private:
    Sigma sigma_;
    std::vector<Rank> values_;
};

}  // namespace uma
