#include "uma/ranking.hpp"

#include <algorithm>
#include <stdexcept>

#include "uma/selection.hpp"

namespace uma {

Ranking::Ranking(Sigma sigma, std::vector<Rank> values) : sigma_(std::move(sigma)), values_(std::move(values)) {
    if (values_.size() != cube_size(sigma_)) throw std::invalid_argument("ranking table has the wrong size");
    if (std::none_of(values_.begin(), values_.end(), is_finite))
        throw std::invalid_argument("a ranking needs at least one finite value");
}

Ranking Ranking::point_mass(const Sigma& sigma, const LiteralSet& u, Rank r) {
    if (!is_finite(r)) throw std::invalid_argument("point mass rank must be finite");
    if (!is_complete(sigma, u)) throw std::invalid_argument("point mass needs a complete selection");
    std::vector<Rank> values(cube_size(sigma), kInfiniteRank);
    values[mask_of(sigma, u)] = r;
    return Ranking(sigma, std::move(values));
}

Rank Ranking::at(const LiteralSet& complete) const { return values_.at(mask_of(sigma_, complete)); }

Rank Ranking::min_over(const std::vector<LiteralSet>& family) const {
    Rank best = kInfiniteRank;
    for (const auto& u : family) best = std::min(best, at(u));
    return best;
}

Rank Ranking::global_min() const { return *std::min_element(values_.begin(), values_.end()); }

std::vector<LiteralSet> Ranking::minima() const {
    Rank m = global_min();
    std::vector<LiteralSet> out;
    for (std::uint64_t mask = 0; mask < values_.size(); ++mask)
        if (values_[mask] == m) out.push_back(complete_from_mask(sigma_, mask));
    return out;
}

Ranking min(const Ranking& a, const Ranking& b) {
    if (!(a.sigma_ == b.sigma_)) throw std::invalid_argument("rankings over different alphabets");
    std::vector<Rank> v(a.values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(a.values_[i], b.values_[i]);
    return Ranking(a.sigma_, std::move(v));
}

}  // namespace uma
