#include "uma/selection.hpp"

#include <stdexcept>

namespace uma {

bool is_star_selection(const Sigma& sigma, const LiteralSet& s) {
    if (s.size() != sigma.size()) throw std::invalid_argument("selection width does not match Sigma");
    return !s.intersects(starred(s));
}

bool is_complete(const Sigma& sigma, const LiteralSet& s) {
    if (!is_star_selection(sigma, s) || !s.test(kTrue)) return false;
    return s.count() == sigma.n_pairs() + 1;
}

LiteralSet flip(const LiteralSet& v, const LiteralSet& s) {
    if (!s.is_subset_of(v)) throw std::invalid_argument("flip: set is not contained in the vertex");
    LiteralSet out = v - s;
    out |= starred(s);
    return out;
}

std::size_t hamming_distance(const LiteralSet& u, const LiteralSet& w) {
    if (u.size() != w.size()) throw std::invalid_argument("hamming_distance: mismatched Sigma");
    return (u - w).count();
}

LiteralSet complete_from_mask(const Sigma& sigma, std::uint64_t mask) {
    if (sigma.n_pairs() > 63) throw std::invalid_argument("too many pairs for cube coordinates");
    LiteralSet s(sigma.size());
    s.set(kTrue);
    for (std::size_t i = 0; i < sigma.n_pairs(); ++i)
        s.set(((mask >> i) & 1u) ? sigma.positive(i) : sigma.negative(i));
    return s;
}

std::uint64_t mask_of(const Sigma& sigma, const LiteralSet& complete) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < sigma.n_pairs(); ++i)
        if (complete.test(sigma.positive(i))) mask |= std::uint64_t{1} << i;
    return mask;
}

std::uint64_t cube_size(const Sigma& sigma) {
    if (sigma.n_pairs() > 63) throw std::invalid_argument("too many pairs for cube coordinates");
    return std::uint64_t{1} << sigma.n_pairs();
}

}  // namespace uma
