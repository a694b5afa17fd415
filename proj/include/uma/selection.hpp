#pragma once

#include <cstddef>
#include <cstdint>

#include "uma/bitset.hpp"
#include "uma/sigma.hpp"

namespace uma {

bool is_star_selection(const Sigma& sigma, const LiteralSet& s);
bool is_complete(const Sigma& sigma, const LiteralSet& s);

// (v \ S) u S*. Throws std::invalid_argument unless S is a subset of v.
LiteralSet flip(const LiteralSet& v, const LiteralSet& s);

// |u \ w| for complete selections over the same Sigma
std::size_t hamming_distance(const LiteralSet& u, const LiteralSet& w);

// Hamming-cube coordinates: bit i of mask set means the positive literal of pair i.
LiteralSet complete_from_mask(const Sigma& sigma, std::uint64_t mask);
std::uint64_t mask_of(const Sigma& sigma, const LiteralSet& complete);
std::uint64_t cube_size(const Sigma& sigma);

}  // namespace uma
