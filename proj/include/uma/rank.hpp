#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace uma {

// Extended naturals; the maximum value stands for infinity and absorbs addition.
using Rank = std::uint32_t;
inline constexpr Rank kInfiniteRank = std::numeric_limits<Rank>::max();

constexpr bool is_finite(Rank r) { return r != kInfiniteRank; }

constexpr Rank saturating_add(Rank a, Rank b) {
    if (a == kInfiniteRank || b == kInfiniteRank) return kInfiniteRank;
    std::uint64_t s = std::uint64_t{a} + b;
    return s >= kInfiniteRank ? kInfiniteRank : static_cast<Rank>(s);
}

inline std::string format_rank(Rank r) { return is_finite(r) ? std::to_string(r) : "inf"; }

}  // namespace uma
