#pragma once

#include <cstddef>
#include <cstdint>

#include "uma/kernels.hpp"

namespace uma::simd::detail {

inline constexpr std::uint64_t kEvenBits = 0x5555555555555555ULL;

constexpr std::uint64_t swap_pairs_word(std::uint64_t w) {
    return ((w & kEvenBits) << 1) | ((w >> 1) & kEvenBits);
}

void scalar_or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void scalar_and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void scalar_andnot_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
std::size_t scalar_popcount(const std::uint64_t* src, std::size_t words);
bool scalar_intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
bool scalar_subset_of(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
void scalar_swap_pairs(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void scalar_min_masked_u32(std::uint32_t* row, const std::uint64_t* mask, std::size_t n,
                           std::uint32_t value);
void scalar_scale_add_masked_f64(double* row, const std::uint64_t* mask, std::size_t n, double q,
                                 double add);

#if defined(UMA_HAVE_AVX2_TU)
const KernelTable& avx2_kernels();
#endif
#if defined(UMA_HAVE_NEON_TU)
const KernelTable& neon_kernels();
#endif

}  // namespace uma::simd::detail
