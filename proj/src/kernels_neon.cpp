#include <arm_neon.h>

#include <bit>

#include "kernels_impl.hpp"

namespace uma::simd::detail {
namespace {

void neon_or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < words; ++i) dst[i] |= src[i];
}

void neon_and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < words; ++i) dst[i] &= src[i];
}

void neon_andnot_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    // vbicq(a, b) computes a & ~b
    for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vbicq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < words; ++i) dst[i] &= ~src[i];
}

std::size_t neon_popcount(const std::uint64_t* src, std::size_t words) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(src + i)));
        total += vaddvq_u8(bytes);
    }
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(src[i]));
    return total;
}

bool neon_intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t both = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if (vgetq_lane_u64(both, 0) | vgetq_lane_u64(both, 1)) return true;
    }
    for (; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool neon_subset_of(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t extra = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if (vgetq_lane_u64(extra, 0) | vgetq_lane_u64(extra, 1)) return false;
    }
    for (; i < words; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

void neon_swap_pairs(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    const uint64x2_t even = vdupq_n_u64(kEvenBits);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t v = vld1q_u64(src + i);
        uint64x2_t up = vshlq_n_u64(vandq_u64(v, even), 1);
        uint64x2_t down = vandq_u64(vshrq_n_u64(v, 1), even);
        vst1q_u64(dst + i, vorrq_u64(up, down));
    }
    for (; i < words; ++i) dst[i] = swap_pairs_word(src[i]);
}

}  // namespace

const KernelTable& neon_kernels() {
    static const KernelTable table{
        Isa::neon,
        neon_or_into,
        neon_and_into,
        neon_andnot_into,
        neon_popcount,
        neon_intersects,
        neon_subset_of,
        neon_swap_pairs,
        scalar_min_masked_u32,
        scalar_scale_add_masked_f64,
    };
    return table;
}

}  // namespace uma::simd::detail
