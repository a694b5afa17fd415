#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "kernels_impl.hpp"

namespace uma::simd::detail {
namespace {

inline __m256i load(const std::uint64_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void avx2_or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
    for (; i < words; ++i) dst[i] |= src[i];
}

void avx2_and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
    for (; i < words; ++i) dst[i] &= src[i];
}

void avx2_andnot_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    // _mm256_andnot_si256(a, b) computes ~a & b
    for (; i + 4 <= words; i += 4)
        store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
    for (; i < words; ++i) dst[i] &= ~src[i];
}

// nibble lookup popcount, horizontal sums through sad
std::size_t avx2_popcount(const std::uint64_t* src, std::size_t words) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i v = load(src + i);
        __m256i lo = _mm256_and_si256(v, low_mask);
        __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(src[i]));
    return total;
}

bool avx2_intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4)
        if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
    for (; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool avx2_subset_of(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t i = 0;
    // testc(x, y) is 1 iff (~x & y) == 0
    for (; i + 4 <= words; i += 4)
        if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
    for (; i < words; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

void avx2_swap_pairs(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    const __m256i even = _mm256_set1_epi64x(static_cast<long long>(kEvenBits));
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i v = load(src + i);
        __m256i up = _mm256_slli_epi64(_mm256_and_si256(v, even), 1);
        __m256i down = _mm256_and_si256(_mm256_srli_epi64(v, 1), even);
        store(dst + i, _mm256_or_si256(up, down));
    }
    for (; i < words; ++i) dst[i] = swap_pairs_word(src[i]);
}

void avx2_min_masked_u32(std::uint32_t* row, const std::uint64_t* mask, std::size_t n,
                         std::uint32_t value) {
    const __m256i lane_bits = _mm256_setr_epi32(1, 2, 4, 8, 16, 32, 64, 128);
    const __m256i v = _mm256_set1_epi32(static_cast<int>(value));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        auto byte = static_cast<int>((mask[i >> 6] >> (i & 63)) & 0xffu);
        if (byte == 0) continue;
        __m256i sel = _mm256_cmpeq_epi32(_mm256_and_si256(_mm256_set1_epi32(byte), lane_bits), lane_bits);
        auto* p = reinterpret_cast<__m256i*>(row + i);
        __m256i cur = _mm256_loadu_si256(p);
        _mm256_storeu_si256(p, _mm256_blendv_epi8(cur, _mm256_min_epu32(cur, v), sel));
    }
    for (; i < n; ++i)
        if ((mask[i >> 6] >> (i & 63)) & 1u) row[i] = std::min(row[i], value);
}

void avx2_scale_add_masked_f64(double* row, const std::uint64_t* mask, std::size_t n, double q,
                               double add) {
    const __m256i lane_bits = _mm256_setr_epi64x(1, 2, 4, 8);
    const __m256d qv = _mm256_set1_pd(q);
    const __m256d addv = _mm256_set1_pd(add);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        auto nibble = static_cast<long long>((mask[i >> 6] >> (i & 63)) & 0xfu);
        __m256i sel = _mm256_cmpeq_epi64(_mm256_and_si256(_mm256_set1_epi64x(nibble), lane_bits), lane_bits);
        __m256d bump = _mm256_and_pd(_mm256_castsi256_pd(sel), addv);
        __m256d cur = _mm256_loadu_pd(row + i);
        _mm256_storeu_pd(row + i, _mm256_add_pd(_mm256_mul_pd(qv, cur), bump));
    }
    for (; i < n; ++i) {
        double bump = ((mask[i >> 6] >> (i & 63)) & 1u) ? add : 0.0;
        row[i] = q * row[i] + bump;
    }
}

}  // namespace

const KernelTable& avx2_kernels() {
    static const KernelTable table{
        Isa::avx2,
        avx2_or_into,
        avx2_and_into,
        avx2_andnot_into,
        avx2_popcount,
        avx2_intersects,
        avx2_subset_of,
        avx2_swap_pairs,
        avx2_min_masked_u32,
        avx2_scale_add_masked_f64,
    };
    return table;
}

}  // namespace uma::simd::detail
