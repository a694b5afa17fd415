#include "uma/kernels.hpp"

#include <algorithm>
#include <bit>

#include "kernels_impl.hpp"

namespace uma::simd::detail {

void scalar_or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void scalar_and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

void scalar_andnot_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] &= ~src[i];
}

std::size_t scalar_popcount(const std::uint64_t* src, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(src[i]));
    return total;
}

bool scalar_intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool scalar_subset_of(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

void scalar_swap_pairs(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] = swap_pairs_word(src[i]);
}

void scalar_min_masked_u32(std::uint32_t* row, const std::uint64_t* mask, std::size_t n,
                           std::uint32_t value) {
    for (std::size_t i = 0; i < n; ++i)
        if ((mask[i >> 6] >> (i & 63)) & 1u) row[i] = std::min(row[i], value);
}

void scalar_scale_add_masked_f64(double* row, const std::uint64_t* mask, std::size_t n, double q,
                                 double add) {
    for (std::size_t i = 0; i < n; ++i) {
        double bump = ((mask[i >> 6] >> (i & 63)) & 1u) ? add : 0.0;
        row[i] = q * row[i] + bump;
    }
}

}  // namespace uma::simd::detail

namespace uma::simd {

const KernelTable& scalar_kernels() {
    static const KernelTable table{
        Isa::scalar,
        detail::scalar_or_into,
        detail::scalar_and_into,
        detail::scalar_andnot_into,
        detail::scalar_popcount,
        detail::scalar_intersects,
        detail::scalar_subset_of,
        detail::scalar_swap_pairs,
        detail::scalar_min_masked_u32,
        detail::scalar_scale_add_masked_f64,
    };
    return table;
}

}  // namespace uma::simd
