#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Word-level kernels behind every bit-vector and weight-row loop.
// Each instruction set provides the same table; the scalar table is the
// reference the vector variants are tested against.

namespace uma::simd {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
    Isa isa;
    // dst |= src, dst &= src, dst &= ~src
    void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    void (*andnot_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    std::size_t (*popcount)(const std::uint64_t* src, std::size_t words);
    bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
    // a is a subset of b
    bool (*subset_of)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
    // exchanges bits 2k and 2k+1 in every word (literal complementation)
    void (*swap_pairs)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    // row[i] = min(row[i], value) where bit i of mask is set
    void (*min_masked_u32)(std::uint32_t* row, const std::uint64_t* mask, std::size_t n,
                           std::uint32_t value);
    // row[i] = q * row[i] + (bit i of mask ? add : 0)
    void (*scale_add_masked_f64)(double* row, const std::uint64_t* mask, std::size_t n, double q,
                                 double add);
};

const KernelTable& scalar_kernels();

bool isa_supported(Isa isa);
// Throws std::runtime_error when the ISA is not compiled in or not supported by the CPU.
const KernelTable& kernels_for(Isa isa);

// Active table. Chosen once from CPU features; UMA_SIMD=scalar in the
// environment forces the reference kernels.
const KernelTable& kernels();
Isa active_isa();
void select_isa(Isa isa);

std::string_view isa_name(Isa isa);

}  // namespace uma::simd
