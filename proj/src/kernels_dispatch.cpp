#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace uma::simd {
namespace {

bool cpu_has_avx2() {
#if defined(UMA_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

const KernelTable* detect() {
    const char* forced = std::getenv("UMA_SIMD");
    if (forced != nullptr && std::string(forced) == "scalar") return &scalar_kernels();
#if defined(UMA_HAVE_AVX2_TU)
    if (cpu_has_avx2()) return &detail::avx2_kernels();
#endif
#if defined(UMA_HAVE_NEON_TU)
    return &detail::neon_kernels();
#endif
    return &scalar_kernels();
}

std::atomic<const KernelTable*>& active() {
    static std::atomic<const KernelTable*> table{detect()};
    return table;
}

}  // namespace

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
            return cpu_has_avx2();
        case Isa::neon:
#if defined(UMA_HAVE_NEON_TU)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& kernels_for(Isa isa) {
    if (!isa_supported(isa))
        throw std::runtime_error("instruction set not available: " + std::string(isa_name(isa)));
    switch (isa) {
#if defined(UMA_HAVE_AVX2_TU)
        case Isa::avx2:
            return detail::avx2_kernels();
#endif
#if defined(UMA_HAVE_NEON_TU)
        case Isa::neon:
            return detail::neon_kernels();
#endif
        default:
            return scalar_kernels();
    }
}

const KernelTable& kernels() { return *active().load(std::memory_order_relaxed); }

Isa active_isa() { return kernels().isa; }

void select_isa(Isa isa) { active().store(&kernels_for(isa), std::memory_order_relaxed); }

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
        case Isa::neon:
            return "neon";
    }
    return "unknown";
}

}  // namespace uma::simd
