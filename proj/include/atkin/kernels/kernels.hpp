#pragma once

// Inner loops of polynomial arithmetic over a prime field F_p.
//
// Every routine has a portable scalar reference implementation and, where the
// CPU supports it, a SIMD variant. The variant is chosen once at startup from
// the CPU feature flags; tests force each one in turn and compare outputs.
//
// Values are residues stored in uint32_t lanes. All routines require
// 2 <= p < 2^16 so that a product of two residues fits in 32 bits.

#include <cstdint>
#include <span>
#include <string_view>

namespace atkin::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
    // acc[i] += c * src[i], wrapping 32-bit arithmetic, no reduction.
    void (*mac)(std::span<std::uint32_t> acc, std::span<const std::uint32_t> src, std::uint32_t c);
    // dst[i] = (dst[i] + src[i]) mod p; inputs reduced.
    void (*add_mod)(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p);
    // dst[i] = (dst[i] - src[i]) mod p; inputs reduced.
    void (*sub_mod)(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p);
    // dst[i] = (c * dst[i]) mod p; inputs reduced.
    void (*scale_mod)(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
    // dst[i] = dst[i] mod p for arbitrary 32-bit dst[i].
    void (*reduce)(std::span<std::uint32_t> dst, std::uint32_t p);
};

/// Table for a specific instruction set. Throws std::runtime_error if the
/// variant was not compiled in or the CPU lacks the feature.
const KernelTable& table_for(Isa isa);

bool isa_available(Isa isa);

/// Table currently used by the polynomial layer.
const KernelTable& active();
Isa active_isa();

/// Overrides runtime selection (tests, benchmarking). Not thread safe with
/// respect to concurrent arithmetic; call before starting workers.
void force_isa(Isa isa);

/// Best available variant on this machine.
Isa detect_best_isa();

/// Largest number of consecutive `mac` calls with residue inputs that an
/// accumulator starting below p can absorb before it must be reduced.
std::uint32_t mac_budget(std::uint32_t p);

namespace scalar {
void mac(std::span<std::uint32_t> acc, std::span<const std::uint32_t> src, std::uint32_t c);
void add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p);
void sub_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
void reduce(std::span<std::uint32_t> dst, std::uint32_t p);
}  // namespace scalar

#if defined(ATKIN_BUILD_AVX2)
namespace avx2 {
void mac(std::span<std::uint32_t> acc, std::span<const std::uint32_t> src, std::uint32_t c);
void add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p);
void sub_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
void reduce(std::span<std::uint32_t> dst, std::uint32_t p);
}  // namespace avx2
#endif

}  // namespace atkin::kernels
