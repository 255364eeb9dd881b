#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops of the exact linear algebra. Each kernel has a
// scalar reference implementation and an AVX2 variant; the variant is chosen
// once at runtime from CPUID and can be pinned with ENTRIV_FORCE_SCALAR=1.
namespace entriv::kernels {

enum class Isa { Scalar, Avx2 };

Isa active_isa();
// Overrides the runtime choice; requesting Avx2 on a CPU without it throws.
void set_isa(Isa isa);
bool cpu_has_avx2();
std::string_view isa_name(Isa isa);

// Largest prime accepted by the mod-p kernels: p*p + p must fit in int32.
inline constexpr std::uint32_t kMaxKernelPrime = 46337;

// dst[i] ^= src[i]
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
// dst[i] = (dst[i] + factor * src[i]) mod p, all entries already reduced.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);
// dst[i] = (factor * dst[i]) mod p
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p);

namespace scalar {
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p);
} // namespace scalar

namespace avx2 {
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p);
} // namespace avx2

} // namespace entriv::kernels
