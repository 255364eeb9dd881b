#include "entriv/error.hpp"
#include "entriv/kernels/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace entriv::kernels {

namespace {

Isa detect()
{
    if (const char* force = std::getenv("ENTRIV_FORCE_SCALAR"); force && std::string(force) == "1")
        return Isa::Scalar;
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current()
{
    static std::atomic<Isa> isa{detect()};
    return isa;
}

} // namespace

bool cpu_has_avx2()
{
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa)
{
    if (isa == Isa::Avx2 && !cpu_has_avx2())
        throw InvalidInput("AVX2 requested but not supported by this CPU");
    current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src)
{
    if (active_isa() == Isa::Avx2)
        avx2::xor_words(dst, src);
    else
        scalar::xor_words(dst, src);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p)
{
    if (active_isa() == Isa::Avx2 && p <= kMaxKernelPrime)
        avx2::axpy_mod(dst, src, factor, p);
    else
        scalar::axpy_mod(dst, src, factor, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p)
{
    if (active_isa() == Isa::Avx2 && p <= kMaxKernelPrime)
        avx2::scale_mod(dst, factor, p);
    else
        scalar::scale_mod(dst, factor, p);
}

} // namespace entriv::kernels
