#include "entriv/kernels/kernels.hpp"

namespace entriv::kernels::scalar {

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src)
{
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] ^= src[i];
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p)
{
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(factor) * src[i]) % p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p)
{
    for (auto& x : dst)
        x = static_cast<std::uint32_t>((static_cast<std::uint64_t>(factor) * x) % p);
}

} // namespace entriv::kernels::scalar
