#include "entriv/kernels/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define ENTRIV_X86 1
#include <immintrin.h>
#else
#define ENTRIV_X86 0
#endif

namespace entriv::kernels::avx2 {

#if ENTRIV_X86

namespace {

// x mod p for eight lanes with 0 <= x < 2^31. The quotient is estimated in
// double precision and corrected by at most one step either way.
__attribute__((target("avx2"))) inline __m256i mod_lanes(__m256i x, __m256d p_d, __m256d inv_p, __m256i p_i)
{
    const __m128i lo = _mm256_castsi256_si128(x);
    const __m128i hi = _mm256_extracti128_si256(x, 1);
    __m256d xl = _mm256_cvtepi32_pd(lo);
    __m256d xh = _mm256_cvtepi32_pd(hi);
    __m256d ql = _mm256_floor_pd(_mm256_mul_pd(xl, inv_p));
    __m256d qh = _mm256_floor_pd(_mm256_mul_pd(xh, inv_p));
    __m256d rl = _mm256_sub_pd(xl, _mm256_mul_pd(ql, p_d));
    __m256d rh = _mm256_sub_pd(xh, _mm256_mul_pd(qh, p_d));
    __m128i ril = _mm256_cvttpd_epi32(rl);
    __m128i rih = _mm256_cvttpd_epi32(rh);
    __m256i r = _mm256_set_m128i(rih, ril);
    // r in (-p, 2p): fold back into [0, p).
    const __m256i zero = _mm256_setzero_si256();
    __m256i neg = _mm256_cmpgt_epi32(zero, r);
    r = _mm256_add_epi32(r, _mm256_and_si256(neg, p_i));
    __m256i big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(p_i, _mm256_set1_epi32(1)));
    r = _mm256_sub_epi32(r, _mm256_and_si256(big, p_i));
    return r;
}

} // namespace

__attribute__((target("avx2"))) void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src)
{
    std::size_t i = 0;
    const std::size_t n = dst.size();
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i)
        dst[i] ^= src[i];
}

__attribute__((target("avx2"))) void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                                              std::uint32_t factor, std::uint32_t p)
{
    const __m256d p_d = _mm256_set1_pd(static_cast<double>(p));
    const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256i p_i = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i f = _mm256_set1_epi32(static_cast<int>(factor % p));
    std::size_t i = 0;
    const std::size_t n = dst.size();
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
        __m256i x = _mm256_add_epi32(a, _mm256_mullo_epi32(f, b));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), mod_lanes(x, p_d, inv_p, p_i));
    }
    for (; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(factor) * src[i]) % p);
}

__attribute__((target("avx2"))) void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p)
{
    const __m256d p_d = _mm256_set1_pd(static_cast<double>(p));
    const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256i p_i = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i f = _mm256_set1_epi32(static_cast<int>(factor % p));
    std::size_t i = 0;
    const std::size_t n = dst.size();
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i),
                            mod_lanes(_mm256_mullo_epi32(f, a), p_d, inv_p, p_i));
    }
    for (; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(factor) * dst[i]) % p);
}

#else

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) { scalar::xor_words(dst, src); }
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p)
{
    scalar::axpy_mod(dst, src, factor, p);
}
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p)
{
    scalar::scale_mod(dst, factor, p);
}

#endif

} // namespace entriv::kernels::avx2
