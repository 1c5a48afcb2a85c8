#include "atkin/kernels/kernels.hpp"

#include <immintrin.h>

#include <cstddef>

namespace atkin::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 8;

inline __m256i load(const std::uint32_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(std::uint32_t* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// x mod p for 32-bit x, Barrett with m = floor(2^32 / p). The quotient
// estimate is low by at most one, so one conditional subtraction suffices.
inline __m256i barrett(__m256i x, __m256i m, __m256i pv) {
    const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, m), 32);
    const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), m);
    const __m256i q = _mm256_blend_epi32(even, odd, 0b10101010);
    const __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, pv));
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
}

inline std::uint32_t barrett_factor(std::uint32_t p) {
    return static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
}

}  // namespace

void mac(std::span<std::uint32_t> acc, std::span<const std::uint32_t> src, std::uint32_t c) {
    const std::size_t len = src.size();
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    std::size_t i = 0;
    for (; i + kLanes <= len; i += kLanes) {
        const __m256i prod = _mm256_mullo_epi32(load(src.data() + i), cv);
        store(acc.data() + i, _mm256_add_epi32(load(acc.data() + i), prod));
    }
    for (; i < len; ++i) acc[i] += c * src[i];
}

void add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p) {
    const std::size_t len = src.size();
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + kLanes <= len; i += kLanes) {
        const __m256i s = _mm256_add_epi32(load(dst.data() + i), load(src.data() + i));
        store(dst.data() + i, _mm256_min_epu32(s, _mm256_sub_epi32(s, pv)));
    }
    for (; i < len; ++i) {
        std::uint32_t s = dst[i] + src[i];
        dst[i] = s >= p ? s - p : s;
    }
}

void sub_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p) {
    const std::size_t len = src.size();
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + kLanes <= len; i += kLanes) {
        const __m256i d = _mm256_sub_epi32(load(dst.data() + i), load(src.data() + i));
        store(dst.data() + i, _mm256_min_epu32(d, _mm256_add_epi32(d, pv)));
    }
    for (; i < len; ++i) {
        dst[i] = dst[i] >= src[i] ? dst[i] - src[i] : dst[i] + p - src[i];
    }
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
    const std::size_t len = dst.size();
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i mv = _mm256_set1_epi32(static_cast<int>(barrett_factor(p)));
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    std::size_t i = 0;
    for (; i + kLanes <= len; i += kLanes) {
        const __m256i x = _mm256_mullo_epi32(load(dst.data() + i), cv);
        store(dst.data() + i, barrett(x, mv, pv));
    }
    for (; i < len; ++i) dst[i] = (c * dst[i]) % p;
}

void reduce(std::span<std::uint32_t> dst, std::uint32_t p) {
    const std::size_t len = dst.size();
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i mv = _mm256_set1_epi32(static_cast<int>(barrett_factor(p)));
    std::size_t i = 0;
    for (; i + kLanes <= len; i += kLanes) {
        store(dst.data() + i, barrett(load(dst.data() + i), mv, pv));
    }
    for (; i < len; ++i) dst[i] %= p;
}

}  // namespace atkin::kernels::avx2
