#include "atkin/kernels/kernels.hpp"

#include <cstddef>

namespace atkin::kernels::scalar {

void mac(std::span<std::uint32_t> acc, std::span<const std::uint32_t> src, std::uint32_t c) {
    const std::size_t len = src.size();
    for (std::size_t i = 0; i < len; ++i) acc[i] += c * src[i];
}

void add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p) {
    const std::size_t len = src.size();
    for (std::size_t i = 0; i < len; ++i) {
        std::uint32_t s = dst[i] + src[i];
        dst[i] = s >= p ? s - p : s;
    }
}

void sub_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p) {
    const std::size_t len = src.size();
    for (std::size_t i = 0; i < len; ++i) {
        dst[i] = dst[i] >= src[i] ? dst[i] - src[i] : dst[i] + p - src[i];
    }
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
    for (auto& x : dst) x = (c * x) % p;
}

void reduce(std::span<std::uint32_t> dst, std::uint32_t p) {
    for (auto& x : dst) x %= p;
}

}  // namespace atkin::kernels::scalar
