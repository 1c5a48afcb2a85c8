#include "atkin/kernels/kernels.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>

namespace atkin::kernels {

namespace {

constexpr KernelTable kScalar{scalar::mac, scalar::add_mod, scalar::sub_mod, scalar::scale_mod,
                              scalar::reduce};

#if defined(ATKIN_BUILD_AVX2)
constexpr KernelTable kAvx2{avx2::mac, avx2::add_mod, avx2::sub_mod, avx2::scale_mod,
                            avx2::reduce};
#endif

bool cpu_has_avx2() {
#if defined(ATKIN_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

struct Selection {
    std::atomic<Isa> isa;
    std::atomic<const KernelTable*> table;
};

Selection& selected() {
    static Selection sel{detect_best_isa(), &table_for(detect_best_isa())};
    return sel;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2: return cpu_has_avx2();
    }
    return false;
}

Isa detect_best_isa() { return cpu_has_avx2() ? Isa::avx2 : Isa::scalar; }

const KernelTable& table_for(Isa isa) {
    if (!isa_available(isa)) {
        throw std::runtime_error("kernel variant not available: " + std::string(isa_name(isa)));
    }
#if defined(ATKIN_BUILD_AVX2)
    if (isa == Isa::avx2) return kAvx2;
#endif
    return kScalar;
}

const KernelTable& active() { return *selected().table.load(std::memory_order_relaxed); }

Isa active_isa() { return selected().isa.load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    const KernelTable& t = table_for(isa);
    selected().isa.store(isa, std::memory_order_relaxed);
    selected().table.store(&t, std::memory_order_relaxed);
}

std::uint32_t mac_budget(std::uint32_t p) {
    const std::uint64_t sq = std::uint64_t{p - 1} * (p - 1);
    if (sq == 0) return std::numeric_limits<std::uint32_t>::max();
    const std::uint64_t room = std::numeric_limits<std::uint32_t>::max() - (p - 1);
    return static_cast<std::uint32_t>(room / sq);
}

}  // namespace atkin::kernels
