#pragma once

// Finite fields F_q = GF(p^r) in a power basis, plus binomial coefficients
// modulo p.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace atkin {

/// Element of F_q. The coordinates c_0..c_{r-1} with respect to the power
/// basis 1, x, ..., x^{r-1} are packed as the integer sum c_i p^i, so the
/// prime subfield is exactly the packed values below p.
class FieldElem {
public:
    constexpr FieldElem() = default;
    constexpr explicit FieldElem(std::uint32_t packed) : packed_(packed) {}

    constexpr std::uint32_t packed() const { return packed_; }
    constexpr bool is_zero() const { return packed_ == 0; }

    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;

private:
    std::uint32_t packed_ = 0;
};

namespace detail {
struct FieldData;
}

/// Handle to an immutable field description. Contexts are interned: creating
/// the same (p, r_ext) twice yields the same handle, and handles stay valid
/// for the lifetime of the process.
class FieldCtx {
public:
    static constexpr std::uint32_t kDefaultMaxOrder = 1u << 16;

    /// Builds GF(p^r_ext) with the lexicographically smallest monic
    /// irreducible modulus (highest non-leading coefficient most significant).
    static FieldCtx create(std::uint32_t p, unsigned r_ext,
                           std::uint32_t max_order = kDefaultMaxOrder);
    /// Splits q into p^r_ext and calls create().
    static FieldCtx for_order(std::uint32_t q);

    std::uint32_t p() const;
    unsigned r_ext() const;
    std::uint32_t q() const;
    bool is_prime_field() const { return r_ext() == 1; }
    /// Monic modulus, ascending coefficients, length r_ext + 1.
    std::span<const std::uint32_t> modulus() const;

    FieldElem zero() const { return FieldElem{0}; }
    FieldElem one() const { return FieldElem{1}; }
    /// Image of an integer in the prime subfield.
    FieldElem from_int(std::int64_t v) const;
    FieldElem from_coords(std::span<const std::uint32_t> coords) const;
    std::vector<std::uint32_t> coords(FieldElem a) const;
    /// The a-th element in packed order, 0 <= a < q.
    FieldElem element(std::uint32_t a) const;
    bool contains(FieldElem a) const { return a.packed() < q(); }
    bool in_prime_subfield(FieldElem a) const { return a.packed() < p(); }

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    FieldElem pow(FieldElem a, std::uint64_t e) const;

    /// Prime-subfield residues render as integers, others as "(c0,c1,...)".
    std::string to_string(FieldElem a) const;
    /// Signed representative in (-p/2, p/2] for prime-subfield elements.
    std::int64_t signed_value(FieldElem a) const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) { return a.d_ == b.d_; }

private:
    explicit FieldCtx(const detail::FieldData* d) : d_(d) {}
    void check(FieldElem a) const;

    const detail::FieldData* d_;
};

bool is_prime(std::uint64_t n);

/// binom(n, m) mod p via base-p digits; 0 when m > n.
std::uint32_t lucas_binom(std::uint64_t n, std::uint64_t m, std::uint32_t p);

}  // namespace atkin
