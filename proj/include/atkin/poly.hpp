#pragma once

// Dense univariate polynomials over F_q in the variable t.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "atkin/field.hpp"

namespace atkin {

/// t-adic valuation: a non-negative integer, or +infinity for the zero
/// polynomial.
class TValuation {
public:
    static TValuation infinity() { return TValuation(); }
    static TValuation finite(std::uint64_t v) { return TValuation(v); }

    bool is_infinite() const { return infinite_; }
    /// Throws std::logic_error when infinite.
    std::uint64_t value() const;

    friend TValuation operator+(TValuation a, TValuation b);
    friend bool operator==(TValuation a, TValuation b) = default;
    friend std::strong_ordering operator<=>(TValuation a, TValuation b);

private:
    TValuation() : infinite_(true) {}
    explicit TValuation(std::uint64_t v) : infinite_(false), value_(v) {}

    bool infinite_;
    std::uint64_t value_ = 0;
};

class Poly {
public:
    explicit Poly(FieldCtx ctx) : ctx_(ctx) {}
    /// Ascending coefficients; trailing zeros are dropped.
    Poly(FieldCtx ctx, std::vector<FieldElem> coeffs);

    static Poly constant(FieldCtx ctx, FieldElem c);
    static Poly monomial(FieldCtx ctx, FieldElem c, std::size_t exponent);
    /// Ascending integer coefficients reduced into the prime subfield.
    static Poly from_ints(FieldCtx ctx, std::initializer_list<std::int64_t> coeffs);
    static Poly from_ints(FieldCtx ctx, std::span<const std::int64_t> coeffs);

    const FieldCtx& ctx() const { return ctx_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::size_t size() const { return c_.size(); }
    std::size_t nonzero_terms() const;
    bool is_monomial() const;

    FieldElem coeff(std::size_t i) const { return i < c_.size() ? FieldElem{c_[i]} : FieldElem{}; }
    FieldElem lead() const { return c_.empty() ? FieldElem{} : FieldElem{c_.back()}; }
    std::span<const std::uint32_t> raw() const { return c_; }
    /// True if every coefficient lies in the prime subfield.
    bool in_prime_subfield() const;

    TValuation valuation() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(FieldElem c) const;
    /// Multiplication by t^k.
    Poly shifted(std::size_t k) const;
    Poly monic() const;
    /// Value at t = x.
    FieldElem evaluate(FieldElem x) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

    /// "c0 + c1*t + c2*t^2 + ..." skipping zero terms; "0" for zero.
    std::string to_string() const;

private:
    struct Raw {};
    Poly(FieldCtx ctx, std::vector<std::uint32_t> packed, Raw);
    void normalize();
    void require_same_ctx(const Poly& o) const;

    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
    friend Poly derivative(const Poly& a);

    FieldCtx ctx_;
    std::vector<std::uint32_t> c_;
};

/// Quotient and remainder with deg(remainder) < deg(b). Throws
/// std::domain_error for b = 0 and std::invalid_argument for mixed fields.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
/// a / b when the remainder is zero; throws std::domain_error otherwise.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd; gcd(a, 0) = monic(a). Throws if both are zero.
Poly gcd(const Poly& a, const Poly& b);
/// d/dt with exponents reduced mod p.
Poly derivative(const Poly& a);

/// Schoolbook/Karatsuba crossover for dense products (operand length).
void set_karatsuba_threshold(std::size_t n);
std::size_t karatsuba_threshold();

}  // namespace atkin
