#pragma once

// Exact rationals with 64-bit parts, always in lowest terms with a positive
// denominator. Slopes never need more range than this.

#include <compare>
#include <cstdint>
#include <string>

namespace atkin {

class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend Rational operator/(Rational a, Rational b);

    friend bool operator==(Rational a, Rational b) = default;
    friend std::strong_ordering operator<=>(Rational a, Rational b);

    /// "num/den", or just "num" when the denominator is 1.
    std::string to_string() const;
    /// Inverse of to_string; throws std::invalid_argument on bad input.
    static Rational parse(const std::string& s);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace atkin
