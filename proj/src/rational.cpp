#include "atkin/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace atkin {

namespace {

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

Rational make(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b != 0) {
        const __int128 r = a % b;
        a = b;
        b = r;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(const std::string& s, std::size_t begin, std::size_t end) {
    std::int64_t v = 0;
    const char* first = s.data() + begin;
    const char* last = s.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) throw std::invalid_argument("bad rational: '" + s + "'");
    return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational operator+(Rational a, Rational b) {
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(Rational a, Rational b) { return a + Rational(-b.num_, b.den_); }

Rational operator*(Rational a, Rational b) {
    return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(Rational a, Rational b) {
    return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(Rational a, Rational b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s, 0, s.size()));
    const std::int64_t den = parse_int(s, slash + 1, s.size());
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(parse_int(s, 0, slash), den);
}

}  // namespace atkin
