#include "atkin/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace atkin {

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    unsigned r = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;  // ascending, monic
    // Discrete log tables for extension fields: exp_[i] = g^i, log_[exp_[i]] = i.
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log;
};

}  // namespace detail

namespace {

using Coeffs = std::vector<std::uint32_t>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of a modulo monic-or-not b over F_p; b nonzero and trimmed.
Coeffs poly_rem(Coeffs a, const Coeffs& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t inv_lead = inv_mod(b.back(), p);
    while (a.size() > db && !a.empty()) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint64_t f = std::uint64_t{a.back()} * inv_lead % p;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = static_cast<std::uint32_t>(
                (a[shift + i] + (p - f) * std::uint64_t{b[i]}) % p);
        }
        trim(a);
    }
    return a;
}

Coeffs digits_of(std::uint32_t v, std::uint32_t p, unsigned len) {
    Coeffs c(len);
    for (unsigned i = 0; i < len; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

bool is_irreducible(const Coeffs& f, std::uint32_t p) {
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    if (deg <= 1) return true;
    // Any reducible f has a monic factor of degree at most deg/2.
    for (unsigned d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Coeffs g = digits_of(static_cast<std::uint32_t>(v), p, d);
            g.push_back(1);
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Product of packed elements by schoolbook multiplication modulo the modulus.
std::uint32_t slow_mul(const detail::FieldData& d, std::uint32_t a, std::uint32_t b) {
    const Coeffs ca = digits_of(a, d.p, d.r);
    const Coeffs cb = digits_of(b, d.p, d.r);
    Coeffs prod(2 * d.r - 1, 0);
    for (unsigned i = 0; i < d.r; ++i)
        for (unsigned j = 0; j < d.r; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % d.p);
    Coeffs rem = poly_rem(prod, d.modulus, d.p);
    std::uint32_t packed = 0;
    for (std::size_t i = rem.size(); i-- > 0;) packed = packed * d.p + rem[i];
    return packed;
}

void build_log_tables(detail::FieldData& d) {
    const std::uint32_t order = d.q - 1;
    for (std::uint32_t g = 2; g < d.q; ++g) {
        std::vector<std::uint32_t> exp(order);
        std::uint32_t x = 1;
        bool primitive = true;
        for (std::uint32_t i = 0; i < order; ++i) {
            exp[i] = x;
            x = slow_mul(d, x, g);
            if (x == 1 && i + 1 < order) {
                primitive = false;
                break;
            }
        }
        if (!primitive) continue;
        d.exp = std::move(exp);
        d.log.assign(d.q, 0);
        for (std::uint32_t i = 0; i < order; ++i) d.log[d.exp[i]] = i;
        return;
    }
    throw std::logic_error("no primitive element found");
}

std::unique_ptr<detail::FieldData> make_field(std::uint32_t p, unsigned r) {
    auto d = std::make_unique<detail::FieldData>();
    d->p = p;
    d->r = r;
    std::uint32_t q = 1;
    for (unsigned i = 0; i < r; ++i) q *= p;
    d->q = q;
    for (std::uint32_t v = 0; v < q; ++v) {
        Coeffs f = digits_of(v, p, r);
        f.push_back(1);
        if (is_irreducible(f, p)) {
            d->modulus = std::move(f);
            break;
        }
    }
    if (r > 1) build_log_tables(*d);
    return d;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

FieldCtx FieldCtx::create(std::uint32_t p, unsigned r_ext, std::uint32_t max_order) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    if (r_ext < 1) throw std::invalid_argument("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r_ext; ++i) {
        q *= p;
        if (q > max_order) {
            throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(r_ext) +
                                        " exceeds bound " + std::to_string(max_order));
        }
    }

    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<detail::FieldData>> registry;
    std::lock_guard lock(mu);
    auto& slot = registry[{p, r_ext}];
    if (!slot) slot = make_field(p, r_ext);
    return FieldCtx(slot.get());
}

FieldCtx FieldCtx::for_order(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    unsigned r = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return create(p, r);
}

std::uint32_t FieldCtx::p() const { return d_->p; }
unsigned FieldCtx::r_ext() const { return d_->r; }
std::uint32_t FieldCtx::q() const { return d_->q; }
std::span<const std::uint32_t> FieldCtx::modulus() const { return d_->modulus; }

void FieldCtx::check(FieldElem a) const {
    if (a.packed() >= d_->q) throw std::invalid_argument("element does not belong to F_" + std::to_string(d_->q));
}

FieldElem FieldCtx::from_int(std::int64_t v) const {
    const std::int64_t p = d_->p;
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return FieldElem{static_cast<std::uint32_t>(r)};
}

FieldElem FieldCtx::from_coords(std::span<const std::uint32_t> coords) const {
    if (coords.size() != d_->r) throw std::invalid_argument("coordinate vector has wrong length");
    std::uint32_t packed = 0;
    for (std::size_t i = coords.size(); i-- > 0;) {
        if (coords[i] >= d_->p) throw std::invalid_argument("coordinate out of range");
        packed = packed * d_->p + coords[i];
    }
    return FieldElem{packed};
}

std::vector<std::uint32_t> FieldCtx::coords(FieldElem a) const {
    check(a);
    return digits_of(a.packed(), d_->p, d_->r);
}

FieldElem FieldCtx::element(std::uint32_t a) const {
    FieldElem e{a};
    check(e);
    return e;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    const std::uint32_t p = d_->p;
    if (d_->r == 1) {
        const std::uint32_t s = a.packed() + b.packed();
        return FieldElem{s >= p ? s - p : s};
    }
    std::uint32_t x = a.packed(), y = b.packed(), out = 0, scale = 1;
    for (unsigned i = 0; i < d_->r; ++i) {
        out += ((x % p + y % p) % p) * scale;
        x /= p;
        y /= p;
        scale *= p;
    }
    return FieldElem{out};
}

FieldElem FieldCtx::neg(FieldElem a) const {
    check(a);
    const std::uint32_t p = d_->p;
    std::uint32_t x = a.packed(), out = 0, scale = 1;
    for (unsigned i = 0; i < d_->r; ++i) {
        const std::uint32_t c = x % p;
        out += (c == 0 ? 0 : p - c) * scale;
        x /= p;
        scale *= p;
    }
    return FieldElem{out};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_zero()) return zero();
    if (d_->r == 1) return FieldElem{static_cast<std::uint32_t>(std::uint64_t{a.packed()} * b.packed() % d_->p)};
    const std::uint32_t order = d_->q - 1;
    const std::uint32_t e = (d_->log[a.packed()] + d_->log[b.packed()]) % order;
    return FieldElem{d_->exp[e]};
}

FieldElem FieldCtx::inv(FieldElem a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("inverse of zero in F_" + std::to_string(d_->q));
    if (d_->r == 1) return FieldElem{inv_mod(a.packed(), d_->p)};
    const std::uint32_t order = d_->q - 1;
    return FieldElem{d_->exp[(order - d_->log[a.packed()]) % order]};
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const {
    FieldElem result = one();
    FieldElem base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::string FieldCtx::to_string(FieldElem a) const {
    check(a);
    if (in_prime_subfield(a)) return std::to_string(a.packed());
    std::ostringstream os;
    os << '(';
    const auto c = coords(a);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
}

std::int64_t FieldCtx::signed_value(FieldElem a) const {
    if (!in_prime_subfield(a)) throw std::invalid_argument("element is not in the prime subfield");
    const std::int64_t v = a.packed();
    const std::int64_t p = d_->p;
    return 2 * v > p ? v - p : v;
}

std::uint32_t lucas_binom(std::uint64_t n, std::uint64_t m, std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("lucas_binom needs a prime modulus");
    if (m > n) return 0;
    std::uint64_t result = 1;
    while (m > 0) {
        const std::uint32_t ni = static_cast<std::uint32_t>(n % p);
        const std::uint32_t mi = static_cast<std::uint32_t>(m % p);
        if (mi > ni) return 0;
        // binom(ni, mi) mod p with ni < p: the factorials involved are units.
        std::uint64_t num = 1, den = 1;
        for (std::uint32_t i = 0; i < mi; ++i) {
            num = num * (ni - i) % p;
            den = den * (i + 1) % p;
        }
        result = result * num % p * inv_mod(static_cast<std::uint32_t>(den), p) % p;
        n /= p;
        m /= p;
    }
    return static_cast<std::uint32_t>(result % p);
}

}  // namespace atkin
