#include "atkin/poly.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

#include "atkin/kernels/kernels.hpp"

namespace atkin {

namespace {

using Vec = std::vector<std::uint32_t>;
using CSpan = std::span<const std::uint32_t>;

std::atomic<std::size_t> g_karatsuba_threshold{32};

void trim(Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::size_t count_nonzero(CSpan v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; }));
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

void add_into(Vec& out, std::size_t offset, CSpan src, std::uint32_t p) {
    kernels::active().add_mod(std::span(out).subspan(offset, src.size()), src, p);
}

void sub_into(Vec& out, std::size_t offset, CSpan src, std::uint32_t p) {
    kernels::active().sub_mod(std::span(out).subspan(offset, src.size()), src, p);
}

// Product over F_p. The operand with fewer nonzero terms drives the loop, so
// products with monomials or lacunary polynomials cost nnz * length.
Vec mul_schoolbook(CSpan a, CSpan b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    const auto& k = kernels::active();
    CSpan sparse = a, dense = b;
    if (count_nonzero(b) < count_nonzero(a)) std::swap(sparse, dense);
    Vec acc(a.size() + b.size() - 1, 0);
    const std::uint32_t budget = kernels::mac_budget(p);
    std::uint32_t pending = 0;
    for (std::size_t i = 0; i < sparse.size(); ++i) {
        if (sparse[i] == 0) continue;
        k.mac(std::span(acc).subspan(i, dense.size()), dense, sparse[i]);
        if (++pending >= budget) {
            k.reduce(acc, p);
            pending = 0;
        }
    }
    k.reduce(acc, p);
    return acc;
}

Vec mul_prime(CSpan a, CSpan b, std::uint32_t p);

Vec mul_karatsuba(CSpan a, CSpan b, std::uint32_t p) {
    const std::size_t la = a.size(), lb = b.size();
    const std::size_t h = (std::max(la, lb) + 1) / 2;
    Vec out(la + lb - 1, 0);
    if (la <= h || lb <= h) {
        // Only the longer operand is split.
        CSpan lng = la >= lb ? a : b;
        CSpan sht = la >= lb ? b : a;
        const Vec lo = mul_prime(sht, lng.first(h), p);
        const Vec hi = mul_prime(sht, lng.subspan(h), p);
        add_into(out, 0, lo, p);
        add_into(out, h, hi, p);
        return out;
    }
    const CSpan a0 = a.first(h), a1 = a.subspan(h);
    const CSpan b0 = b.first(h), b1 = b.subspan(h);
    const Vec z0 = mul_prime(a0, b0, p);
    const Vec z2 = mul_prime(a1, b1, p);
    Vec sa(a0.begin(), a0.end()), sb(b0.begin(), b0.end());
    add_into(sa, 0, a1, p);
    add_into(sb, 0, b1, p);
    Vec z1 = mul_prime(sa, sb, p);
    sub_into(z1, 0, z0, p);
    sub_into(z1, 0, z2, p);
    add_into(out, 0, z0, p);
    add_into(out, 2 * h, z2, p);
    // z1 may carry zero padding beyond the true product length.
    add_into(out, h, CSpan(z1).first(std::min(z1.size(), out.size() - h)), p);
    return out;
}

Vec mul_prime(CSpan a, CSpan b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    const std::size_t threshold = g_karatsuba_threshold.load(std::memory_order_relaxed);
    const bool dense = 2 * count_nonzero(a) >= a.size() && 2 * count_nonzero(b) >= b.size();
    if (dense && std::min(a.size(), b.size()) >= threshold && threshold > 1) {
        return mul_karatsuba(a, b, p);
    }
    return mul_schoolbook(a, b, p);
}

std::pair<Vec, Vec> divrem_prime(CSpan a, CSpan b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {Vec{}, Vec(a.begin(), a.end())};
    const std::uint32_t inv_lead = inv_mod(b.back(), p);
    const auto& k = kernels::active();

    if (count_nonzero(b) == 1) {
        // b = c t^db: shift and scale.
        Vec quot(a.begin() + static_cast<std::ptrdiff_t>(db), a.end());
        k.scale_mod(quot, inv_lead, p);
        Vec rem(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(db));
        trim(rem);
        return {std::move(quot), std::move(rem)};
    }

    Vec acc(a.begin(), a.end());
    Vec quot(a.size() - db, 0);
    const std::uint32_t budget = kernels::mac_budget(p);
    std::uint32_t pending = 0;
    for (std::size_t i = a.size(); i-- > db;) {
        const std::uint32_t c = acc[i] % p;
        if (c == 0) continue;
        const std::uint32_t qc = static_cast<std::uint32_t>(std::uint64_t{c} * inv_lead % p);
        quot[i - db] = qc;
        k.mac(std::span(acc).subspan(i - db, b.size()), b, p - qc);
        if (++pending >= budget) {
            k.reduce(std::span(acc).first(i), p);
            pending = 0;
        }
    }
    acc.resize(db);
    k.reduce(acc, p);
    trim(acc);
    return {std::move(quot), std::move(acc)};
}

}  // namespace

std::uint64_t TValuation::value() const {
    if (infinite_) throw std::logic_error("valuation of zero is infinite");
    return value_;
}

TValuation operator+(TValuation a, TValuation b) {
    if (a.infinite_ || b.infinite_) return TValuation::infinity();
    return TValuation::finite(a.value_ + b.value_);
}

std::strong_ordering operator<=>(TValuation a, TValuation b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
}

void set_karatsuba_threshold(std::size_t n) { g_karatsuba_threshold.store(n, std::memory_order_relaxed); }
std::size_t karatsuba_threshold() { return g_karatsuba_threshold.load(std::memory_order_relaxed); }

Poly::Poly(FieldCtx ctx, std::vector<FieldElem> coeffs) : ctx_(ctx) {
    c_.reserve(coeffs.size());
    for (FieldElem e : coeffs) {
        if (!ctx_.contains(e)) throw std::invalid_argument("coefficient outside the field");
        c_.push_back(e.packed());
    }
    normalize();
}

Poly::Poly(FieldCtx ctx, std::vector<std::uint32_t> packed, Raw) : ctx_(ctx), c_(std::move(packed)) { normalize(); }

Poly Poly::constant(FieldCtx ctx, FieldElem c) { return Poly(ctx, std::vector<FieldElem>{c}); }

Poly Poly::monomial(FieldCtx ctx, FieldElem c, std::size_t exponent) {
    if (!ctx.contains(c)) throw std::invalid_argument("coefficient outside the field");
    if (c.is_zero()) return Poly(ctx);
    std::vector<std::uint32_t> v(exponent + 1, 0);
    v[exponent] = c.packed();
    return Poly(ctx, std::move(v), Raw{});
}

Poly Poly::from_ints(FieldCtx ctx, std::initializer_list<std::int64_t> coeffs) {
    return from_ints(ctx, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

Poly Poly::from_ints(FieldCtx ctx, std::span<const std::int64_t> coeffs) {
    std::vector<std::uint32_t> v;
    v.reserve(coeffs.size());
    for (auto x : coeffs) v.push_back(ctx.from_int(x).packed());
    return Poly(ctx, std::move(v), Raw{});
}

void Poly::normalize() { trim(c_); }

void Poly::require_same_ctx(const Poly& o) const {
    if (!(ctx_ == o.ctx_)) throw std::invalid_argument("polynomials over different fields");
}

std::size_t Poly::nonzero_terms() const { return count_nonzero(c_); }

bool Poly::is_monomial() const { return !c_.empty() && nonzero_terms() == 1; }

bool Poly::in_prime_subfield() const {
    if (ctx_.is_prime_field()) return true;
    const std::uint32_t p = ctx_.p();
    return std::all_of(c_.begin(), c_.end(), [p](std::uint32_t x) { return x < p; });
}

TValuation Poly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return TValuation::finite(i);
    return TValuation::infinity();
}

Poly Poly::operator-() const {
    Poly out(ctx_);
    out.c_.reserve(c_.size());
    for (auto x : c_) out.c_.push_back(ctx_.neg(FieldElem{x}).packed());
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_ctx(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    if (in_prime_subfield() && o.in_prime_subfield()) {
        add_into(c_, 0, o.c_, ctx_.p());
    } else {
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] = ctx_.add(FieldElem{c_[i]}, FieldElem{o.c_[i]}).packed();
    }
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_ctx(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    if (in_prime_subfield() && o.in_prime_subfield()) {
        sub_into(c_, 0, o.c_, ctx_.p());
    } else {
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] = ctx_.sub(FieldElem{c_[i]}, FieldElem{o.c_[i]}).packed();
    }
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_ctx(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
    if (a.in_prime_subfield() && b.in_prime_subfield()) {
        return Poly(a.ctx_, mul_prime(a.c_, b.c_, a.ctx_.p()), Poly::Raw{});
    }
    const FieldCtx& f = a.ctx_;
    std::vector<std::uint32_t> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            const FieldElem prod = f.mul(FieldElem{a.c_[i]}, FieldElem{b.c_[j]});
            out[i + j] = f.add(FieldElem{out[i + j]}, prod).packed();
        }
    }
    return Poly(f, std::move(out), Poly::Raw{});
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(FieldElem c) const {
    if (c.is_zero()) return Poly(ctx_);
    if (ctx_.in_prime_subfield(c) && in_prime_subfield()) {
        Vec v = c_;
        kernels::active().scale_mod(v, c.packed(), ctx_.p());
        return Poly(ctx_, std::move(v), Raw{});
    }
    Vec v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = ctx_.mul(FieldElem{c_[i]}, c).packed();
    return Poly(ctx_, std::move(v), Raw{});
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Vec v(k, 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(ctx_, std::move(v), Raw{});
}

Poly Poly::monic() const {
    if (is_zero() || lead() == ctx_.one()) return *this;
    return scaled(ctx_.inv(lead()));
}

FieldElem Poly::evaluate(FieldElem x) const {
    FieldElem acc = ctx_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = ctx_.add(ctx_.mul(acc, x), FieldElem{c_[i]});
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << ctx_.to_string(FieldElem{c_[i]});
        if (i == 1) os << "*t";
        if (i > 1) os << "*t^" << i;
    }
    return os.str();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    a.require_same_ctx(b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const FieldCtx& f = a.ctx_;
    if (a.in_prime_subfield() && b.in_prime_subfield()) {
        auto [q, r] = divrem_prime(a.c_, b.c_, f.p());
        return {Poly(f, std::move(q), Poly::Raw{}), Poly(f, std::move(r), Poly::Raw{})};
    }
    const std::size_t db = b.c_.size() - 1;
    if (a.c_.size() <= db) return {Poly(f), a};
    std::vector<std::uint32_t> rem = a.c_;
    std::vector<std::uint32_t> quot(a.c_.size() - db, 0);
    const FieldElem inv_lead = f.inv(b.lead());
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        const FieldElem qc = f.mul(FieldElem{rem[i]}, inv_lead);
        quot[i - db] = qc.packed();
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i - db + j] = f.sub(FieldElem{rem[i - db + j]}, f.mul(qc, FieldElem{b.c_[j]})).packed();
        }
    }
    rem.resize(db);
    return {Poly(f, std::move(quot), Poly::Raw{}), Poly(f, std::move(rem), Poly::Raw{})};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly derivative(const Poly& a) {
    const FieldCtx& f = a.ctx_;
    if (a.c_.size() <= 1) return Poly(f);
    std::vector<std::uint32_t> v(a.c_.size() - 1);
    for (std::size_t i = 1; i < a.c_.size(); ++i) {
        v[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i % f.p())), FieldElem{a.c_[i]}).packed();
    }
    return Poly(f, std::move(v), Poly::Raw{});
}

}  // namespace atkin
