#include "atkin/xpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace atkin {

XPoly::XPoly(FieldCtx ctx, std::vector<Poly> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!(c.ctx() == ctx_)) throw std::invalid_argument("XPoly coefficient over a different field");
    normalize();
}

XPoly XPoly::constant(const Poly& c) { return XPoly(c.ctx(), {c}); }

XPoly XPoly::monomial(const Poly& c, std::size_t e) {
    std::vector<Poly> v(e + 1, Poly(c.ctx()));
    v[e] = c;
    return XPoly(c.ctx(), std::move(v));
}

void XPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly XPoly::lambda(std::size_t i) const {
    if (c_.empty() || i >= c_.size()) return Poly(ctx_);
    return c_[c_.size() - 1 - i];
}

std::size_t XPoly::trailing_x_power() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    return k;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Poly(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Poly(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly(a.ctx_);
    std::vector<Poly> out(a.c_.size() + b.c_.size() - 1, Poly(a.ctx_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return XPoly(a.ctx_, std::move(out));
}

XPoly XPoly::scaled(const Poly& c) const {
    std::vector<Poly> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x * c);
    return XPoly(ctx_, std::move(v));
}

std::string XPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool bare = i > 0 && c_[i].is_one();
        if (!bare) os << '(' << c_[i].to_string() << ')';
        if (i > 0) {
            if (!bare) os << '*';
            os << 'X';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

XPoly derivative_x(const XPoly& f) {
    const FieldCtx& ctx = f.ctx();
    if (f.degree() <= 0) return XPoly(ctx);
    std::vector<Poly> v;
    v.reserve(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        v.push_back(f.coeffs()[i].scaled(ctx.from_int(static_cast<std::int64_t>(i % ctx.p()))));
    }
    return XPoly(ctx, std::move(v));
}

Poly content(const XPoly& f) {
    Poly g(f.ctx());
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

XPoly primitive_part(const XPoly& f) {
    if (f.is_zero()) return f;
    const Poly g = content(f);
    if (g.is_one()) return f;
    std::vector<Poly> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.push_back(exact_div(c, g));
    return XPoly(f.ctx(), std::move(v));
}

XPoly pseudo_rem(const XPoly& a, const XPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    XPoly r = a;
    const Poly& lb = b.lead();
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
        const XPoly sub = XPoly::monomial(r.lead(), shift) * b;
        r = r.scaled(lb) - sub;
    }
    return r;
}

namespace {

XPoly normalize_gcd(const XPoly& g) {
    XPoly h = primitive_part(g);
    const Poly& lc = h.lead();
    return h.scaled(Poly::constant(h.ctx(), h.ctx().inv(lc.lead())));
}

}  // namespace

XPoly gcd_x(const XPoly& a, const XPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (b.is_zero()) return normalize_gcd(a);
    if (a.is_zero()) return normalize_gcd(b);
    XPoly x = primitive_part(a), y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        XPoly r = pseudo_rem(x, y);
        x = std::move(y);
        y = r.is_zero() ? r : primitive_part(r);
    }
    return normalize_gcd(x);
}

XPoly exact_div_x(const XPoly& a, const XPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (!b.lead().is_constant()) throw std::domain_error("divisor must have a constant leading coefficient");
    const FieldCtx& ctx = a.ctx();
    const FieldElem inv_lead = ctx.inv(b.lead().lead());
    XPoly r = a;
    const int db = b.degree();
    if (r.degree() < db) {
        if (r.is_zero()) return r;
        throw std::domain_error("inexact division in F_q[t][X]");
    }
    std::vector<Poly> quot(static_cast<std::size_t>(r.degree() - db + 1), Poly(ctx));
    while (!r.is_zero() && r.degree() >= db) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
        const Poly qc = r.lead().scaled(inv_lead);
        quot[shift] = qc;
        r -= XPoly::monomial(qc, shift) * b;
    }
    if (!r.is_zero()) throw std::domain_error("inexact division in F_q[t][X]");
    return XPoly(ctx, std::move(quot));
}

XPoly lcm_monic(const XPoly& a, const XPoly& b) {
    if (!a.is_monic() || !b.is_monic()) throw std::invalid_argument("lcm_monic expects monic inputs");
    const XPoly g = gcd_x(a, b);
    if (!g.lead().is_constant()) throw std::domain_error("gcd of monic polynomials is not monic up to a unit");
    return a * exact_div_x(b, g);
}

bool is_separable(const XPoly& f) {
    if (f.is_zero()) throw std::domain_error("separability of the zero polynomial");
    if (f.degree() == 0) return true;
    const XPoly d = derivative_x(f);
    if (d.is_zero()) return false;
    return gcd_x(f, d).degree() == 0;
}

}  // namespace atkin
