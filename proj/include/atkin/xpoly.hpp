#pragma once

// Polynomials in an outer variable X with coefficients in F_q[t], viewed as
// elements of F_q(t)[X] where that matters (gcd, separability).

#include <cstddef>
#include <string>
#include <vector>

#include "atkin/poly.hpp"

namespace atkin {

class XPoly {
public:
    explicit XPoly(FieldCtx ctx) : ctx_(ctx) {}
    /// coeffs[i] is the coefficient of X^i.
    XPoly(FieldCtx ctx, std::vector<Poly> coeffs);

    static XPoly constant(const Poly& c);
    /// X^e with coefficient c.
    static XPoly monomial(const Poly& c, std::size_t e);

    const FieldCtx& ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    /// Coefficient of X^i (zero beyond the degree).
    Poly coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Poly(ctx_); }
    const Poly& lead() const { return c_.back(); }
    /// Coefficient of X^{deg - i}, the lambda_i of P(X) = X^n + lambda_1 X^{n-1} + ...
    Poly lambda(std::size_t i) const;
    /// Number of leading zero coefficients from X^0 upward.
    std::size_t trailing_x_power() const;
    const std::vector<Poly>& coeffs() const { return c_; }

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly scaled(const Poly& c) const;

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

    std::string to_string() const;

private:
    void normalize();

    FieldCtx ctx_;
    std::vector<Poly> c_;
};

/// d/dX, coefficients multiplied by exponents reduced mod p.
XPoly derivative_x(const XPoly& f);
/// Monic gcd in F_q[t] of all coefficients (zero for f = 0).
Poly content(const XPoly& f);
XPoly primitive_part(const XPoly& f);
/// Pseudo-remainder: lead(b)^e * a mod b for a suitable e >= 0.
XPoly pseudo_rem(const XPoly& a, const XPoly& b);
/// gcd in F_q(t)[X], returned primitive in F_q[t][X] with monic leading
/// t-coefficient. gcd(f, 0) is the normalized f.
XPoly gcd_x(const XPoly& a, const XPoly& b);
/// Quotient by a divisor whose leading coefficient is a nonzero constant;
/// throws std::domain_error if the division is not exact.
XPoly exact_div_x(const XPoly& a, const XPoly& b);
/// Monic lcm of two polynomials that are monic in X.
XPoly lcm_monic(const XPoly& a, const XPoly& b);
/// gcd_X(f, df/dX) is constant over F_q(t); false when df/dX = 0 and
/// deg f > 0. Throws std::domain_error on zero input.
bool is_separable(const XPoly& f);

}  // namespace atkin
