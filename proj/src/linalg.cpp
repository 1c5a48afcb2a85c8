#include "atkin/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "atkin/error.hpp"

namespace atkin {

namespace {

Poly one(const FieldCtx& ctx) { return Poly::constant(ctx, ctx.one()); }

// (a * b - c * d) / den, skipping work for zero operands.
Poly cross_update(const Poly& a, const Poly& b, const Poly& c, const Poly& d, const Poly& den) {
    Poly v = (a.is_zero() || b.is_zero()) ? Poly(a.ctx()) : a * b;
    if (!c.is_zero() && !d.is_zero()) v -= c * d;
    if (v.is_zero() || den.is_one()) return v;
    try {
        return exact_div(v, den);
    } catch (const std::domain_error&) {
        throw InternalDefect("fraction-free elimination produced an inexact division");
    }
}

PolyVec unit_vector(const FieldCtx& ctx, std::size_t n, std::size_t i) {
    PolyVec v(n, Poly(ctx));
    v[i] = one(ctx);
    return v;
}

// Primitive, with the first nonzero entry's leading coefficient equal to 1.
PolyVec normalize_vector(PolyVec v) {
    const Poly g = content(v);
    if (g.is_zero()) return v;
    const FieldCtx& ctx = g.ctx();
    FieldElem lead_inv = ctx.one();
    for (const auto& x : v) {
        if (!x.is_zero()) {
            lead_inv = ctx.inv(exact_div(x, g).lead());
            break;
        }
    }
    const Poly scale = Poly::constant(ctx, lead_inv);
    for (auto& x : v) {
        if (x.is_zero()) continue;
        x = g.is_one() ? x.scaled(lead_inv) : exact_div(x, g) * scale;
    }
    return v;
}

}  // namespace

Poly bareiss_det(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const FieldCtx& ctx = m.ctx();
    const std::size_t n = m.rows();
    if (n == 0) return one(ctx);
    PolyMatrix a = m;
    bool negate = false;
    Poly prev = one(ctx);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t i = k + 1;
            while (i < n && a(i, k).is_zero()) ++i;
            if (i == n) return Poly(ctx);
            a.swap_rows(i, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = cross_update(a(k, k), a(i, j), a(i, k), a(k, j), prev);
            }
        }
        prev = a(k, k);
    }
    Poly det = a(n - 1, n - 1);
    return negate ? -det : det;
}

EchelonForm fraction_free_rref(const PolyMatrix& m) {
    const FieldCtx& ctx = m.ctx();
    PolyMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    Poly prev = one(ctx);
    std::size_t pr = 0;
    for (std::size_t col = 0; col < cols && pr < rows; ++col) {
        std::size_t best = rows;
        for (std::size_t i = pr; i < rows; ++i) {
            if (a(i, col).is_zero()) continue;
            if (best == rows || a(i, col).degree() < a(best, col).degree()) best = i;
        }
        if (best == rows) continue;
        a.swap_rows(best, pr);
        const Poly piv = a(pr, col);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            const Poly f = a(i, col);
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == col) continue;
                if (a(i, j).is_zero() && (f.is_zero() || a(pr, j).is_zero())) continue;
                a(i, j) = cross_update(piv, a(i, j), f, a(pr, j), prev);
            }
            a(i, col) = Poly(ctx);
        }
        prev = piv;
        pivots.push_back(col);
        ++pr;
    }
    return {std::move(a), std::move(pivots), std::move(prev)};
}

std::size_t rank(const PolyMatrix& m) { return fraction_free_rref(m).rank(); }

Poly content(std::span<const Poly> v) {
    if (v.empty()) throw std::invalid_argument("content of an empty vector");
    Poly g(v.front().ctx());
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        g = g.is_zero() ? x.monic() : gcd(g, x);
        if (g.is_one()) break;
    }
    return g;
}

SubspaceBasis SubspaceBasis::span(FieldCtx ctx, std::size_t ambient, const std::vector<PolyVec>& vectors) {
    SubspaceBasis s(ctx, ambient);
    if (vectors.empty()) return s;
    const EchelonForm ech = fraction_free_rref(PolyMatrix::from_rows(ctx, ambient, vectors));
    for (std::size_t i = 0; i < ech.rank(); ++i) {
        const auto row = ech.reduced.row(i);
        s.vectors_.push_back(normalize_vector(PolyVec(row.begin(), row.end())));
    }
    return s;
}

PolyMatrix SubspaceBasis::as_columns() const { return PolyMatrix::from_columns(ctx_, ambient_, vectors_); }

bool SubspaceBasis::contains(std::span<const Poly> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector has wrong length");
    std::vector<PolyVec> rows = vectors_;
    rows.emplace_back(v.begin(), v.end());
    return rank(PolyMatrix::from_rows(ctx_, ambient_, rows)) == dim();
}

SubspaceBasis kernel_basis(const PolyMatrix& m) {
    const FieldCtx& ctx = m.ctx();
    const std::size_t n = m.cols();
    const EchelonForm ech = fraction_free_rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<PolyVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        PolyVec v(n, Poly(ctx));
        v[f] = ech.scale;
        for (std::size_t i = 0; i < ech.rank(); ++i) v[ech.pivot_cols[i]] = -ech.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return SubspaceBasis::span(ctx, n, basis);
}

SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspaces live in different ambient spaces");
    const FieldCtx& ctx = a.ctx();
    const std::size_t n = a.ambient();
    if (a.is_zero() || b.is_zero()) return SubspaceBasis(ctx, n);
    std::vector<PolyVec> rows;
    for (const auto& v : a.vectors()) {
        PolyVec r = v;
        r.insert(r.end(), v.begin(), v.end());
        rows.push_back(std::move(r));
    }
    for (const auto& v : b.vectors()) {
        PolyVec r = v;
        r.resize(2 * n, Poly(ctx));
        rows.push_back(std::move(r));
    }
    const EchelonForm ech = fraction_free_rref(PolyMatrix::from_rows(ctx, 2 * n, rows));
    std::vector<PolyVec> common;
    for (std::size_t i = 0; i < ech.rank(); ++i) {
        if (ech.pivot_cols[i] < n) continue;
        const auto row = ech.reduced.row(i);
        common.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
    }
    return SubspaceBasis::span(ctx, n, common);
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspaces live in different ambient spaces");
    std::vector<PolyVec> all = a.vectors();
    all.insert(all.end(), b.vectors().begin(), b.vectors().end());
    return SubspaceBasis::span(a.ctx(), a.ambient(), all);
}

SubspaceBasis apply_map_to_basis(const PolyMatrix& m, const SubspaceBasis& s) {
    if (m.cols() != s.ambient()) throw std::invalid_argument("map and subspace dimensions differ");
    std::vector<PolyVec> images;
    images.reserve(s.dim());
    for (const auto& v : s.vectors()) images.push_back(m.apply(v));
    return SubspaceBasis::span(m.ctx(), m.rows(), images);
}

XPoly berkowitz_charpoly(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const FieldCtx& ctx = m.ctx();
    const std::size_t n = m.rows();
    if (n == 0) return XPoly::constant(one(ctx));

    // Coefficients of det(X I - A_r) for the leading r x r block, highest
    // power of X first.
    std::vector<Poly> vect{one(ctx), -m(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Poly> toeplitz(r + 2, Poly(ctx));
        toeplitz[0] = one(ctx);
        toeplitz[1] = -m(r, r);
        PolyVec q(r, Poly(ctx));
        for (std::size_t i = 0; i < r; ++i) q[i] = m(i, r);
        for (std::size_t i = 0; i < r; ++i) {
            Poly dot(ctx);
            for (std::size_t l = 0; l < r; ++l) {
                if (!m(r, l).is_zero() && !q[l].is_zero()) dot += m(r, l) * q[l];
            }
            toeplitz[i + 2] = -dot;
            if (i + 1 == r) break;
            PolyVec next(r, Poly(ctx));
            for (std::size_t a = 0; a < r; ++a) {
                for (std::size_t b = 0; b < r; ++b) {
                    if (!m(a, b).is_zero() && !q[b].is_zero()) next[a] += m(a, b) * q[b];
                }
            }
            q = std::move(next);
        }
        std::vector<Poly> next(r + 2, Poly(ctx));
        for (std::size_t i = 0; i < r + 2; ++i) {
            for (std::size_t l = 0; l <= std::min(i, r); ++l) {
                if (!toeplitz[i - l].is_zero() && !vect[l].is_zero()) next[i] += toeplitz[i - l] * vect[l];
            }
        }
        vect = std::move(next);
    }
    std::reverse(vect.begin(), vect.end());
    return XPoly(ctx, std::move(vect));
}

PolyMatrix evaluate(const XPoly& f, const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("polynomial evaluation at a non-square matrix");
    const FieldCtx& ctx = m.ctx();
    const std::size_t n = m.rows();
    PolyMatrix acc(ctx, n, n);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * m;
        const Poly& c = f.coeffs()[i];
        if (c.is_zero()) continue;
        for (std::size_t d = 0; d < n; ++d) acc(d, d) += c;
    }
    return acc;
}

XPoly minimal_polynomial(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("minimal polynomial of a non-square matrix");
    const FieldCtx& ctx = m.ctx();
    const std::size_t n = m.rows();
    XPoly result = XPoly::constant(one(ctx));
    if (n == 0) return result;

    // Vectors of an m-stable subspace are annihilated by the running lcm, so
    // their Krylov relations cannot change it.
    SubspaceBasis covered(ctx, n);
    for (std::size_t i = 0; i < n; ++i) {
        PolyVec e = unit_vector(ctx, n, i);
        if (covered.contains(e)) continue;

        std::vector<PolyVec> krylov{std::move(e)};
        std::size_t probe = 1;
        XPoly local(ctx);
        std::size_t local_deg = 0;
        for (;;) {
            while (krylov.size() < probe + 1) krylov.push_back(m.apply(krylov.back()));
            const PolyMatrix km = PolyMatrix::from_columns(ctx, n, krylov);
            const EchelonForm ech = fraction_free_rref(km);
            if (ech.rank() < krylov.size()) {
                std::size_t d = 0;
                while (d < ech.rank() && ech.pivot_cols[d] == d) ++d;
                std::vector<Poly> rel(d + 1, Poly(ctx));
                rel[d] = ech.scale;
                for (std::size_t l = 0; l < d; ++l) rel[l] = -ech.reduced(l, d);
                const XPoly prim = primitive_part(XPoly(ctx, rel));
                if (!prim.lead().is_constant()) {
                    throw InternalDefect("Krylov relation is not monic over F_q[t]");
                }
                local = prim.scaled(Poly::constant(ctx, ctx.inv(prim.lead().lead())));
                local_deg = d;
                break;
            }
            if (probe >= n) throw InternalDefect("Krylov sequence of length n+1 is independent");
            probe = std::min(2 * probe, n);
        }
        result = lcm_monic(result, local);
        krylov.resize(local_deg);
        covered = subspace_sum(covered, SubspaceBasis::span(ctx, n, krylov));
        if (covered.dim() == n) break;
    }

    if (!evaluate(result, m).is_zero()) throw InternalDefect("minimal polynomial does not annihilate the matrix");
    try {
        (void)exact_div_x(berkowitz_charpoly(m), result);
    } catch (const std::domain_error&) {
        throw InternalDefect("minimal polynomial does not divide the characteristic polynomial");
    }
    return result;
}

Restriction restrict_to_subspace(const PolyMatrix& m, const SubspaceBasis& s) {
    if (!m.is_square() || m.rows() != s.ambient()) throw std::invalid_argument("map and subspace dimensions differ");
    const FieldCtx& ctx = m.ctx();
    const std::size_t d = s.dim(), n = s.ambient();
    if (d == 0) return {PolyMatrix(ctx, 0, 0), one(ctx)};
    const PolyMatrix basis = s.as_columns();
    const PolyMatrix image = m * basis;
    PolyMatrix aug(ctx, n, 2 * d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            aug(i, j) = basis(i, j);
            aug(i, d + j) = image(i, j);
        }
    const EchelonForm ech = fraction_free_rref(aug);
    if (ech.rank() != d) throw std::domain_error("subspace is not stable under the map");
    for (std::size_t i = 0; i < d; ++i)
        if (ech.pivot_cols[i] != i) throw std::domain_error("subspace basis is not independent");
    PolyMatrix scaled(ctx, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) scaled(i, j) = ech.reduced(i, d + j);
    return {std::move(scaled), ech.scale};
}

XPoly restricted_charpoly(const PolyMatrix& m, const SubspaceBasis& s) {
    const Restriction r = restrict_to_subspace(m, s);
    const FieldCtx& ctx = m.ctx();
    const std::size_t d = s.dim();
    const XPoly chi = berkowitz_charpoly(r.scaled);
    // det(X I - R/den) has lambda_i(R/den) = lambda_i(R) / den^i.
    std::vector<Poly> coeffs(d + 1, Poly(ctx));
    Poly den_pow = one(ctx);
    for (std::size_t i = 0; i <= d; ++i) {
        coeffs[d - i] = exact_div(chi.coeff(d - i), den_pow);
        den_pow *= r.denominator;
    }
    return XPoly(ctx, std::move(coeffs));
}

}  // namespace atkin
