#include <doctest.h>

#include <stdexcept>

#include <random>

#include "atkin/error.hpp"
#include "atkin/linalg.hpp"
#include "helpers.hpp"

using namespace atkin;
using testing::random_matrix;
using testing::t_pow;

namespace {

PolyMatrix diag(const FieldCtx& ctx, const std::vector<Poly>& d) {
    PolyMatrix m(ctx, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

XPoly xp(const FieldCtx& ctx, std::vector<Poly> ascending) { return XPoly(ctx, std::move(ascending)); }

Poly c(const FieldCtx& ctx, std::int64_t v) { return Poly::constant(ctx, ctx.from_int(v)); }

// Cofactor expansion along the first row.
Poly cofactor_det(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    const FieldCtx& ctx = m.ctx();
    if (n == 0) return c(ctx, 1);
    if (n == 1) return m(0, 0);
    Poly det(ctx);
    for (std::size_t col = 0; col < n; ++col) {
        if (m(0, col).is_zero()) continue;
        PolyMatrix minor(ctx, n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, cc = 0; k < n; ++k)
                if (k != col) minor(r - 1, cc++) = m(r, k);
        const Poly term = m(0, col) * cofactor_det(minor);
        if (col % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

// Random matrix of the given rank: product of random n x r and r x n factors.
PolyMatrix random_rank(const FieldCtx& ctx, std::mt19937_64& rng, std::size_t n, std::size_t r, int deg) {
    return random_matrix(ctx, rng, n, r, deg) * random_matrix(ctx, rng, r, n, deg);
}

SubspaceBasis random_subspace(const FieldCtx& ctx, std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::vector<PolyVec> vs;
    for (std::size_t i = 0; i < k; ++i) {
        const auto m = random_matrix(ctx, rng, 1, n, 2);
        vs.emplace_back(m.row(0).begin(), m.row(0).end());
    }
    return SubspaceBasis::span(ctx, n, vs);
}

}  // namespace

TEST_CASE("matrix operations") {
    const auto f3 = FieldCtx::for_order(3);
    const PolyMatrix M = PolyMatrix::from_ints(f3, {{1, 2}, {0, 1}});
    CHECK(PolyMatrix::identity(f3, 2) * M == M);
    const PolyMatrix A = PolyMatrix::from_ints(f3, {{0, -1}, {-1, 0}});
    PolyMatrix F(f3, 2, 2);
    F(0, 1) = t_pow(f3, 3, -1);
    F(1, 0) = t_pow(f3, 1, -1);
    CHECK(A * F == diag(f3, {t_pow(f3, 1), t_pow(f3, 3)}));
    CHECK(PolyMatrix::identity(f3, 3).scaled(t_pow(f3, 5)) == diag(f3, {t_pow(f3, 5), t_pow(f3, 5), t_pow(f3, 5)}));
    CHECK_THROWS_AS(M * PolyMatrix(f3, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(M + PolyMatrix(f3, 2, 3), std::invalid_argument);
    CHECK(M.transpose() == PolyMatrix::from_ints(f3, {{1, 0}, {2, 1}}));
}

TEST_CASE("matrix rendering") {
    const auto f3 = FieldCtx::for_order(3);
    PolyMatrix m(f3, 2, 2);
    m(0, 0) = t_pow(f3, 3, -1);
    m(0, 1) = t_pow(f3, 2) + t_pow(f3, 5, 2);
    m(1, 1) = c(f3, 1);
    CHECK(render_entry(m(0, 0)) == "-t^3");
    CHECK(render_entry(m(0, 1)) == "t^2 - t^5");
    CHECK(render_entry(Poly::from_ints(FieldCtx::for_order(7), {0, 2, 0, 0, 0, 3})) == "2t + 3t^5");
    CHECK(m.render() == "[ -t^3  t^2 - t^5 ]\n[    0          1 ]\n");
}

TEST_CASE("determinant examples") {
    const auto f3 = FieldCtx::for_order(3);
    PolyMatrix m(f3, 2, 2);
    m(0, 0) = c(f3, 1);
    m(0, 1) = t_pow(f3, 1);
    m(1, 0) = t_pow(f3, 1);
    m(1, 1) = c(f3, 1);
    CHECK(bareiss_det(m) == Poly::from_ints(f3, {1, 0, -1}));
    CHECK(bareiss_det(diag(f3, {t_pow(f3, 1), t_pow(f3, 3), t_pow(f3, 5)})) == t_pow(f3, 9));
    PolyMatrix F(f3, 2, 2);
    F(0, 1) = t_pow(f3, 3, -1);
    F(1, 0) = t_pow(f3, 1, -1);
    CHECK(bareiss_det(F) == t_pow(f3, 4, -1));
    CHECK(bareiss_det(PolyMatrix(f3, 0, 0)) == c(f3, 1));
    CHECK_THROWS_AS(bareiss_det(PolyMatrix(f3, 2, 3)), std::invalid_argument);
}

TEST_CASE("determinant agrees with cofactor expansion and the charpoly") {
    std::mt19937_64 rng(31);
    int count = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
        const auto ctx = FieldCtx::for_order(q);
        for (int i = 0; i < 40; ++i, ++count) {
            const std::size_t n = 1 + rng() % 8;
            const PolyMatrix m = random_matrix(ctx, rng, n, n, 5, i % 4 == 0 ? 0.3 : 1.0);
            const Poly det = bareiss_det(m);
            const XPoly chi = berkowitz_charpoly(m);
            CHECK(chi.is_monic());
            CHECK(chi.degree() == static_cast<int>(n));
            const Poly constant = chi.coeff(0);
            CHECK((n % 2 == 0 ? constant : -constant) == det);
            if (n <= 5) CHECK(det == cofactor_det(m));
        }
    }
    CHECK(count >= 200);
}

TEST_CASE("characteristic polynomial examples") {
    const auto f5 = FieldCtx::for_order(5);
    const XPoly d = berkowitz_charpoly(diag(f5, {t_pow(f5, 1), t_pow(f5, 2)}));
    CHECK(d == xp(f5, {t_pow(f5, 3), -(t_pow(f5, 1) + t_pow(f5, 2)), c(f5, 1)}));
    PolyMatrix anti(f5, 2, 2);
    anti(0, 1) = Poly::from_ints(f5, {1, 1});
    anti(1, 0) = t_pow(f5, 2);
    CHECK(berkowitz_charpoly(anti) == xp(f5, {-(anti(0, 1) * anti(1, 0)), Poly(f5), c(f5, 1)}));
}

TEST_CASE("characteristic polynomial is the determinant of X I - M at sample points") {
    // Substituting X = t^e turns det(X I - M) into an ordinary determinant.
    std::mt19937_64 rng(32);
    const auto ctx = FieldCtx::for_order(7);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 1 + rng() % 6;
        const PolyMatrix m = random_matrix(ctx, rng, n, n, 3);
        const XPoly chi = berkowitz_charpoly(m);
        for (std::size_t e : {0u, 1u, 4u}) {
            const Poly x = t_pow(ctx, e);
            Poly val(ctx), xp_pow = c(ctx, 1);
            for (const auto& co : chi.coeffs()) {
                val += co * xp_pow;
                xp_pow *= x;
            }
            CHECK(val == bareiss_det(PolyMatrix::identity(ctx, n).scaled(x) - m));
        }
    }
}

TEST_CASE("kernels") {
    const auto f3 = FieldCtx::for_order(3);
    PolyMatrix m(f3, 2, 2);
    m(0, 0) = c(f3, 1);
    m(0, 1) = c(f3, 1);
    m(1, 0) = t_pow(f3, 1);
    m(1, 1) = t_pow(f3, 1);
    const SubspaceBasis k = kernel_basis(m);
    REQUIRE(k.dim() == 1);
    CHECK(k.vectors()[0] == PolyVec{c(f3, 1), c(f3, -1)});
    CHECK(kernel_basis(PolyMatrix::identity(f3, 3)).is_zero());
}

TEST_CASE("random kernels have the right dimension and vanish exactly") {
    std::mt19937_64 rng(33);
    for (std::uint32_t q : {2u, 3u, 5u, 9u}) {
        const auto ctx = FieldCtx::for_order(q);
        for (int i = 0; i < 30; ++i) {
            const std::size_t n = 2 + rng() % 6;
            const std::size_t r = rng() % (n + 1);
            const PolyMatrix m = random_rank(ctx, rng, n, r, 2);
            const std::size_t rk = rank(m);
            CHECK(rk <= r);
            const SubspaceBasis k = kernel_basis(m);
            CHECK(k.dim() == n - rk);
            for (const auto& v : k.vectors()) {
                for (const auto& x : m.apply(v)) CHECK(x.is_zero());
                CHECK(content(v).is_one());
            }
        }
    }
}

TEST_CASE("echelon form invariants") {
    std::mt19937_64 rng(34);
    const auto ctx = FieldCtx::for_order(5);
    for (int i = 0; i < 30; ++i) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        const PolyMatrix m = random_matrix(ctx, rng, rows, cols, 3, 0.6);
        const EchelonForm e = fraction_free_rref(m);
        for (std::size_t r = 0; r < e.rank(); ++r) {
            CHECK(e.reduced(r, e.pivot_cols[r]) == e.scale);
            for (std::size_t o = 0; o < rows; ++o)
                if (o != r) CHECK(e.reduced(o, e.pivot_cols[r]).is_zero());
            if (r > 0) CHECK(e.pivot_cols[r] > e.pivot_cols[r - 1]);
        }
        for (std::size_t r = e.rank(); r < rows; ++r)
            for (std::size_t cc = 0; cc < cols; ++cc) CHECK(e.reduced(r, cc).is_zero());
        // Full-rank square matrices: the scale is the determinant up to a unit.
        if (rows == cols && e.rank() == rows) CHECK(bareiss_det(m).monic() == e.scale.monic());
    }
}

TEST_CASE("subspace operations") {
    const auto f3 = FieldCtx::for_order(3);
    const PolyVec e1{c(f3, 1), Poly(f3)}, e2{Poly(f3), c(f3, 1)};
    const auto a = SubspaceBasis::span(f3, 2, {e1});
    const auto b = SubspaceBasis::span(f3, 2, {e2});
    CHECK(subspace_intersect(a, a) == a);
    CHECK(subspace_intersect(a, b).is_zero());
    CHECK(subspace_sum(a, b).dim() == 2);
    CHECK_THROWS_AS(subspace_intersect(a, SubspaceBasis(f3, 3)), std::invalid_argument);

    // Canonical form: scaling a vector by a polynomial does not change the span.
    const PolyVec v{Poly::from_ints(f3, {1, 1}), t_pow(f3, 2)};
    PolyVec w;
    for (const auto& x : v) w.push_back(x * Poly::from_ints(f3, {2, 0, 1}));
    CHECK(SubspaceBasis::span(f3, 2, {v}) == SubspaceBasis::span(f3, 2, {w, v}));
    CHECK(SubspaceBasis::span(f3, 2, {v}).contains(w));
    CHECK_FALSE(SubspaceBasis::span(f3, 2, {v}).contains(e1));

    CHECK(apply_map_to_basis(PolyMatrix::identity(f3, 2), a) == a);
}

TEST_CASE("dimension formula for random intersections") {
    std::mt19937_64 rng(35);
    for (std::uint32_t q : {2u, 3u, 7u}) {
        const auto ctx = FieldCtx::for_order(q);
        for (int i = 0; i < 30; ++i) {
            const std::size_t n = 2 + rng() % 5;
            // Share some vectors so intersections are nontrivial.
            const auto shared = random_subspace(ctx, rng, n, rng() % 2);
            auto a = subspace_sum(shared, random_subspace(ctx, rng, n, rng() % n));
            auto b = subspace_sum(shared, random_subspace(ctx, rng, n, rng() % n));
            const auto both = subspace_intersect(a, b);
            CHECK(a.dim() + b.dim() == both.dim() + subspace_sum(a, b).dim());
            for (const auto& v : both.vectors()) {
                CHECK(a.contains(v));
                CHECK(b.contains(v));
            }
            CHECK(both.dim() >= shared.dim());
        }
    }
}

TEST_CASE("minimal polynomial examples") {
    const auto f3 = FieldCtx::for_order(3);
    CHECK(minimal_polynomial(PolyMatrix::identity(f3, 4)) == xp(f3, {c(f3, -1), c(f3, 1)}));
    CHECK(minimal_polynomial(diag(f3, {t_pow(f3, 1), t_pow(f3, 1)})) == xp(f3, {t_pow(f3, 1, -1), c(f3, 1)}));
    CHECK(minimal_polynomial(PolyMatrix::from_ints(f3, {{0, 1}, {0, 0}})) == xp(f3, {Poly(f3), Poly(f3), c(f3, 1)}));
    CHECK_THROWS_AS(minimal_polynomial(PolyMatrix(f3, 1, 2)), std::invalid_argument);
}

TEST_CASE("minimal polynomial annihilates and divides the characteristic polynomial") {
    std::mt19937_64 rng(36);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const auto ctx = FieldCtx::for_order(q);
        for (int i = 0; i < 25; ++i) {
            const std::size_t n = 1 + rng() % 6;
            PolyMatrix m = random_matrix(ctx, rng, n, n, 2, 0.5);
            if (i % 3 == 0) {
                // Block-diagonal repeats make the minimal polynomial drop degree.
                PolyMatrix big(ctx, 2 * n, 2 * n);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t cc = 0; cc < n; ++cc) big(r, cc) = big(n + r, n + cc) = m(r, cc);
                m = big;
            }
            const XPoly mp = minimal_polynomial(m);
            CHECK(mp.is_monic());
            CHECK(evaluate(mp, m).is_zero());
            CHECK_NOTHROW(exact_div_x(berkowitz_charpoly(m), mp));
            if (i % 3 == 0) CHECK(mp.degree() <= static_cast<int>(m.rows() / 2));
        }
    }
}

TEST_CASE("restriction to a stable subspace") {
    const auto f5 = FieldCtx::for_order(5);
    // U = diag(t, t^2, t^3); S = span(e1, e3).
    const PolyMatrix u = diag(f5, {t_pow(f5, 1), t_pow(f5, 2), t_pow(f5, 3)});
    const PolyVec e1{c(f5, 1), Poly(f5), Poly(f5)}, e2{Poly(f5), c(f5, 1), Poly(f5)}, e3{Poly(f5), Poly(f5), c(f5, 1)};
    const auto s = SubspaceBasis::span(f5, 3, {e1, e3});
    const XPoly chi = restricted_charpoly(u, s);
    CHECK(chi == berkowitz_charpoly(diag(f5, {t_pow(f5, 1), t_pow(f5, 3)})));
    const auto bad = SubspaceBasis::span(f5, 3, {PolyVec{c(f5, 1), c(f5, 1), Poly(f5)}});
    CHECK_THROWS_AS(restrict_to_subspace(u, bad), std::domain_error);
    CHECK(restricted_charpoly(u, SubspaceBasis(f5, 3)) == XPoly::constant(c(f5, 1)));
    (void)e2;
}

TEST_CASE("restricted characteristic polynomials divide the full one") {
    std::mt19937_64 rng(37);
    const auto ctx = FieldCtx::for_order(3);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 2 + rng() % 4;
        const PolyMatrix m = random_matrix(ctx, rng, n, n, 2);
        // Krylov spans are stable.
        std::vector<PolyVec> kry;
        const auto start = random_matrix(ctx, rng, 1, n, 2);
        kry.emplace_back(start.row(0).begin(), start.row(0).end());
        for (std::size_t s = 0; s < n; ++s) kry.push_back(m.apply(kry.back()));
        const auto span = SubspaceBasis::span(ctx, n, kry);
        const XPoly part = restricted_charpoly(m, span);
        CHECK(part.is_monic());
        CHECK(part.degree() == static_cast<int>(span.dim()));
        CHECK_NOTHROW(exact_div_x(berkowitz_charpoly(m), part));
    }
}
