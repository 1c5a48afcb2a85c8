#include <doctest.h>

#include <stdexcept>

#include <random>

#include "atkin/xpoly.hpp"
#include "helpers.hpp"

using namespace atkin;
using testing::random_poly;

namespace {

XPoly xp(const FieldCtx& ctx, std::initializer_list<std::initializer_list<std::int64_t>> coeffs) {
    std::vector<Poly> v;
    for (const auto& c : coeffs) v.push_back(Poly::from_ints(ctx, std::span<const std::int64_t>(c.begin(), c.size())));
    return XPoly(ctx, std::move(v));
}

// All polynomials over F_q of degree <= d.
std::vector<Poly> all_polys(const FieldCtx& ctx, int d) {
    std::vector<Poly> out;
    std::uint64_t count = 1;
    for (int i = 0; i <= d; ++i) count *= ctx.q();
    for (std::uint64_t v = 0; v < count; ++v) {
        std::vector<FieldElem> c;
        for (int i = 0, x = static_cast<int>(v); i <= d; ++i, x /= static_cast<int>(ctx.q())) {
            c.push_back(ctx.element(static_cast<std::uint32_t>(x % ctx.q())));
        }
        out.emplace_back(ctx, c);
    }
    return out;
}

// Brute force: does (X - r)^2 divide f for some r of t-degree <= 4?
bool has_repeated_linear_factor(const XPoly& f, const std::vector<Poly>& candidates) {
    const FieldCtx& ctx = f.ctx();
    for (const auto& r : candidates) {
        const XPoly lin(ctx, {-r, Poly::constant(ctx, ctx.one())});
        try {
            (void)exact_div_x(f, lin * lin);
            return true;
        } catch (const std::domain_error&) {
        }
    }
    return false;
}

XPoly random_monic(const FieldCtx& ctx, std::mt19937_64& rng, int deg, int coeff_deg) {
    std::vector<Poly> v;
    for (int i = 0; i < deg; ++i) v.push_back(random_poly(ctx, rng, coeff_deg));
    v.push_back(Poly::constant(ctx, ctx.one()));
    return XPoly(ctx, std::move(v));
}

}  // namespace

TEST_CASE("separability examples") {
    const auto f2 = FieldCtx::for_order(2);
    const auto f3 = FieldCtx::for_order(3);
    CHECK_FALSE(is_separable(xp(f2, {{0, 1}, {}, {1}})));  // X^2 - t
    CHECK(is_separable(xp(f3, {{0, -1}, {}, {1}})));
    CHECK(is_separable(xp(f3, {{}, {0, -1}, {1}})));  // X(X - t)
    CHECK(is_separable(xp(f2, {{0, 1}})));
    CHECK_THROWS_AS(is_separable(XPoly(f2)), std::domain_error);
    // (X - t)^2 over F_3
    CHECK_FALSE(is_separable(xp(f3, {{0, 0, 1}, {0, -2}, {1}})));
}

TEST_CASE("coefficient access") {
    const auto f5 = FieldCtx::for_order(5);
    const XPoly f = xp(f5, {{}, {}, {0, 1}, {2}, {1}});  // X^4 + 2X^3 + tX^2
    CHECK(f.degree() == 4);
    CHECK(f.is_monic());
    CHECK(f.lambda(0) == Poly::from_ints(f5, {1}));
    CHECK(f.lambda(1) == Poly::from_ints(f5, {2}));
    CHECK(f.lambda(2) == Poly::from_ints(f5, {0, 1}));
    CHECK(f.lambda(4).is_zero());
    CHECK(f.trailing_x_power() == 2);
    CHECK(derivative_x(f) == xp(f5, {{}, {0, 2}, {6}, {4}}));
}

TEST_CASE("gcd, exact division and lcm") {
    std::mt19937_64 rng(21);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const auto ctx = FieldCtx::for_order(q);
        for (int i = 0; i < 40; ++i) {
            const XPoly g = random_monic(ctx, rng, 1 + i % 2, 3);
            const XPoly a = random_monic(ctx, rng, 2, 3) * g;
            const XPoly b = random_monic(ctx, rng, 2, 3) * g;
            const XPoly d = gcd_x(a, b);
            CHECK(d.lead().is_constant());
            CHECK_NOTHROW(exact_div_x(a, d));
            CHECK_NOTHROW(exact_div_x(b, d));
            CHECK_NOTHROW(exact_div_x(d, g));
            const XPoly l = lcm_monic(a, b);
            CHECK(l.is_monic());
            CHECK_NOTHROW(exact_div_x(l, a));
            CHECK_NOTHROW(exact_div_x(l, b));
            CHECK(exact_div_x(a * b, b) == a);

            const XPoly r = pseudo_rem(a, b);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("content and primitive part") {
    const auto f3 = FieldCtx::for_order(3);
    const XPoly f = xp(f3, {{0, 2}, {0, 0, 1}});
    CHECK(content(f) == Poly::from_ints(f3, {0, 1}));
    CHECK(primitive_part(f) == xp(f3, {{2}, {0, 1}}));
}

TEST_CASE("separability agrees with brute-force repeated factors") {
    std::mt19937_64 rng(22);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const auto ctx = FieldCtx::for_order(q);
        const auto candidates = all_polys(ctx, q == 5 ? 3 : 4);
        for (int i = 0; i < 60; ++i) {
            XPoly f = random_monic(ctx, rng, 3, 2);
            if (i % 3 == 0) {
                // Force a repeated root.
                const Poly r = random_poly(ctx, rng, 1);
                const XPoly lin(ctx, {-r, Poly::constant(ctx, ctx.one())});
                f = lin * lin * random_monic(ctx, rng, 1, 2);
            }
            const bool repeated = has_repeated_linear_factor(f, candidates);
            if (repeated) CHECK_FALSE(is_separable(f));
            // Cubics that are not squarefree have a repeated linear factor, and in
            // characteristic > 3 squarefree means separable.
            if (q == 5) CHECK(is_separable(f) == !repeated);
        }
    }
}
