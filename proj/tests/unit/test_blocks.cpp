#include <doctest.h>

#include <stdexcept>

#include <random>

#include "atkin/blocks.hpp"
#include "helpers.hpp"

using namespace atkin;
using testing::t_pow;

namespace {

const std::uint32_t kOrders[] = {2, 3, 4, 5, 7, 8, 9};

// binom(a, b) mod p from Pascal's triangle.
class Pascal {
public:
    Pascal(std::uint32_t p, std::size_t rows) : rows_(rows + 1) {
        for (std::size_t a = 0; a <= rows; ++a) {
            rows_[a].assign(a + 1, 1);
            for (std::size_t b = 1; b < a; ++b) rows_[a][b] = (rows_[a - 1][b - 1] + rows_[a - 1][b]) % p;
        }
    }
    std::int64_t operator()(std::int64_t a, std::int64_t b) const {
        if (a < 0 || b < 0 || b > a) return 0;
        return rows_[a][b];
    }

private:
    std::vector<std::vector<std::int64_t>> rows_;
};

PolyMatrix ints(const FieldCtx& ctx, const std::vector<std::vector<std::int64_t>>& rows) {
    PolyMatrix m(ctx, rows.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows.size(); ++c)
            m(r, c) = Poly::constant(ctx, ctx.from_int(rows[r][c]));
    return m;
}

// Entries straight from the binomial formula, with Pascal binomials.
PolyMatrix formula_M(const BlockSpec& s) {
    const std::int64_t q = s.q(), j = s.j, n = s.n;
    const Pascal binom(s.ctx.p(), static_cast<std::size_t>(j + (n - 1) * (q - 1)));
    const std::int64_t sign_j = j % 2 == 0 ? 1 : -1;
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
    for (std::int64_t a = 1; a <= n; ++a) {
        const std::int64_t top = j + (n - a) * (q - 1);
        for (std::int64_t b = 1; b <= n; ++b) {
            if (a == b) rows[a - 1][b - 1] = sign_j * binom(top, j + (a - 1) * (q - 1));
            else
                rows[a - 1][b - 1] = -(binom(top, j + (n - b) * (q - 1)) - sign_j * binom(top, j + (b - 1) * (q - 1)));
        }
    }
    return ints(s.ctx, rows);
}

}  // namespace

TEST_CASE("block parameters") {
    const auto f3 = FieldCtx::for_order(3);
    const auto b = BlockSpec::make(f3, 0, 6);
    CHECK(b.k == 12);
    CHECK(b.m == 1);
    CHECK(b.label() == "q=3 j=0 n=6 k=12 m=1");
    for (std::size_t i = 1; i <= b.n; ++i) CHECK(b.s(i) + b.s(b.n + 1 - i) == b.k);
    CHECK_THROWS_AS(BlockSpec::make(FieldCtx::for_order(4), 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(BlockSpec::make(f3, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(BlockSpec::make(f3, 0, 0), std::invalid_argument);
    for (std::uint32_t q : kOrders) {
        const auto ctx = FieldCtx::for_order(q);
        for (std::uint32_t j = 0; j + 2 <= q; ++j)
            for (std::uint32_t n = 1; n <= 10; ++n) {
                const auto s = BlockSpec::make(ctx, j, n);
                CHECK(s.k % (q - 1) == (2 * s.m) % (q - 1));
                CHECK((j + 1) % (q - 1) == s.m % (q - 1));
            }
    }
}

TEST_CASE("enumerating blocks by weight and type") {
    const auto f3 = FieldCtx::for_order(3);
    auto b = enumerate_blocks(f3, 12, 1);
    REQUIRE(b);
    CHECK(b->j == 0);
    CHECK(b->n == 6);
    b = enumerate_blocks(f3, 12, 0);
    REQUIRE(b);
    CHECK(b->j == 1);
    CHECK(b->n == 5);
    b = enumerate_blocks(FieldCtx::for_order(2), 9, 0);
    REQUIRE(b);
    CHECK(b->j == 0);
    CHECK(b->n == 8);
    CHECK_FALSE(enumerate_blocks(f3, 11, 0));
    CHECK_FALSE(enumerate_blocks(FieldCtx::for_order(5), 6, 0));
    // j = 3 for q = 5 needs k >= 8.
    CHECK_FALSE(enumerate_blocks(FieldCtx::for_order(5), 4, 0));
    CHECK(enumerate_blocks(FieldCtx::for_order(5), 8, 0)->j == 3);

    const auto sib = sibling_block(BlockSpec::make(f3, 0, 6));
    REQUIRE(sib);
    CHECK(sib->j == 1);
    CHECK(sib->n == 5);
    CHECK_FALSE(sibling_block(BlockSpec::make(FieldCtx::for_order(4), 0, 3)));
}

TEST_CASE("enumeration round-trips every block") {
    for (std::uint32_t q : kOrders) {
        const auto ctx = FieldCtx::for_order(q);
        for (std::uint32_t j = 0; j + 2 <= q; ++j)
            for (std::uint32_t n = 1; n <= 12; ++n) {
                const auto s = BlockSpec::make(ctx, j, n);
                const auto e = enumerate_blocks(ctx, s.k, s.m);
                REQUIRE(e);
                CHECK(*e == s);
            }
    }
}

TEST_CASE("block sizes count the cocycles of each residue class") {
    // The indices 0..k-2 split by residue mod q-1; block C_j holds those
    // congruent to j. For q = 2 and q = 3 (even k) every residue is a block,
    // so the sizes add up to k - 1.
    for (std::uint32_t q : kOrders) {
        const auto ctx = FieldCtx::for_order(q);
        for (std::int64_t k = 2; k <= 60; ++k)
            for (std::int64_t m = 0; m + 1 < static_cast<std::int64_t>(q) || m == 0; ++m) {
                const auto b = enumerate_blocks(ctx, k, m);
                if (!b) continue;
                std::size_t count = 0;
                for (std::int64_t i = 0; i <= k - 2; ++i)
                    if (i % (q - 1) == b->j) ++count;
                CHECK(count == b->n);
            }
    }
    for (std::int64_t k = 2; k <= 40; ++k) {
        CHECK(enumerate_blocks(FieldCtx::for_order(2), k, 0)->n == static_cast<std::uint32_t>(k - 1));
        if (k % 2 != 0) continue;
        const auto f3 = FieldCtx::for_order(3);
        std::size_t total = 0;
        for (std::int64_t m = 0; m < 2; ++m)
            if (auto b = enumerate_blocks(f3, k, m)) total += b->n;
        CHECK(total == static_cast<std::size_t>(k - 1));
    }
}

TEST_CASE("golden coefficient matrices") {
    const auto f3 = FieldCtx::for_order(3);
    CHECK(build_M(BlockSpec::make(f3, 0, 6)) == ints(f3, {{1, 0, 0, 0, 0, 0},
                                                          {1, 1, 0, 0, 0, -1},
                                                          {1, 0, 0, 1, 0, -1},
                                                          {1, 0, 1, 0, 0, -1},
                                                          {1, 1, 0, 0, 0, -1},
                                                          {1, 0, 0, 0, 0, 0}}));
    const auto f8 = FieldCtx::for_order(8);
    CHECK(build_M(BlockSpec::make(f8, 3, 5)) == ints(f8, {{1, 0, 0, 0, 0},
                                                          {0, 0, 0, 1, 0},
                                                          {0, 0, 1, 0, 0},
                                                          {0, 1, 0, 0, 0},
                                                          {1, 0, 0, 0, 0}}));
    CHECK(build_M(BlockSpec::make(f8, 6, 8)) == ints(f8, {{1, 1, 1, 1, 1, 1, 1, 0},
                                                          {0, 0, 0, 0, 0, 0, 1, 0},
                                                          {0, 0, 0, 0, 0, 1, 0, 0},
                                                          {0, 0, 0, 0, 1, 0, 0, 0},
                                                          {0, 0, 0, 1, 0, 0, 0, 0},
                                                          {0, 0, 1, 0, 0, 0, 0, 0},
                                                          {0, 1, 0, 0, 0, 0, 0, 0},
                                                          {1, 0, 0, 0, 0, 0, 0, 0}}));
    for (std::uint32_t q : {3u, 5u, 7u}) {
        const auto ctx = FieldCtx::for_order(q);
        CAPTURE(q);
        CHECK(build_M(BlockSpec::make(ctx, 1, 4)) ==
              ints(ctx, {{2, -2, -2, 1}, {1, -1, -2, 1}, {0, -1, 0, 0}, {-1, 0, 0, 0}}));
    }
}

TEST_CASE("coefficient matrices agree with Pascal binomials") {
    for (std::uint32_t q : kOrders) {
        const auto ctx = FieldCtx::for_order(q);
        for (std::uint32_t j = 0; j + 2 <= q; ++j)
            for (std::uint32_t n = 1; n <= 14; ++n) {
                const auto s = BlockSpec::make(ctx, j, n);
                CAPTURE(s.label());
                CHECK(build_M(s) == formula_M(s));
            }
    }
}

TEST_CASE("derived matrices for a small block") {
    const auto f3 = FieldCtx::for_order(3);
    const auto bm = build_block_matrices(BlockSpec::make(f3, 0, 2));
    PolyMatrix d(f3, 2, 2), f(f3, 2, 2);
    d(0, 0) = t_pow(f3, 1);
    d(1, 1) = t_pow(f3, 3);
    f(0, 1) = t_pow(f3, 3, -1);
    f(1, 0) = t_pow(f3, 1, -1);
    CHECK(bm.D == d);
    CHECK(bm.A == PolyMatrix::from_ints(f3, {{0, -1}, {-1, 0}}));
    CHECK(bm.F == f);
    CHECK(bm.F * bm.F == PolyMatrix::identity(f3, 2).scaled(t_pow(f3, 4)));
}

TEST_CASE("one-dimensional blocks") {
    for (std::uint32_t q : kOrders) {
        const auto ctx = FieldCtx::for_order(q);
        for (std::uint32_t j = 0; j + 2 <= q; ++j) {
            const auto bm = build_block_matrices(BlockSpec::make(ctx, j, 1));
            CHECK(bm.U(0, 0) == t_pow(ctx, j + 1, j % 2 == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("matrix identities hold on every small block") {
    int count = 0;
    for (std::uint32_t q : kOrders) {
        const auto ctx = FieldCtx::for_order(q);
        for (std::uint32_t j = 0; j + 2 <= q; ++j)
            for (std::uint32_t n = 1; n <= 12; ++n, ++count) {
                const auto s = BlockSpec::make(ctx, j, n);
                const auto bm = build_block_matrices(s);
                const auto I = PolyMatrix::identity(ctx, n);
                const auto MA = bm.M * bm.A;
                CHECK(bm.U == bm.M * bm.D);
                CHECK(bm.T == I + MA);
                CHECK(bm.Tp_scaled == bm.F + bm.U);
                CHECK(bm.A * bm.F == bm.D);
                CHECK(bm.F * bm.F == I.scaled(t_pow(ctx, s.k)));
                CHECK(bm.T * bm.T == bm.T);
                CHECK((bm.T * MA).is_zero());
                CHECK((bm.T * bm.M).is_zero());
            }
    }
    CHECK(count >= 100);
}

TEST_CASE("symmetries of the coefficient matrices") {
    CHECK(check_symmetries(BlockSpec::make(FieldCtx::for_order(3), 0, 6)).all());
    CHECK(check_symmetries(BlockSpec::make(FieldCtx::for_order(2), 0, 8)).all());
    for (std::uint32_t q : kOrders) {
        const auto ctx = FieldCtx::for_order(q);
        for (std::uint32_t j = 0; j + 2 <= q; ++j)
            for (std::uint32_t n = 1; n <= 12; ++n) {
                const auto r = check_symmetries(BlockSpec::make(ctx, j, n));
                CHECK(r.all());
                CHECK_FALSE(r.first_violation);
            }
    }
}

TEST_CASE("symmetry checker flags a perturbed matrix") {
    const auto f5 = FieldCtx::for_order(5);
    const auto s = BlockSpec::make(f5, 0, 6);
    PolyMatrix m = build_M(s);
    // Row 5 lies in the lower half, below the antidiagonal.
    m(4, 4) = Poly::constant(f5, f5.from_int(1));
    const auto r = check_symmetries(s, m);
    CHECK_FALSE(r.all());
    REQUIRE(r.first_violation);
    CHECK_FALSE(r.violated_rule.empty());

    PolyMatrix m2 = build_M(s);
    m2(0, 1) = m2(0, 1) + Poly::constant(f5, f5.from_int(1));
    const auto r2 = check_symmetries(s, m2);
    CHECK_FALSE(r2.columns);
    CHECK(r2.first_violation == std::pair<std::size_t, std::size_t>{1, 5});
}

TEST_CASE("closed forms") {
    const auto f5 = FieldCtx::for_order(5);
    const auto anti = closed_form_oracle(BlockSpec::make(f5, 3, 2));
    REQUIRE(anti);
    CHECK(anti->matches(PolyMatrix::from_ints(f5, {{0, -1}, {-1, 0}})));
    CHECK_FALSE(anti->matches(PolyMatrix::from_ints(f5, {{0, 1}, {1, 0}})));
    CHECK_FALSE(closed_form_oracle(BlockSpec::make(FieldCtx::for_order(3), 0, 6)));

    const auto f8 = FieldCtx::for_order(8);
    const auto shape = closed_form_oracle(BlockSpec::make(f8, 6, 8));
    REQUIRE(shape);
    CHECK(shape->matches(build_M(BlockSpec::make(f8, 6, 8))));
    CHECK_FALSE(shape->at(0, 1));  // unconstrained first-row entry
    CHECK(shape->at(0, 0) == 1);
    CHECK(shape->at(7, 0) == 1);
}

TEST_CASE("closed forms agree with the built matrices wherever they apply") {
    int covered = 0;
    for (std::uint32_t q : kOrders) {
        const auto ctx = FieldCtx::for_order(q);
        for (std::uint32_t j = 0; j + 2 <= q; ++j)
            for (std::uint32_t n = 1; n <= q + 4; ++n) {
                const auto s = BlockSpec::make(ctx, j, n);
                const auto pat = closed_form_oracle(s);
                const bool applies = n <= j + 1 || n == j + 2 || (j == 0 && n >= 2 && n <= q + 2);
                CHECK(pat.has_value() == applies);
                if (!pat) continue;
                ++covered;
                CAPTURE(s.label());
                CHECK(pat->matches(build_M(s)));
            }
    }
    CHECK(covered > 50);
}
