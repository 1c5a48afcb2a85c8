#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "atkin/matrix.hpp"
#include "atkin/poly.hpp"

namespace testing {

inline atkin::Poly random_poly(const atkin::FieldCtx& ctx, std::mt19937_64& rng, int max_deg, double density = 1.0) {
    std::uniform_int_distribution<int> deg(-1, max_deg);
    std::uniform_int_distribution<std::uint32_t> elem(0, ctx.q() - 1);
    std::bernoulli_distribution keep(density);
    const int d = deg(rng);
    std::vector<atkin::FieldElem> c;
    for (int i = 0; i <= d; ++i) c.push_back(keep(rng) ? ctx.element(elem(rng)) : ctx.zero());
    return atkin::Poly(ctx, std::move(c));
}

inline atkin::Poly nonzero_poly(const atkin::FieldCtx& ctx, std::mt19937_64& rng, int max_deg) {
    for (;;) {
        auto p = random_poly(ctx, rng, max_deg);
        if (!p.is_zero()) return p;
    }
}

inline atkin::PolyMatrix random_matrix(const atkin::FieldCtx& ctx, std::mt19937_64& rng, std::size_t rows,
                                       std::size_t cols, int max_deg, double density = 1.0) {
    atkin::PolyMatrix m(ctx, rows, cols);
    std::bernoulli_distribution keep(density);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (keep(rng)) m(r, c) = random_poly(ctx, rng, max_deg);
    return m;
}

inline atkin::Poly t_pow(const atkin::FieldCtx& ctx, std::size_t e, std::int64_t c = 1) {
    return atkin::Poly::monomial(ctx, ctx.from_int(c), e);
}

}  // namespace testing
