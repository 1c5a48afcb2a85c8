#include "atkin/blocks.hpp"

#include <stdexcept>

#include "atkin/error.hpp"

namespace atkin {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
    const std::int64_t r = a % b;
    return r < 0 ? r + b : r;
}

FieldElem sign(const FieldCtx& ctx, std::uint64_t e) { return ctx.from_int(e % 2 == 0 ? 1 : -1); }

Poly t_power(const FieldCtx& ctx, FieldElem c, std::uint64_t e) { return Poly::monomial(ctx, c, e); }

FieldElem constant_entry(const PolyMatrix& m, std::size_t a, std::size_t b) { return m(a, b).coeff(0); }

}  // namespace

BlockSpec BlockSpec::make(FieldCtx ctx, std::int64_t j, std::int64_t n) {
    const std::int64_t q = ctx.q();
    if (j < 0 || j > q - 2) {
        throw std::invalid_argument("class index j=" + std::to_string(j) + " out of range [0, " + std::to_string(q - 2) +
                                    "] for q=" + std::to_string(q));
    }
    if (n < 1) throw std::invalid_argument("block dimension must be at least 1, got " + std::to_string(n));
    BlockSpec s{ctx};
    s.j = static_cast<std::uint32_t>(j);
    s.n = static_cast<std::uint32_t>(n);
    s.k = static_cast<std::uint64_t>(2 * j + 2 + (n - 1) * (q - 1));
    s.m = static_cast<std::uint32_t>(floor_mod(j + 1, q - 1));
    return s;
}

std::string BlockSpec::label() const {
    return "q=" + std::to_string(q()) + " j=" + std::to_string(j) + " n=" + std::to_string(n) +
           " k=" + std::to_string(k) + " m=" + std::to_string(m);
}

std::optional<BlockSpec> enumerate_blocks(FieldCtx ctx, std::int64_t k, std::int64_t m) {
    const std::int64_t qm1 = ctx.q() - 1;
    if (floor_mod(k - 2 * m, qm1) != 0) return std::nullopt;
    const std::int64_t j = floor_mod(m - 1, qm1);
    const std::int64_t rest = k - 2 * j - 2;
    if (rest < 0 || rest % qm1 != 0) return std::nullopt;
    return BlockSpec::make(ctx, j, rest / qm1 + 1);
}

std::optional<BlockSpec> sibling_block(const BlockSpec& spec) {
    const std::int64_t q = spec.q();
    if (q % 2 == 0) return std::nullopt;
    return enumerate_blocks(spec.ctx, static_cast<std::int64_t>(spec.k), spec.m + (q - 1) / 2);
}

PolyMatrix build_M(const BlockSpec& spec) {
    const FieldCtx& ctx = spec.ctx;
    const std::uint32_t p = ctx.p();
    const std::uint64_t j = spec.j, n = spec.n, qm1 = spec.q() - 1;
    const FieldElem sign_j = sign(ctx, j);
    const FieldElem sign_j1 = sign(ctx, j + 1);
    PolyMatrix m(ctx, n, n);
    for (std::uint64_t a = 1; a <= n; ++a) {
        const std::uint64_t top = j + (n - a) * qm1;
        for (std::uint64_t b = 1; b <= n; ++b) {
            FieldElem v;
            if (a == b) {
                v = ctx.mul(sign_j, ctx.from_int(lucas_binom(top, j + (a - 1) * qm1, p)));
            } else {
                const FieldElem first = ctx.from_int(lucas_binom(top, j + (n - b) * qm1, p));
                const FieldElem second = ctx.from_int(lucas_binom(top, j + (b - 1) * qm1, p));
                v = ctx.neg(ctx.add(first, ctx.mul(sign_j1, second)));
            }
            m(a - 1, b - 1) = Poly::constant(ctx, v);
        }
    }
    return m;
}

BlockMatrices build_block_matrices(const BlockSpec& spec) {
    const FieldCtx& ctx = spec.ctx;
    const std::size_t n = spec.n;
    PolyMatrix M = build_M(spec);
    PolyMatrix D(ctx, n, n), A(ctx, n, n), F(ctx, n, n);
    const FieldElem sign_j1 = sign(ctx, spec.j + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        D(i - 1, i - 1) = t_power(ctx, ctx.one(), spec.s(i));
        A(i - 1, n - i) = Poly::constant(ctx, sign_j1);
        // Column b carries (-t)^{s_b} in row n+1-b.
        F(n - i, i - 1) = t_power(ctx, sign(ctx, spec.s(i)), spec.s(i));
    }
    PolyMatrix U = M * D;
    const PolyMatrix MA = M * A;
    PolyMatrix T = PolyMatrix::identity(ctx, n) + MA;
    PolyMatrix Tp = F + U;

    if (!(A * F == D)) throw InternalDefect("AF != D for block " + spec.label());
    if (!(F * F == PolyMatrix::identity(ctx, n).scaled(t_power(ctx, ctx.one(), spec.k)))) {
        throw InternalDefect("F^2 != t^k I for block " + spec.label());
    }
    if (!(T * T == T)) throw InternalDefect("T is not idempotent for block " + spec.label());
    if (!(T * MA).is_zero()) throw InternalDefect("(I+MA)MA != 0 for block " + spec.label());
    if (!(T * M).is_zero()) throw InternalDefect("TM != 0 for block " + spec.label());

    return {std::move(M), std::move(D), std::move(A), std::move(F), std::move(U), std::move(T), std::move(Tp)};
}

SymmetryReport check_symmetries(const BlockSpec& spec) { return check_symmetries(spec, build_M(spec)); }

SymmetryReport check_symmetries(const BlockSpec& spec, const PolyMatrix& mat) {
    const FieldCtx& ctx = spec.ctx;
    const std::size_t n = spec.n;
    if (mat.rows() != n || mat.cols() != n) throw std::invalid_argument("matrix does not match the block dimension");
    const FieldElem sj = sign(ctx, spec.j);
    const FieldElem sj1 = sign(ctx, spec.j + 1);
    auto m = [&](std::size_t a, std::size_t b) { return constant_entry(mat, a - 1, b - 1); };

    SymmetryReport rep;
    auto fail = [&](bool SymmetryReport::*flag, const char* rule, std::size_t a, std::size_t b) {
        rep.*flag = false;
        if (!rep.first_violation) {
            rep.first_violation = std::make_pair(a, b);
            rep.violated_rule = rule;
        }
    };

    for (std::size_t a = 1; a <= n; ++a) {
        for (std::size_t b = 1; b <= n; ++b) {
            if (b == a || b == n + 1 - a) continue;
            if (m(a, n + 1 - b) != ctx.mul(sj1, m(a, b))) fail(&SymmetryReport::columns, "column symmetry", a, n + 1 - b);
        }
    }
    for (std::size_t a = 1; a <= n; ++a) {
        if (a == n + 1 - a) continue;
        if (m(a, n + 1 - a) != ctx.mul(sj1, ctx.sub(m(a, a), ctx.one()))) {
            fail(&SymmetryReport::diag_antidiag, "diagonal/antidiagonal symmetry", a, n + 1 - a);
        }
    }
    const std::size_t half = n / 2;
    for (std::size_t a = half + 1; a <= n; ++a) {
        if (a == n + 1 - a) continue;
        if (m(a, n + 1 - a) != sj) fail(&SymmetryReport::lower_antidiag, "lower antidiagonal", a, n + 1 - a);
        if (!m(a, a).is_zero()) fail(&SymmetryReport::lower_antidiag, "lower diagonal", a, a);
    }
    for (std::size_t a = half + 1; a + 1 <= n; ++a) {
        for (std::size_t b = n + 2 - a; b < a; ++b) {
            if (!m(a, b).is_zero()) fail(&SymmetryReport::below_antidiag, "below antidiagonal", a, b);
        }
    }
    if (n % 2 == 1) {
        const std::size_t c = (n + 1) / 2;
        if (m(c, c) != sj) fail(&SymmetryReport::central_column, "central column", c, c);
        for (std::size_t a = c + 1; a <= n; ++a) {
            if (!m(a, c).is_zero()) fail(&SymmetryReport::central_column, "central column", a, c);
        }
    }
    return rep;
}

bool MatrixPattern::matches(const PolyMatrix& m) const {
    if (m.rows() != n || m.cols() != n) return false;
    const FieldCtx& ctx = m.ctx();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const auto& cell = at(r, c);
            if (!cell) continue;
            if (m(r, c) != Poly::constant(ctx, ctx.from_int(*cell))) return false;
        }
    }
    return true;
}

std::optional<MatrixPattern> closed_form_oracle(const BlockSpec& spec) {
    const std::size_t n = spec.n;
    const std::int64_t sj = spec.j % 2 == 0 ? 1 : -1;
    MatrixPattern pat{n, std::vector<std::optional<std::int64_t>>(n * n, std::int64_t{0})};
    auto cell = [&](std::size_t a, std::size_t b) -> std::optional<std::int64_t>& { return pat.cells[(a - 1) * n + (b - 1)]; };

    if (n <= spec.j + 1) {
        for (std::size_t a = 1; a <= n; ++a) cell(a, n + 1 - a) = sj;
        return pat;
    }
    if (n == spec.j + 2) {
        cell(1, 1) = 1;
        for (std::size_t b = 2; b + 1 <= n; ++b) cell(1, b) = std::nullopt;
        for (std::size_t a = 2; a <= n; ++a) cell(a, n + 1 - a) = sj;
        return pat;
    }
    if (spec.j == 0 && n >= 2 && n <= spec.q() + 2) {
        for (std::size_t a = 1; a <= n; ++a) cell(a, 1) = 1;
        for (std::size_t a = 2; a + 1 <= n; ++a) {
            cell(a, n) = -1;
            cell(a, n + 1 - a) = 1;
        }
        return pat;
    }
    return std::nullopt;
}

}  // namespace atkin
