#pragma once

// Blocks C_j of the U_t action: their parameters, the coefficient matrix M
// and the derived matrices D, A, F, U, T and the rescaled twisted trace.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atkin/matrix.hpp"

namespace atkin {

/// One block: class index j in [0, q-2], dimension n >= 1, weight
/// k = 2j + 2 + (n-1)(q-1) and type m = j + 1 mod (q-1).
struct BlockSpec {
    FieldCtx ctx;
    std::uint32_t j = 0;
    std::uint32_t n = 0;
    std::uint64_t k = 0;
    std::uint32_t m = 0;

    /// Throws std::invalid_argument unless 0 <= j <= q-2 and n >= 1.
    static BlockSpec make(FieldCtx ctx, std::int64_t j, std::int64_t n);

    std::uint32_t q() const { return ctx.q(); }
    /// s_i = j + 1 + (i-1)(q-1) for 1 <= i <= n.
    std::uint64_t s(std::size_t i) const { return j + 1 + (i - 1) * std::uint64_t{q() - 1}; }
    std::string label() const;

    friend bool operator==(const BlockSpec& a, const BlockSpec& b) {
        return a.ctx == b.ctx && a.j == b.j && a.n == b.n;
    }
};

/// The block of weight k and type m, if the space is nonzero.
std::optional<BlockSpec> enumerate_blocks(FieldCtx ctx, std::int64_t k, std::int64_t m);

/// For odd q, the class j + (q-1)/2 at the same weight (type shifted by
/// (q-1)/2). Empty for even q or when that class has no cocycles.
std::optional<BlockSpec> sibling_block(const BlockSpec& spec);

/// Coefficient matrix M of the block; constant entries in the prime field.
PolyMatrix build_M(const BlockSpec& spec);

struct BlockMatrices {
    PolyMatrix M, D, A, F, U, T, Tp_scaled;
};

/// Builds every matrix of the block and checks AF = D, F^2 = t^k I,
/// T^2 = T, T M A = 0 and T M = 0, throwing InternalDefect on failure.
BlockMatrices build_block_matrices(const BlockSpec& spec);

struct SymmetryReport {
    bool columns = true;        // m_{a,n+1-b} = (-1)^{j+1} m_{a,b} off the diagonals
    bool diag_antidiag = true;  // m_{a,n+1-a} = (-1)^{j+1} (m_{a,a} - 1)
    bool lower_antidiag = true; // lower half: antidiagonal (-1)^j, diagonal 0
    bool below_antidiag = true; // lower half: zeros between antidiagonal and diagonal
    bool central_column = true; // odd n only
    /// First violating cell (1-based row, column) and the rule it broke.
    std::optional<std::pair<std::size_t, std::size_t>> first_violation;
    std::string violated_rule;

    bool all() const { return columns && diag_antidiag && lower_antidiag && below_antidiag && central_column; }
};

SymmetryReport check_symmetries(const BlockSpec& spec);
SymmetryReport check_symmetries(const BlockSpec& spec, const PolyMatrix& m);

/// Predicted constant matrix in which some cells are unconstrained.
struct MatrixPattern {
    std::size_t n = 0;
    /// Row-major signed integers; std::nullopt marks a wildcard cell.
    std::vector<std::optional<std::int64_t>> cells;

    const std::optional<std::int64_t>& at(std::size_t r, std::size_t c) const { return cells[r * n + c]; }
    /// Cell-by-cell comparison with integers reduced into the field.
    bool matches(const PolyMatrix& m) const;
};

/// Known closed forms of M: antidiagonal when n <= j+1, the j = 0 shape
/// for 2 <= n <= q+2, and the n = j+2 shape. Empty outside these ranges.
std::optional<MatrixPattern> closed_form_oracle(const BlockSpec& spec);

}  // namespace atkin
