#pragma once

// Dense matrices with entries in F_q[t].

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "atkin/poly.hpp"

namespace atkin {

using PolyVec = std::vector<Poly>;

class PolyMatrix {
public:
    /// Zero matrix.
    PolyMatrix(FieldCtx ctx, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(FieldCtx ctx, std::size_t n);
    /// Row-major integer entries reduced into the prime subfield.
    static PolyMatrix from_ints(FieldCtx ctx, std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static PolyMatrix from_rows(FieldCtx ctx, std::size_t cols, const std::vector<PolyVec>& rows);
    static PolyMatrix from_columns(FieldCtx ctx, std::size_t rows, const std::vector<PolyVec>& cols);

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    const Poly& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Poly& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    /// Bounds-checked access.
    const Poly& at(std::size_t r, std::size_t c) const;

    std::span<const Poly> row(std::size_t r) const { return {e_.data() + r * cols_, cols_}; }
    PolyVec column(std::size_t c) const;
    void swap_rows(std::size_t a, std::size_t b);

    PolyMatrix transpose() const;
    PolyMatrix scaled(const Poly& s) const;
    PolyVec apply(std::span<const Poly> v) const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    /// Aligned rendering; prime-subfield coefficients are shown as signed
    /// integers in (-p/2, p/2], e.g. "-t^3" or "t^2 + 2t^5".
    std::string render() const;

private:
    FieldCtx ctx_;
    std::size_t rows_, cols_;
    std::vector<Poly> e_;
};

/// Compact signed rendering of one entry as used by PolyMatrix::render.
std::string render_entry(const Poly& p);

}  // namespace atkin
