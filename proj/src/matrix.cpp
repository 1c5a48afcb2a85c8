#include "atkin/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace atkin {

PolyMatrix::PolyMatrix(FieldCtx ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), e_(rows * cols, Poly(ctx)) {}

PolyMatrix PolyMatrix::identity(FieldCtx ctx, std::size_t n) {
    PolyMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(ctx, ctx.one());
    return m;
}

PolyMatrix PolyMatrix::from_ints(FieldCtx ctx, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    PolyMatrix m(ctx, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
        std::size_t j = 0;
        for (auto v : row) m(i, j++) = Poly::constant(ctx, ctx.from_int(v));
        ++i;
    }
    return m;
}

PolyMatrix PolyMatrix::from_rows(FieldCtx ctx, std::size_t cols, const std::vector<PolyVec>& rows) {
    PolyMatrix m(ctx, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row has wrong length");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

PolyMatrix PolyMatrix::from_columns(FieldCtx ctx, std::size_t rows, const std::vector<PolyVec>& cols) {
    PolyMatrix m(ctx, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column has wrong length");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

const Poly& PolyMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return (*this)(r, c);
}

PolyVec PolyMatrix::column(std::size_t c) const {
    PolyVec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(ctx_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

PolyMatrix PolyMatrix::scaled(const Poly& s) const {
    PolyMatrix m(ctx_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
    return m;
}

PolyVec PolyMatrix::apply(std::span<const Poly> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    PolyVec out(rows_, Poly(ctx_));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Poly& a = (*this)(r, c);
            if (a.is_zero() || v[c].is_zero()) continue;
            out[r] += a * v[c];
        }
    }
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    PolyMatrix m(a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Poly& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Poly& y = b(k, j);
                if (y.is_zero()) continue;
                m(i, j) += x * y;
            }
        }
    }
    return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    PolyMatrix m = a;
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
    return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
    PolyMatrix m = a;
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] -= b.e_[i];
    return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.ctx_ == b.ctx_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::string render_entry(const Poly& p) {
    if (p.is_zero()) return "0";
    const FieldCtx& f = p.ctx();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const FieldElem c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string mag;
        bool negative = false;
        if (f.in_prime_subfield(c)) {
            std::int64_t v = f.signed_value(c);
            negative = v < 0;
            if (negative) v = -v;
            if (v != 1 || i == 0) mag = std::to_string(v);
        } else {
            mag = f.to_string(c);
        }
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        os << mag;
        if (i >= 1) os << 't';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::string PolyMatrix::render() const {
    std::vector<std::string> cells(e_.size());
    std::vector<std::size_t> width(cols_, 1);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            cells[r * cols_ + c] = render_entry((*this)(r, c));
            width[c] = std::max(width[c], cells[r * cols_ + c].size());
        }
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            const std::string& s = cells[r * cols_ + c];
            os << (c ? "  " : " ") << std::string(width[c] - s.size(), ' ') << s;
        }
        os << " ]\n";
    }
    return os.str();
}

}  // namespace atkin
