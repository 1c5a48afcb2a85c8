#pragma once

// Exact linear algebra over F_q[t] and its fraction field F_q(t).
//
// Everything is fraction-free: eliminations divide only by previous pivots,
// where the division is exact, and subspaces are stored as primitive
// polynomial vectors.

#include <cstddef>
#include <vector>

#include "atkin/matrix.hpp"
#include "atkin/xpoly.hpp"

namespace atkin {

/// Determinant by Bareiss elimination. Throws std::invalid_argument if the
/// matrix is not square.
Poly bareiss_det(const PolyMatrix& m);

/// Fraction-free reduced row echelon form.
///
/// Pivot rows come first, in the order of their pivot columns. Every pivot
/// entry equals `scale`, and `reduced / scale` is the reduced echelon form of
/// the input over F_q(t).
struct EchelonForm {
    PolyMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    Poly scale;

    std::size_t rank() const { return pivot_cols.size(); }
};

EchelonForm fraction_free_rref(const PolyMatrix& m);

/// Rank over F_q(t).
std::size_t rank(const PolyMatrix& m);

/// gcd of the entries, monic; zero for the zero vector.
Poly content(std::span<const Poly> v);

/// Subspace of F_q(t)^n in canonical form: the rows of its reduced echelon
/// form, each cleared to a primitive F_q[t] vector whose pivot entry has
/// leading coefficient 1. Two subspaces are equal iff their bases compare
/// equal.
class SubspaceBasis {
public:
    /// The zero subspace.
    SubspaceBasis(FieldCtx ctx, std::size_t ambient) : ctx_(ctx), ambient_(ambient) {}

    /// Span of arbitrary vectors (dependent or zero vectors allowed).
    static SubspaceBasis span(FieldCtx ctx, std::size_t ambient, const std::vector<PolyVec>& vectors);

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return vectors_.size(); }
    bool is_zero() const { return vectors_.empty(); }
    const std::vector<PolyVec>& vectors() const { return vectors_; }
    /// ambient x dim matrix whose columns are the basis vectors.
    PolyMatrix as_columns() const;
    bool contains(std::span<const Poly> v) const;

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
        return a.ctx_ == b.ctx_ && a.ambient_ == b.ambient_ && a.vectors_ == b.vectors_;
    }

private:
    FieldCtx ctx_;
    std::size_t ambient_;
    std::vector<PolyVec> vectors_;
};

/// Right kernel over F_q(t).
SubspaceBasis kernel_basis(const PolyMatrix& m);
/// Zassenhaus intersection.
SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
/// Canonical basis of m(S).
SubspaceBasis apply_map_to_basis(const PolyMatrix& m, const SubspaceBasis& s);

/// det(X I - m) by the division-free Berkowitz algorithm.
XPoly berkowitz_charpoly(const PolyMatrix& m);

/// Monic minimal polynomial over F_q(t) as the lcm of the Krylov relations
/// of the standard basis vectors. Checks that the result annihilates m and
/// divides the characteristic polynomial.
XPoly minimal_polynomial(const PolyMatrix& m);

/// f(m) by Horner's rule.
PolyMatrix evaluate(const XPoly& f, const PolyMatrix& m);

/// Matrix of m restricted to an m-stable subspace S, in the basis of S:
/// m|_S = scaled / denominator.
struct Restriction {
    PolyMatrix scaled;
    Poly denominator;
};

/// Throws std::domain_error if S is not m-stable.
Restriction restrict_to_subspace(const PolyMatrix& m, const SubspaceBasis& s);

/// Characteristic polynomial of m restricted to the m-stable subspace S. The
/// coefficients must lie in F_q[t]; otherwise std::domain_error is thrown.
XPoly restricted_charpoly(const PolyMatrix& m, const SubspaceBasis& s);

}  // namespace atkin
