#pragma once

// Newton polygons of characteristic polynomials over F_q[t] and the slope
// bounds they must satisfy.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "atkin/blocks.hpp"
#include "atkin/rational.hpp"
#include "atkin/xpoly.hpp"

namespace atkin {

struct PolygonPoint {
    std::int64_t i;
    std::int64_t v;
    friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

/// For P(X) = X^n + lambda_1 X^{n-1} + ... + lambda_n, the points
/// (i, v_t(lambda_i)) of the nonzero coefficients and their lower hull.
struct NewtonPolygon {
    std::size_t degree = 0;
    std::vector<PolygonPoint> points;
    std::vector<PolygonPoint> hull;
    /// Largest power of X dividing P.
    std::size_t r_ker = 0;
};

struct SlopeSegment {
    Rational slope;
    std::size_t multiplicity = 0;
    friend bool operator==(const SlopeSegment&, const SlopeSegment&) = default;
};

/// Sorted by slope, no repeated slopes.
using SlopeMultiset = std::vector<SlopeSegment>;

/// Throws std::invalid_argument unless p is monic in X.
NewtonPolygon newton_polygon(const XPoly& p);
SlopeMultiset slope_multiset(const NewtonPolygon& np);

/// Sorts and merges equal slopes; drops zero multiplicities.
SlopeMultiset normalize_slopes(SlopeMultiset s);
SlopeMultiset merge_slopes(const SlopeMultiset& a, const SlopeMultiset& b);
std::size_t multiplicity_of(const SlopeMultiset& s, Rational slope);
std::size_t total_multiplicity(const SlopeMultiset& s);

/// "num/den:mult;num/den:mult"; empty string for no slopes.
std::string render_slopes(const SlopeMultiset& s);
/// Inverse of render_slopes; throws std::invalid_argument on bad input.
SlopeMultiset parse_slopes(const std::string& s);

struct BoundReport {
    bool min_slope_ok = true;   // every slope >= j+1
    bool min_mult_ok = true;    // slope j+1 has multiplicity <= 1
    bool upper_bound_ok = true; // slope <= j+1 + ((n - r_ker) n - 1)(q-1)
    bool mult_bound_ok = true;  // d(alpha)(q-1) <= 2(alpha - j - 1) + (q-1)
    bool half_k_ok = true;      // slope <= k/2 (conjectural)
    bool sandwich_ok = true;    // P_i <= v_t(lambda_i) <= R_i
    std::vector<std::string> witnesses;

    /// The proven bounds; half_k_ok is reported separately.
    bool proven_ok() const { return min_slope_ok && min_mult_ok && upper_bound_ok && mult_bound_ok && sandwich_ok; }
};

BoundReport verify_bounds(const BlockSpec& spec, const NewtonPolygon& np);

}  // namespace atkin
