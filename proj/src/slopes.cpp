#include "atkin/slopes.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace atkin {

namespace {

// Cross product of (b - a) and (c - a); <= 0 means b is not strictly below ac.
__int128 cross(const PolygonPoint& a, const PolygonPoint& b, const PolygonPoint& c) {
    return static_cast<__int128>(b.i - a.i) * (c.v - a.v) - static_cast<__int128>(b.v - a.v) * (c.i - a.i);
}

std::string point_str(const PolygonPoint& p) { return "(" + std::to_string(p.i) + "," + std::to_string(p.v) + ")"; }

}  // namespace

NewtonPolygon newton_polygon(const XPoly& p) {
    if (!p.is_monic()) throw std::invalid_argument("Newton polygon needs a monic polynomial");
    NewtonPolygon np;
    np.degree = static_cast<std::size_t>(p.degree());
    np.r_ker = p.trailing_x_power();
    for (std::size_t i = 0; i <= np.degree; ++i) {
        const Poly c = p.lambda(i);
        if (c.is_zero()) continue;
        np.points.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(c.valuation().value())});
    }
    for (const auto& pt : np.points) {
        while (np.hull.size() >= 2 && cross(np.hull[np.hull.size() - 2], np.hull.back(), pt) <= 0) np.hull.pop_back();
        np.hull.push_back(pt);
    }
    return np;
}

SlopeMultiset slope_multiset(const NewtonPolygon& np) {
    SlopeMultiset out;
    for (std::size_t e = 1; e < np.hull.size(); ++e) {
        const auto& a = np.hull[e - 1];
        const auto& b = np.hull[e];
        out.push_back({Rational(b.v - a.v, b.i - a.i), static_cast<std::size_t>(b.i - a.i)});
    }
    return out;
}

SlopeMultiset normalize_slopes(SlopeMultiset s) {
    std::sort(s.begin(), s.end(), [](const SlopeSegment& a, const SlopeSegment& b) { return a.slope < b.slope; });
    SlopeMultiset out;
    for (const auto& seg : s) {
        if (seg.multiplicity == 0) continue;
        if (!out.empty() && out.back().slope == seg.slope) {
            out.back().multiplicity += seg.multiplicity;
        } else {
            out.push_back(seg);
        }
    }
    return out;
}

SlopeMultiset merge_slopes(const SlopeMultiset& a, const SlopeMultiset& b) {
    SlopeMultiset all = a;
    all.insert(all.end(), b.begin(), b.end());
    return normalize_slopes(std::move(all));
}

std::size_t multiplicity_of(const SlopeMultiset& s, Rational slope) {
    for (const auto& seg : s)
        if (seg.slope == slope) return seg.multiplicity;
    return 0;
}

std::size_t total_multiplicity(const SlopeMultiset& s) {
    std::size_t total = 0;
    for (const auto& seg : s) total += seg.multiplicity;
    return total;
}

std::string render_slopes(const SlopeMultiset& s) {
    std::string out;
    for (const auto& seg : s) {
        if (!out.empty()) out += ';';
        out += std::to_string(seg.slope.num()) + "/" + std::to_string(seg.slope.den()) + ":" +
               std::to_string(seg.multiplicity);
    }
    return out;
}

SlopeMultiset parse_slopes(const std::string& s) {
    SlopeMultiset out;
    if (s.empty()) return out;
    if (s.back() == ';') throw std::invalid_argument("trailing ';' in slope list");
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ';')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad slope entry: '" + item + "'");
        std::size_t mult = 0;
        const char* first = item.data() + colon + 1;
        const char* last = item.data() + item.size();
        const auto [ptr, ec] = std::from_chars(first, last, mult);
        if (ec != std::errc() || ptr != last || first == last || mult == 0) throw std::invalid_argument("bad multiplicity: '" + item + "'");
        out.push_back({Rational::parse(item.substr(0, colon)), mult});
    }
    return out;
}

BoundReport verify_bounds(const BlockSpec& spec, const NewtonPolygon& np) {
    BoundReport rep;
    const std::int64_t j = spec.j, n = spec.n, qm1 = spec.q() - 1;
    const std::int64_t r = static_cast<std::int64_t>(np.r_ker);
    const Rational lowest(j + 1);
    const Rational upper(j + 1 + ((n - r) * n - 1) * qm1);
    const Rational half_k(static_cast<std::int64_t>(spec.k), 2);

    for (const auto& seg : slope_multiset(np)) {
        const std::string tag = "slope " + seg.slope.to_string() + " (mult " + std::to_string(seg.multiplicity) + ")";
        if (seg.slope < lowest) {
            rep.min_slope_ok = false;
            rep.witnesses.push_back(tag + " below j+1=" + lowest.to_string());
        }
        if (seg.slope == lowest && seg.multiplicity > 1) {
            rep.min_mult_ok = false;
            rep.witnesses.push_back(tag + " exceeds multiplicity 1 at j+1");
        }
        if (seg.slope > upper) {
            rep.upper_bound_ok = false;
            rep.witnesses.push_back(tag + " above " + upper.to_string());
        }
        const Rational mult_cap = Rational(2) * (seg.slope - lowest) + Rational(qm1);
        if (Rational(static_cast<std::int64_t>(seg.multiplicity) * qm1) > mult_cap) {
            rep.mult_bound_ok = false;
            rep.witnesses.push_back(tag + " exceeds multiplicity bound");
        }
        if (seg.slope > half_k) {
            rep.half_k_ok = false;
            rep.witnesses.push_back(tag + " above k/2=" + half_k.to_string());
        }
    }
    for (const auto& pt : np.points) {
        const std::int64_t i = pt.i;
        if (i == 0) continue;
        const std::int64_t lo = i * (j + 1) + i * (i - 1) / 2 * qm1;
        const std::int64_t hi = i * (j + 1) + (i * n - i * (i + 1) / 2) * qm1;
        if (pt.v < lo || pt.v > hi) {
            rep.sandwich_ok = false;
            rep.witnesses.push_back("point " + point_str(pt) + " outside [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
        }
    }
    return rep;
}

}  // namespace atkin
