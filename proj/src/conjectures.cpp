#include "atkin/conjectures.hpp"

#include <sstream>
#include <stdexcept>

#include "atkin/error.hpp"

namespace atkin {

namespace {

OldSlopes slopes_on(const BlockMatrices& bm, const SubspaceBasis& old) {
    XPoly chi(bm.U.ctx());
    try {
        chi = restricted_charpoly(bm.U, old);
    } catch (const std::domain_error& e) {
        throw InternalDefect(std::string("old space is not U-stable: ") + e.what());
    }
    const NewtonPolygon np = newton_polygon(chi);
    return {slope_multiset(np), np.r_ker};
}

bool all_annihilated(const PolyMatrix& m, const SubspaceBasis& s) {
    for (const auto& v : s.vectors()) {
        for (const auto& x : m.apply(v))
            if (!x.is_zero()) return false;
    }
    return true;
}

}  // namespace

SubspaceBasis old_space(const BlockMatrices& bm) {
    const SubspaceBasis ka = kernel_basis(bm.M * bm.A);
    const SubspaceBasis kd = kernel_basis(bm.U);
    SubspaceBasis sum = subspace_sum(ka, kd);
    if (sum.dim() != ka.dim() + kd.dim()) throw InternalDefect("Ker(MA) + Ker(MD) is not a direct sum");
    return sum;
}

SubspaceBasis new_space(const BlockMatrices& bm) {
    const SubspaceBasis kt = kernel_basis(bm.T);
    return subspace_intersect(kt, apply_map_to_basis(bm.F, kt));
}

bool direct_sum_ok(const BlockMatrices& bm, std::uint64_t k) {
    const FieldCtx& ctx = bm.T.ctx();
    const std::size_t n = bm.T.rows();
    const PolyMatrix tf = bm.T * bm.F;
    const PolyMatrix lhs = PolyMatrix::identity(ctx, n).scaled(Poly::monomial(ctx, ctx.one(), k)) - tf * tf;
    return !bareiss_det(lhs).is_zero();
}

bool tt_injective(const BlockMatrices& bm) {
    const SubspaceBasis ka = kernel_basis(bm.M * bm.A);
    const SubspaceBasis f_kt = apply_map_to_basis(bm.F, kernel_basis(bm.T));
    return subspace_intersect(ka, f_kt).is_zero();
}

bool is_diagonalizable(const BlockMatrices& bm) { return is_separable(minimal_polynomial(bm.U)); }

OldSlopes old_slopes(const BlockMatrices& bm) { return slopes_on(bm, old_space(bm)); }

CheckSet CheckSet::parse(const std::string& list) {
    CheckSet c = none();
    std::istringstream in(list);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (name == "all") return all();
        if (name == "symmetry") c.symmetry = true;
        else if (name == "sum") c.sum = true;
        else if (name == "injective") c.injective = true;
        else if (name == "diag") c.diag = true;
        else if (name == "bounds") c.bounds = true;
        else if (name == "slopes") c.slopes = true;
        else if (!name.empty()) throw std::invalid_argument("unknown check '" + name + "'");
    }
    return c;
}

BlockVerdict block_verdict(const BlockSpec& spec, const CheckSet& checks) {
    BlockVerdict v;
    v.q = spec.q();
    v.p = spec.ctx.p();
    v.r_ext = spec.ctx.r_ext();
    v.j = spec.j;
    v.n = spec.n;
    v.k = spec.k;
    v.m = spec.m;

    const BlockMatrices bm = build_block_matrices(spec);
    const std::size_t n = spec.n;
    v.rank_M = rank(bm.M);
    v.r_ker = n - v.rank_M;

    const SubspaceBasis ker_ma = kernel_basis(bm.M * bm.A);
    const SubspaceBasis ker_md = kernel_basis(bm.U);
    if (ker_ma.dim() != v.r_ker || ker_md.dim() != v.r_ker) {
        throw InternalDefect("kernel dimensions of MA and MD differ from n - rank(M) for " + spec.label());
    }
    const SubspaceBasis old = subspace_sum(ker_ma, ker_md);
    if (old.dim() != 2 * v.r_ker) throw InternalDefect("Ker(MA) + Ker(MD) is not direct for " + spec.label());
    v.dim_old = old.dim();

    const SubspaceBasis ker_t = kernel_basis(bm.T);
    const SubspaceBasis f_ker_t = apply_map_to_basis(bm.F, ker_t);
    const SubspaceBasis fresh = subspace_intersect(ker_t, f_ker_t);
    if (!all_annihilated(bm.T, fresh) || !all_annihilated(bm.Tp_scaled, fresh)) {
        throw InternalDefect("a new-space vector is not killed by both traces for " + spec.label());
    }
    v.dim_new = fresh.dim();
    const bool dims_fill = v.dim_old + v.dim_new == n;

    if (checks.symmetry) {
        const SymmetryReport sym = check_symmetries(spec, bm.M);
        v.symmetry_ok = sym.all();
        if (!sym.all()) {
            v.notes.push_back(sym.violated_rule + " fails at (" + std::to_string(sym.first_violation->first) + "," +
                              std::to_string(sym.first_violation->second) + ")");
        }
    }
    if (checks.sum) {
        const bool det_ok = direct_sum_ok(bm, spec.k);
        const bool trivial = subspace_intersect(old, fresh).is_zero();
        if (det_ok != dims_fill || dims_fill != trivial) {
            throw InternalDefect("direct-sum predicates disagree for " + spec.label());
        }
        v.sum_direct = det_ok;
    }
    if (checks.injective) v.tt_injective = subspace_intersect(ker_ma, f_ker_t).is_zero();
    if (checks.diag) v.diagonalizable = is_diagonalizable(bm);

    const Rational half_k(static_cast<std::int64_t>(spec.k), 2);
    if (checks.bounds || checks.slopes) {
        const NewtonPolygon np = newton_polygon(berkowitz_charpoly(bm.U));
        if (np.r_ker != v.r_ker) {
            throw InternalDefect("X-adic order of the characteristic polynomial differs from n - rank(M) for " +
                                 spec.label());
        }
        v.slopes = slope_multiset(np);
        if (checks.bounds) {
            const BoundReport b = verify_bounds(spec, np);
            v.min_slope_ok = b.min_slope_ok;
            v.min_mult_ok = b.min_mult_ok;
            v.upper_bound_ok = b.upper_bound_ok;
            v.mult_bound_ok = b.mult_bound_ok;
            v.half_k_ok = b.half_k_ok;
            v.sandwich_ok = b.sandwich_ok;
            v.notes.insert(v.notes.end(), b.witnesses.begin(), b.witnesses.end());
        }
    }
    if (checks.slopes) {
        const OldSlopes os = slopes_on(bm, old);
        if (os.r_ker != v.r_ker) throw InternalDefect("old-space kernel order differs from r_ker for " + spec.label());
        v.old_slopes = os.slopes;
        if (multiplicity_of(os.slopes, half_k) > 0) v.notes.push_back("old slopes contain k/2");
        if (dims_fill) {
            const SlopeMultiset expected = merge_slopes(os.slopes, {{half_k, v.dim_new}});
            if (expected != *v.slopes) v.notes.push_back("slopes differ from old slopes plus k/2 on new space");
        }
    }
    return v;
}

std::vector<std::string> conjecture_violations(const BlockVerdict& v) {
    std::vector<std::string> out;
    auto flag = [&](const std::optional<bool>& f, const char* what) {
        if (f && !*f) out.emplace_back(what);
    };
    flag(v.symmetry_ok, "symmetry");
    flag(v.sum_direct, "direct sum");
    flag(v.tt_injective, "T_t injectivity");
    if (v.diagonalizable) {
        const bool expected = v.q % 2 == 1 || v.dim_new <= 1;
        if (*v.diagonalizable != expected) out.emplace_back("diagonalizability pattern");
    }
    flag(v.min_slope_ok, "smallest slope");
    flag(v.min_mult_ok, "smallest slope multiplicity");
    flag(v.upper_bound_ok, "slope upper bound");
    flag(v.mult_bound_ok, "multiplicity bound");
    flag(v.half_k_ok, "slope at most k/2");
    flag(v.sandwich_ok, "coefficient valuation bounds");
    return out;
}

std::uint32_t family_exponent(std::uint64_t q, std::uint64_t k) {
    std::uint32_t ell = 0;
    std::uint64_t power = 1;
    while (power + 2 < k) {
        power *= q;
        ++ell;
    }
    return ell;
}

bool FamilyReport::all_match() const {
    for (const auto& s : steps)
        if (!s.match) return false;
    return true;
}

std::optional<std::uint32_t> default_type(FieldCtx ctx, std::int64_t k) {
    for (std::uint32_t m = 0; m + 1 < std::max<std::uint32_t>(ctx.q(), 2); ++m)
        if (enumerate_blocks(ctx, k, m)) return m;
    return std::nullopt;
}

FamilyReport family_check(FieldCtx ctx, std::int64_t m, std::int64_t k0, std::size_t steps, int ell_shift) {
    const auto first = enumerate_blocks(ctx, k0, m);
    if (!first) {
        throw std::invalid_argument("weight " + std::to_string(k0) + " has no block of type " + std::to_string(m) +
                                    " for q=" + std::to_string(ctx.q()));
    }
    FamilyReport rep;
    rep.q = ctx.q();
    rep.m = first->m;
    rep.k0 = first->k;
    rep.ell_shift = ell_shift;

    struct Data {
        SlopeMultiset old;
        std::size_t dim_new;
    };
    auto data_at = [&](const BlockSpec& spec) {
        const BlockMatrices bm = build_block_matrices(spec);
        return Data{old_slopes(bm).slopes, new_space(bm).dim()};
    };

    BlockSpec spec = *first;
    Data cur = data_at(spec);
    for (std::size_t s = 0; s < steps; ++s) {
        FamilyStep step;
        step.k = spec.k;
        step.ell = family_exponent(rep.q, spec.k);
        const int shifted = static_cast<int>(step.ell) + ell_shift;
        if (shifted < 0) throw std::invalid_argument("shifted family exponent is negative");
        std::uint64_t power = 1;
        for (int i = 0; i < shifted; ++i) power *= rep.q;
        step.next_k = spec.k + (rep.q - 1) * power;
        step.old_slopes = cur.old;
        step.dim_new = cur.dim_new;
        step.predicted_next =
            merge_slopes(cur.old, {{Rational(static_cast<std::int64_t>(spec.k), 2), cur.dim_new}});

        const auto next = enumerate_blocks(ctx, static_cast<std::int64_t>(step.next_k), rep.m);
        if (!next) throw InternalDefect("family step left the type class");
        const Data nd = data_at(*next);
        step.observed_next = nd.old;
        step.match = true;
        for (const auto& seg : step.predicted_next)
            if (multiplicity_of(nd.old, seg.slope) != seg.multiplicity) step.match = false;
        for (const auto& seg : nd.old)
            if (multiplicity_of(step.predicted_next, seg.slope) == 0) step.extra.push_back(seg);
        rep.steps.push_back(std::move(step));
        spec = *next;
        cur = nd;
    }
    return rep;
}

}  // namespace atkin
