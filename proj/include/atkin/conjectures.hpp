#pragma once

// Old and new subspaces of a block and the per-block conjecture checks.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atkin/blocks.hpp"
#include "atkin/linalg.hpp"
#include "atkin/slopes.hpp"

namespace atkin {

/// Ker(MA) + Ker(MD). Throws InternalDefect if the sum is not direct.
SubspaceBasis old_space(const BlockMatrices& bm);
/// Ker(T) intersected with F(Ker(T)).
SubspaceBasis new_space(const BlockMatrices& bm);
/// det(t^k I - (TF)^2) != 0.
bool direct_sum_ok(const BlockMatrices& bm, std::uint64_t k);
/// Ker(MA) intersected with F(Ker(I+MA)) is zero.
bool tt_injective(const BlockMatrices& bm);
/// The minimal polynomial of U is separable.
bool is_diagonalizable(const BlockMatrices& bm);

struct OldSlopes {
    SlopeMultiset slopes;
    /// Power of X dividing the characteristic polynomial of U on the old space.
    std::size_t r_ker = 0;
};

/// Slopes of U restricted to the old space. Throws InternalDefect if the
/// old space is not U-stable.
OldSlopes old_slopes(const BlockMatrices& bm);

struct CheckSet {
    bool symmetry = true;
    bool sum = true;
    bool injective = true;
    bool diag = true;
    bool bounds = true;
    bool slopes = true;

    static CheckSet all() { return {}; }
    static CheckSet none() { return {false, false, false, false, false, false}; }
    /// Comma-separated names from symmetry, sum, injective, diag, bounds,
    /// slopes, all. Throws std::invalid_argument on unknown names.
    static CheckSet parse(const std::string& list);
};

struct BlockVerdict {
    std::uint32_t q = 0, p = 0, r_ext = 0;
    std::uint32_t j = 0, n = 0;
    std::uint64_t k = 0;
    std::uint32_t m = 0;
    std::size_t r_ker = 0, rank_M = 0, dim_old = 0, dim_new = 0;
    std::optional<bool> sum_direct, tt_injective, diagonalizable;
    std::optional<SlopeMultiset> slopes, old_slopes;
    std::optional<bool> min_slope_ok, min_mult_ok, upper_bound_ok, mult_bound_ok, half_k_ok, sandwich_ok;
    std::optional<bool> symmetry_ok;
    std::vector<std::string> notes;

    friend bool operator==(const BlockVerdict&, const BlockVerdict&) = default;
};

/// Runs the selected checks on one block. Internal inconsistencies throw
/// InternalDefect; conjecture outcomes are recorded as data.
BlockVerdict block_verdict(const BlockSpec& spec, const CheckSet& checks = CheckSet::all());

/// Human-readable descriptions of every conjecture or bound the verdict
/// contradicts (empty when everything checked holds).
std::vector<std::string> conjecture_violations(const BlockVerdict& v);

/// ell(k): the smallest integer with q^ell + 2 >= k.
std::uint32_t family_exponent(std::uint64_t q, std::uint64_t k);

struct FamilyStep {
    std::uint64_t k = 0;
    std::uint32_t ell = 0;
    SlopeMultiset old_slopes;
    std::size_t dim_new = 0;
    std::uint64_t next_k = 0;
    SlopeMultiset predicted_next;
    SlopeMultiset observed_next;
    /// Every predicted slope occurs at next_k with exactly the predicted
    /// multiplicity.
    bool match = false;
    /// Slopes at next_k beyond the prediction.
    SlopeMultiset extra;
};

struct FamilyReport {
    std::uint32_t q = 0;
    std::uint32_t m = 0;
    std::uint64_t k0 = 0;
    /// Added to ell(k) when stepping; nonzero only for control runs.
    int ell_shift = 0;
    std::vector<FamilyStep> steps;

    bool all_match() const;
};

/// Walks k -> k + (q-1) q^{ell(k) + ell_shift} from k0 and compares old
/// slopes along the chain. Throws std::invalid_argument when (k0, m) has no
/// block or the shifted exponent is negative.
FamilyReport family_check(FieldCtx ctx, std::int64_t m, std::int64_t k0, std::size_t steps, int ell_shift = 0);

/// Smallest type m in [0, q-2] for which weight k has a block.
std::optional<std::uint32_t> default_type(FieldCtx ctx, std::int64_t k);

}  // namespace atkin
