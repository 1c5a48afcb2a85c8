#pragma once

// Parallel sweeps over blocks.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atkin/conjectures.hpp"

namespace atkin {

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    bool empty() const { return hi < lo; }
    /// "a..b" or a single integer.
    static IntRange parse(const std::string& s);
};

enum class OutputFormat { csv, json };

struct SweepConfig {
    /// Field orders q.
    std::vector<std::uint32_t> fields{2, 3, 4, 5};
    /// Class indices; clipped to [0, q-2] per field. Unset means all.
    std::optional<IntRange> j_range;
    IntRange n_range{1, 31};
    std::int64_t n_cap = 31;
    /// Restricts each field to the class of this type.
    std::optional<std::int64_t> m;
    CheckSet checks = CheckSet::all();
    OutputFormat format = OutputFormat::csv;
    /// Empty means standard output.
    std::string out;
    std::size_t workers = 0;  // 0: hardware concurrency
    bool strict = false;

    /// Throws std::invalid_argument for empty field lists or n above the cap.
    void validate() const;
    /// Applies key=value settings (keys: q, j, n, n_cap, m, checks, format,
    /// out, workers, strict). Throws std::invalid_argument on unknown keys.
    void apply(const std::map<std::string, std::string>& settings);
};

/// Reads key=value lines; blank lines and lines starting with # are skipped.
std::map<std::string, std::string> read_config_file(const std::string& path);

std::vector<BlockSpec> sweep_blocks(const SweepConfig& cfg);

struct SweepResult {
    /// Sorted by (q, k, m, j, n).
    std::vector<BlockVerdict> rows;
    /// "label: what" for each internal defect; such blocks have no row.
    std::vector<std::string> defects;
    /// "label: what" for each contradicted conjecture or bound.
    std::vector<std::string> violations;

    /// 2 on internal defects, 3 on violations under strict mode, else 0.
    int exit_code(bool strict) const;
};

SweepResult run_sweep(const SweepConfig& cfg);
/// Verdicts for arbitrary blocks, computed in parallel, in input order.
SweepResult run_blocks(const std::vector<BlockSpec>& blocks, const CheckSet& checks, std::size_t workers);

}  // namespace atkin
