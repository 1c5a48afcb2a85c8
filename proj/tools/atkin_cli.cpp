// atkin: inspect blocks of the U_t action, sweep them, and follow slope
// families.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "atkin/conjectures.hpp"
#include "atkin/error.hpp"
#include "atkin/linalg.hpp"
#include "atkin/report.hpp"
#include "atkin/sweep.hpp"

using namespace atkin;

namespace {

std::string flag(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "not checked"; }

std::string slopes_text(const SlopeMultiset& s) {
    if (s.empty()) return "(none)";
    std::string out;
    for (const auto& seg : s) {
        if (!out.empty()) out += ", ";
        out += seg.slope.to_string();
        if (seg.multiplicity > 1) out += " x" + std::to_string(seg.multiplicity);
    }
    return out;
}

std::string charpoly_text(const XPoly& f) {
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const Poly& c = f.coeffs()[i];
        if (c.is_zero()) continue;
        std::string term = render_entry(c);
        bool negative = term[0] == '-';
        if (negative) term.erase(0, 1);
        const bool compound = term.find(' ') != std::string::npos;
        if (compound) {
            term = "(" + render_entry(c) + ")";
            negative = false;
        }
        if (i > 0) {
            if (term == "1") term.clear();
            term += i == 1 ? "X" : "X^" + std::to_string(i);
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + term;
        } else {
            out += (negative ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

void print_matrix(std::ostream& os, const char* name, const PolyMatrix& m) {
    os << name << ":\n" << m.render() << "\n";
}

void print_block(std::ostream& os, const BlockSpec& spec, const CheckSet& checks) {
    os << "block " << spec.label() << "\n\n";
    const BlockMatrices bm = build_block_matrices(spec);
    print_matrix(os, "M", bm.M);
    print_matrix(os, "D", bm.D);
    print_matrix(os, "A", bm.A);
    print_matrix(os, "F", bm.F);
    print_matrix(os, "U", bm.U);
    print_matrix(os, "T", bm.T);
    os << "charpoly: " << charpoly_text(berkowitz_charpoly(bm.U)) << "\n";

    const BlockVerdict v = block_verdict(spec, checks);
    os << "rank M: " << v.rank_M << "\n";
    os << "kernel dimension: " << v.r_ker << "\n";
    if (v.slopes) os << "slopes: " << slopes_text(*v.slopes) << "\n";
    if (v.old_slopes) os << "old slopes: " << slopes_text(*v.old_slopes) << "\n";
    os << "dim old: " << v.dim_old << "\n";
    os << "dim new: " << v.dim_new << "\n";
    os << "direct sum: " << flag(v.sum_direct) << "\n";
    os << "T_t injective: " << flag(v.tt_injective) << "\n";
    os << "diagonalizable: " << flag(v.diagonalizable) << "\n";
    os << "symmetries: " << flag(v.symmetry_ok) << "\n";
    if (v.min_slope_ok) {
        os << "bounds: smallest slope " << flag(v.min_slope_ok) << ", its multiplicity " << flag(v.min_mult_ok)
           << ", upper " << flag(v.upper_bound_ok) << ", multiplicity " << flag(v.mult_bound_ok) << ", k/2 "
           << flag(v.half_k_ok) << ", coefficients " << flag(v.sandwich_ok) << "\n";
    }
    for (const auto& n : v.notes) os << "note: " << n << "\n";
    const auto bad = conjecture_violations(v);
    os << "verdict: " << (bad.empty() ? "all checks hold" : "violations found") << "\n";
    for (const auto& b : bad) os << "  violated: " << b << "\n";
}

int write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        std::cerr << "error: cannot write " << path << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact U_t matrices on Drinfeld cusp form blocks: slopes, old/new spaces, conjecture checks"};
    app.require_subcommand(1);

    // block
    auto* block = app.add_subcommand("block", "Print the matrices and verdict of one block");
    std::uint32_t b_q = 0;
    std::optional<std::int64_t> b_j, b_n, b_k, b_m;
    bool b_both = false;
    std::string b_checks = "all";
    block->add_option("--q", b_q, "Field order")->required();
    block->add_option("--j", b_j, "Class index, 0 <= j <= q-2");
    block->add_option("--n", b_n, "Block dimension");
    block->add_option("--k", b_k, "Weight");
    block->add_option("--m", b_m, "Type");
    block->add_flag("--both-classes", b_both, "For odd q also show the class j+(q-1)/2 at the same weight");
    block->add_option("--checks", b_checks, "Comma-separated checks: symmetry,sum,injective,diag,bounds,slopes,all");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run the checks over a range of blocks");
    std::string s_config, s_q, s_j, s_n, s_checks, s_format, s_out;
    std::optional<std::int64_t> s_m, s_cap;
    std::optional<std::size_t> s_workers;
    bool s_strict = false;
    sweep->add_option("--config", s_config, "File of key=value settings; flags override it");
    sweep->add_option("--q", s_q, "Comma-separated field orders (default 2,3,4,5)");
    sweep->add_option("--j", s_j, "Class range a..b (default all)");
    sweep->add_option("--n", s_n, "Dimension range a..b (default 1..31)");
    sweep->add_option("--n-cap", s_cap, "Largest allowed n (default 31)");
    sweep->add_option("--m", s_m, "Only the class of this type");
    sweep->add_option("--checks", s_checks, "Comma-separated checks (default all)");
    sweep->add_option("--format", s_format, "csv or json");
    sweep->add_option("--out", s_out, "Output file (default stdout)");
    sweep->add_option("--workers", s_workers, "Worker threads (default: available cores)");
    sweep->add_flag("--strict", s_strict, "Exit with status 3 when a conjecture or bound fails");

    // family
    auto* family = app.add_subcommand("family", "Follow old slopes along k -> k + (q-1) q^ell(k)");
    std::uint32_t f_q = 0;
    std::int64_t f_k0 = 0;
    std::size_t f_steps = 1;
    std::optional<std::int64_t> f_m;
    int f_shift = 0;
    family->add_option("--q", f_q, "Field order")->required();
    family->add_option("--k0", f_k0, "Starting weight")->required();
    family->add_option("--steps", f_steps, "Number of steps")->check(CLI::PositiveNumber);
    family->add_option("--m", f_m, "Type (default: smallest type with a block)");
    family->add_option("--ell-shift", f_shift, "Offset added to ell(k); nonzero values give control runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*block) {
            const FieldCtx ctx = FieldCtx::for_order(b_q);
            std::optional<BlockSpec> spec;
            if (b_j && b_n) {
                spec = BlockSpec::make(ctx, *b_j, *b_n);
            } else if (b_k && b_m) {
                spec = enumerate_blocks(ctx, *b_k, *b_m);
                if (!spec) {
                    std::cerr << "error: weight " << *b_k << " and type " << *b_m << " give no block for q=" << b_q
                              << "\n";
                    return 1;
                }
            } else {
                std::cerr << "error: give either --j and --n or --k and --m\n";
                return 1;
            }
            const CheckSet checks = CheckSet::parse(b_checks);
            print_block(std::cout, *spec, checks);
            if (b_both) {
                if (const auto sib = sibling_block(*spec)) {
                    std::cout << "\n";
                    print_block(std::cout, *sib, checks);
                } else {
                    std::cout << "\nno sibling class for " << spec->label() << "\n";
                }
            }
            return 0;
        }

        if (*sweep) {
            SweepConfig cfg;
            if (!s_config.empty()) cfg.apply(read_config_file(s_config));
            std::map<std::string, std::string> flags;
            if (!s_q.empty()) flags["q"] = s_q;
            if (!s_j.empty()) flags["j"] = s_j;
            if (!s_n.empty()) flags["n"] = s_n;
            if (s_cap) flags["n_cap"] = std::to_string(*s_cap);
            if (s_m) flags["m"] = std::to_string(*s_m);
            if (!s_checks.empty()) flags["checks"] = s_checks;
            if (!s_format.empty()) flags["format"] = s_format;
            if (!s_out.empty()) flags["out"] = s_out;
            if (s_workers) flags["workers"] = std::to_string(*s_workers);
            if (s_strict) flags["strict"] = "true";
            cfg.apply(flags);

            const SweepResult res = run_sweep(cfg);
            const std::string text = cfg.format == OutputFormat::json ? to_json(res.rows) : to_csv(res.rows);
            if (write_output(cfg.out, text) != 0) return 1;
            std::cerr << res.rows.size() << " blocks, " << res.violations.size() << " violations, "
                      << res.defects.size() << " internal defects\n";
            for (const auto& v : res.violations) std::cerr << "violation: " << v << "\n";
            for (const auto& d : res.defects) std::cerr << "defect: " << d << "\n";
            return res.exit_code(cfg.strict);
        }

        if (*family) {
            const FieldCtx ctx = FieldCtx::for_order(f_q);
            std::int64_t m = 0;
            if (f_m) {
                m = *f_m;
            } else if (const auto t = default_type(ctx, f_k0)) {
                m = *t;
            } else {
                std::cerr << "error: weight " << f_k0 << " has no block for q=" << f_q << "\n";
                return 1;
            }
            const FamilyReport rep = family_check(ctx, m, f_k0, f_steps, f_shift);
            std::cout << "family q=" << rep.q << " m=" << rep.m << " k0=" << rep.k0;
            if (rep.ell_shift != 0) std::cout << " ell shift " << rep.ell_shift;
            std::cout << "\n";
            for (const auto& s : rep.steps) {
                std::cout << "k=" << s.k << " ell=" << s.ell << " old slopes: " << slopes_text(s.old_slopes)
                          << " dim new: " << s.dim_new << "\n";
                std::cout << "  k'=" << s.next_k << " predicted: " << slopes_text(s.predicted_next) << "\n";
                std::cout << "  observed: " << slopes_text(s.observed_next) << "\n";
                if (!s.extra.empty()) std::cout << "  extra: " << slopes_text(s.extra) << "\n";
                std::cout << "  match: " << (s.match ? "yes" : "no") << "\n";
            }
            return 0;
        }
    } catch (const InternalDefect& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
