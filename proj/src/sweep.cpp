#include "atkin/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "atkin/error.hpp"

namespace atkin {

namespace {

std::int64_t parse_int(const std::string& s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    return v;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& s) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw std::invalid_argument("not a boolean: '" + s + "'");
}

}  // namespace

IntRange IntRange::parse(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const std::int64_t v = parse_int(trim(s));
        return {v, v};
    }
    return {parse_int(trim(s.substr(0, dots))), parse_int(trim(s.substr(dots + 2)))};
}

void SweepConfig::validate() const {
    if (fields.empty()) throw std::invalid_argument("no fields to sweep");
    for (auto q : fields) (void)FieldCtx::for_order(q);
    if (n_range.hi > n_cap) {
        throw std::invalid_argument("n up to " + std::to_string(n_range.hi) + " exceeds the cap " + std::to_string(n_cap));
    }
}

void SweepConfig::apply(const std::map<std::string, std::string>& settings) {
    for (const auto& [key, value] : settings) {
        if (key == "q") {
            fields.clear();
            std::istringstream in(value);
            std::string item;
            while (std::getline(in, item, ',')) {
                if (!trim(item).empty()) fields.push_back(static_cast<std::uint32_t>(parse_int(trim(item))));
            }
        } else if (key == "j") {
            j_range = IntRange::parse(value);
        } else if (key == "n") {
            n_range = IntRange::parse(value);
        } else if (key == "n_cap") {
            n_cap = parse_int(value);
        } else if (key == "m") {
            m = parse_int(value);
        } else if (key == "checks") {
            checks = CheckSet::parse(value);
        } else if (key == "format") {
            if (value == "csv") format = OutputFormat::csv;
            else if (value == "json") format = OutputFormat::json;
            else throw std::invalid_argument("unknown format '" + value + "'");
        } else if (key == "out") {
            out = value;
        } else if (key == "workers") {
            workers = static_cast<std::size_t>(parse_int(value));
        } else if (key == "strict") {
            strict = parse_bool(value);
        } else {
            throw std::invalid_argument("unknown setting '" + key + "'");
        }
    }
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::map<std::string, std::string> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        out[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return out;
}

std::vector<BlockSpec> sweep_blocks(const SweepConfig& cfg) {
    std::vector<BlockSpec> out;
    for (auto q : cfg.fields) {
        const FieldCtx ctx = FieldCtx::for_order(q);
        std::int64_t j_lo = 0, j_hi = static_cast<std::int64_t>(q) - 2;
        if (cfg.j_range) {
            j_lo = std::max(j_lo, cfg.j_range->lo);
            j_hi = std::min(j_hi, cfg.j_range->hi);
        }
        for (std::int64_t j = j_lo; j <= j_hi; ++j) {
            for (std::int64_t n = std::max<std::int64_t>(cfg.n_range.lo, 1); n <= cfg.n_range.hi; ++n) {
                const BlockSpec spec = BlockSpec::make(ctx, j, n);
                if (cfg.m) {
                    const std::int64_t qm1 = q - 1;
                    if (((*cfg.m - spec.m) % qm1 + qm1) % qm1 != 0) continue;
                }
                out.push_back(spec);
            }
        }
    }
    return out;
}

int SweepResult::exit_code(bool strict) const {
    if (!defects.empty()) return 2;
    if (strict && !violations.empty()) return 3;
    return 0;
}

SweepResult run_blocks(const std::vector<BlockSpec>& blocks, const CheckSet& checks, std::size_t workers) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(blocks.size(), 1));

    std::vector<std::optional<BlockVerdict>> slots(blocks.size());
    std::vector<std::string> defect_of(blocks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < blocks.size(); i = next++) {
            try {
                slots[i] = block_verdict(blocks[i], checks);
            } catch (const InternalDefect& e) {
                defect_of[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    SweepResult res;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::string label = blocks[i].label();
        if (!slots[i]) {
            res.defects.push_back(label + ": " + defect_of[i]);
            continue;
        }
        for (const auto& what : conjecture_violations(*slots[i])) res.violations.push_back(label + ": " + what);
        res.rows.push_back(std::move(*slots[i]));
    }
    return res;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    SweepResult res = run_blocks(sweep_blocks(cfg), cfg.checks, cfg.workers);
    auto key = [](const BlockVerdict& v) { return std::tie(v.q, v.k, v.m, v.j, v.n); };
    std::sort(res.rows.begin(), res.rows.end(), [&](const BlockVerdict& a, const BlockVerdict& b) { return key(a) < key(b); });
    std::sort(res.defects.begin(), res.defects.end());
    return res;
}

}  // namespace atkin
