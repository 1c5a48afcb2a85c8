#include "atkin/report.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace atkin {

namespace {

using nlohmann::json;

constexpr const char* kNotesSep = " | ";

std::string bool_cell(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "NA"; }

std::string slopes_cell(const std::optional<SlopeMultiset>& s) { return s ? render_slopes(*s) : "NA"; }

std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join_notes(const std::vector<std::string>& notes) {
    std::string out;
    for (const auto& n : notes) {
        if (!out.empty()) out += kNotesSep;
        out += n;
    }
    return out;
}

std::vector<std::string> split_notes(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    const std::string sep = kNotesSep;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + sep.size();
    }
    return out;
}

// Splits CSV text into records of fields, honouring double-quoted fields.
std::vector<std::vector<std::string>> split_csv(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
            continue;
        }
        any = true;
        if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c == '\n') {
            fields.push_back(std::move(cur));
            cur.clear();
            records.push_back(std::move(fields));
            fields.clear();
            any = false;
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
    if (any) {
        fields.push_back(std::move(cur));
        records.push_back(std::move(fields));
    }
    return records;
}

template <typename T>
T parse_uint(const std::string& s, const char* column) {
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument(std::string("bad value for ") + column + ": '" + s + "'");
    }
    return v;
}

std::optional<bool> parse_bool_cell(const std::string& s, const char* column) {
    if (s == "NA") return std::nullopt;
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::invalid_argument(std::string("bad boolean for ") + column + ": '" + s + "'");
}

std::optional<SlopeMultiset> parse_slopes_cell(const std::string& s) {
    if (s == "NA") return std::nullopt;
    return parse_slopes(s);
}

json bool_json(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json slopes_json(const std::optional<SlopeMultiset>& s) {
    if (!s) return nullptr;
    json arr = json::array();
    for (const auto& seg : *s) arr.push_back({{"num", seg.slope.num()}, {"den", seg.slope.den()}, {"mult", seg.multiplicity}});
    return arr;
}

std::optional<bool> bool_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<bool>();
}

std::optional<SlopeMultiset> slopes_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    SlopeMultiset out;
    for (const auto& e : j) {
        out.push_back({Rational(e.at("num").get<std::int64_t>(), e.at("den").get<std::int64_t>()),
                       e.at("mult").get<std::size_t>()});
    }
    return out;
}

}  // namespace

const std::vector<std::string>& verdict_columns() {
    static const std::vector<std::string> cols{
        "q",           "p",          "r_ext",          "j",          "n",              "k",
        "m",           "r_ker",      "rank_M",         "dim_old",    "dim_new",        "sum_direct",
        "tt_injective", "diagonalizable", "slopes",    "old_slopes", "min_slope_ok",   "min_mult_ok",
        "upper_bound_ok", "mult_bound_ok", "half_k_ok", "sandwich_ok", "symmetry_ok",  "notes"};
    return cols;
}

std::string to_csv(const std::vector<BlockVerdict>& rows) {
    std::ostringstream out;
    const auto& cols = verdict_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto& v : rows) {
        const std::vector<std::string> cells{
            std::to_string(v.q),           std::to_string(v.p),           std::to_string(v.r_ext),
            std::to_string(v.j),           std::to_string(v.n),           std::to_string(v.k),
            std::to_string(v.m),           std::to_string(v.r_ker),       std::to_string(v.rank_M),
            std::to_string(v.dim_old),     std::to_string(v.dim_new),     bool_cell(v.sum_direct),
            bool_cell(v.tt_injective),     bool_cell(v.diagonalizable),   slopes_cell(v.slopes),
            slopes_cell(v.old_slopes),     bool_cell(v.min_slope_ok),     bool_cell(v.min_mult_ok),
            bool_cell(v.upper_bound_ok),   bool_cell(v.mult_bound_ok),    bool_cell(v.half_k_ok),
            bool_cell(v.sandwich_ok),      bool_cell(v.symmetry_ok),      join_notes(v.notes)};
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << quote(cells[i]);
        out << '\n';
    }
    return out.str();
}

std::string to_json(const std::vector<BlockVerdict>& rows) {
    json arr = json::array();
    for (const auto& v : rows) {
        json o = json::object();
        o["q"] = v.q;
        o["p"] = v.p;
        o["r_ext"] = v.r_ext;
        o["j"] = v.j;
        o["n"] = v.n;
        o["k"] = v.k;
        o["m"] = v.m;
        o["r_ker"] = v.r_ker;
        o["rank_M"] = v.rank_M;
        o["dim_old"] = v.dim_old;
        o["dim_new"] = v.dim_new;
        o["sum_direct"] = bool_json(v.sum_direct);
        o["tt_injective"] = bool_json(v.tt_injective);
        o["diagonalizable"] = bool_json(v.diagonalizable);
        o["slopes"] = slopes_json(v.slopes);
        o["old_slopes"] = slopes_json(v.old_slopes);
        o["min_slope_ok"] = bool_json(v.min_slope_ok);
        o["min_mult_ok"] = bool_json(v.min_mult_ok);
        o["upper_bound_ok"] = bool_json(v.upper_bound_ok);
        o["mult_bound_ok"] = bool_json(v.mult_bound_ok);
        o["half_k_ok"] = bool_json(v.half_k_ok);
        o["sandwich_ok"] = bool_json(v.sandwich_ok);
        o["symmetry_ok"] = bool_json(v.symmetry_ok);
        o["notes"] = v.notes;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::vector<BlockVerdict> parse_csv(const std::string& text) {
    const auto records = split_csv(text);
    if (records.empty() || records.front() != verdict_columns()) throw std::invalid_argument("CSV header mismatch");
    std::vector<BlockVerdict> out;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& f = records[r];
        if (f.size() != verdict_columns().size()) {
            throw std::invalid_argument("CSV row " + std::to_string(r) + " has " + std::to_string(f.size()) + " fields");
        }
        BlockVerdict v;
        v.q = parse_uint<std::uint32_t>(f[0], "q");
        v.p = parse_uint<std::uint32_t>(f[1], "p");
        v.r_ext = parse_uint<std::uint32_t>(f[2], "r_ext");
        v.j = parse_uint<std::uint32_t>(f[3], "j");
        v.n = parse_uint<std::uint32_t>(f[4], "n");
        v.k = parse_uint<std::uint64_t>(f[5], "k");
        v.m = parse_uint<std::uint32_t>(f[6], "m");
        v.r_ker = parse_uint<std::size_t>(f[7], "r_ker");
        v.rank_M = parse_uint<std::size_t>(f[8], "rank_M");
        v.dim_old = parse_uint<std::size_t>(f[9], "dim_old");
        v.dim_new = parse_uint<std::size_t>(f[10], "dim_new");
        v.sum_direct = parse_bool_cell(f[11], "sum_direct");
        v.tt_injective = parse_bool_cell(f[12], "tt_injective");
        v.diagonalizable = parse_bool_cell(f[13], "diagonalizable");
        v.slopes = parse_slopes_cell(f[14]);
        v.old_slopes = parse_slopes_cell(f[15]);
        v.min_slope_ok = parse_bool_cell(f[16], "min_slope_ok");
        v.min_mult_ok = parse_bool_cell(f[17], "min_mult_ok");
        v.upper_bound_ok = parse_bool_cell(f[18], "upper_bound_ok");
        v.mult_bound_ok = parse_bool_cell(f[19], "mult_bound_ok");
        v.half_k_ok = parse_bool_cell(f[20], "half_k_ok");
        v.sandwich_ok = parse_bool_cell(f[21], "sandwich_ok");
        v.symmetry_ok = parse_bool_cell(f[22], "symmetry_ok");
        v.notes = split_notes(f[23]);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<BlockVerdict> parse_json(const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of verdicts");
    std::vector<BlockVerdict> out;
    try {
        for (const auto& o : arr) {
            BlockVerdict v;
            v.q = o.at("q").get<std::uint32_t>();
            v.p = o.at("p").get<std::uint32_t>();
            v.r_ext = o.at("r_ext").get<std::uint32_t>();
            v.j = o.at("j").get<std::uint32_t>();
            v.n = o.at("n").get<std::uint32_t>();
            v.k = o.at("k").get<std::uint64_t>();
            v.m = o.at("m").get<std::uint32_t>();
            v.r_ker = o.at("r_ker").get<std::size_t>();
            v.rank_M = o.at("rank_M").get<std::size_t>();
            v.dim_old = o.at("dim_old").get<std::size_t>();
            v.dim_new = o.at("dim_new").get<std::size_t>();
            v.sum_direct = bool_from_json(o.at("sum_direct"));
            v.tt_injective = bool_from_json(o.at("tt_injective"));
            v.diagonalizable = bool_from_json(o.at("diagonalizable"));
            v.slopes = slopes_from_json(o.at("slopes"));
            v.old_slopes = slopes_from_json(o.at("old_slopes"));
            v.min_slope_ok = bool_from_json(o.at("min_slope_ok"));
            v.min_mult_ok = bool_from_json(o.at("min_mult_ok"));
            v.upper_bound_ok = bool_from_json(o.at("upper_bound_ok"));
            v.mult_bound_ok = bool_from_json(o.at("mult_bound_ok"));
            v.half_k_ok = bool_from_json(o.at("half_k_ok"));
            v.sandwich_ok = bool_from_json(o.at("sandwich_ok"));
            v.symmetry_ok = bool_from_json(o.at("symmetry_ok"));
            v.notes = o.at("notes").get<std::vector<std::string>>();
            out.push_back(std::move(v));
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad verdict object: ") + e.what());
    }
    return out;
}

}  // namespace atkin
