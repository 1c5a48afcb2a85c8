#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "atkin/report.hpp"

using namespace atkin;

namespace {

std::vector<BlockVerdict> sample() {
    std::vector<BlockVerdict> rows;
    rows.push_back(block_verdict(BlockSpec::make(FieldCtx::for_order(2), 0, 4)));
    rows.push_back(block_verdict(BlockSpec::make(FieldCtx::for_order(9), 2, 3)));
    rows.push_back(block_verdict(BlockSpec::make(FieldCtx::for_order(3), 1, 4), CheckSet::parse("sum")));
    BlockVerdict odd = rows[0];
    odd.notes = {"comma, inside", "quote \"here\"", "line\nbreak"};
    rows.push_back(odd);
    return rows;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("csv header and layout") {
    const std::string csv = to_csv({});
    std::string header;
    for (const auto& c : verdict_columns()) header += (header.empty() ? "" : ",") + c;
    CHECK(csv == header + "\n");
    CHECK(header ==
          "q,p,r_ext,j,n,k,m,r_ker,rank_M,dim_old,dim_new,sum_direct,tt_injective,diagonalizable,slopes,old_slopes,"
          "min_slope_ok,min_mult_ok,upper_bound_ok,mult_bound_ok,half_k_ok,sandwich_ok,symmetry_ok,notes");

    const auto rows = sample();
    const std::string text = to_csv({rows[0]});
    CHECK(text.find('\r') == std::string::npos);
    const std::string line = text.substr(header.size() + 1);
    CHECK(line == "2,2,1,0,4,5,0,1,3,2,2,true,true,false,1/1:1;5/2:2,1/1:1,true,true,true,true,true,true,true,\n");
}

TEST_CASE("unchecked cells") {
    const auto rows = sample();
    const std::string text = to_csv({rows[2]});
    CHECK(text.find(",NA,") != std::string::npos);
    const auto j = nlohmann::json::parse(to_json({rows[2]}));
    CHECK(j[0]["diagonalizable"].is_null());
    CHECK(j[0]["slopes"].is_null());
    CHECK(j[0]["sum_direct"] == true);
}

TEST_CASE("csv round trip") {
    const auto rows = sample();
    const auto back = parse_csv(to_csv(rows));
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(back[i] == rows[i]);
    CHECK(to_csv(back) == to_csv(rows));
}

TEST_CASE("json round trip") {
    const auto rows = sample();
    const std::string text = to_json(rows);
    const auto j = nlohmann::json::parse(text);
    REQUIRE(j.is_array());
    CHECK(j[0]["slopes"] == nlohmann::json::parse(R"([{"num":1,"den":1,"mult":1},{"num":5,"den":2,"mult":2}])"));
    for (const auto& c : verdict_columns()) CHECK(j[0].contains(c));
    const auto back = parse_json(text);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(back[i] == rows[i]);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_csv(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv("q,p\n1,2\n"), std::invalid_argument);
    const std::string good = to_csv({sample()[0]});
    std::string short_row = good.substr(0, good.rfind(',')) + "\n";
    CHECK_THROWS_AS(parse_csv(short_row), std::invalid_argument);
    std::string bad_bool = good;
    bad_bool.replace(bad_bool.find(",true,"), 6, ",maybe,");
    CHECK_THROWS_AS(parse_csv(bad_bool), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv(first_line(good) + "\n\"unterminated\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json(R"([{"q": 2}])"), std::invalid_argument);
    CHECK(parse_json("[]").empty());
}
