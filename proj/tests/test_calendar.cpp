#include <catch2/catch_amalgamated.hpp>

#include "wordlecast/calendar.hpp"

using namespace wordlecast;

TEST_CASE("day index anchors", "[calendar]") {
    CHECK(day_index_of(parse_date("2022-01-07")) == 1);
    CHECK(day_index_of(parse_date("2022-01-08")) == 2);
    CHECK(day_index_of(parse_date("2022-12-31")) == 359);
    CHECK(day_index_of(parse_date("2023-03-01")) == 419);
    CHECK(day_index_of(parse_date("2022-01-06")) == 0);
}

TEST_CASE("date round trips through the index", "[calendar]") {
    for (long idx : {1L, 2L, 59L, 359L, 419L, 1000L, -30L}) {
        CHECK(day_index_of(date_of(idx)) == idx);
    }
    CHECK(format_date(date_of(419)) == "2023-03-01");
}

TEST_CASE("weekend classification", "[calendar]") {
    CHECK_FALSE(is_weekend(parse_date("2022-01-07"))); // Friday
    CHECK(is_weekend(parse_date("2022-01-08")));       // Saturday
    CHECK(is_weekend(parse_date("2022-01-09")));       // Sunday
    CHECK_FALSE(is_weekend(parse_date("2022-01-10"))); // Monday
    CHECK(is_weekend(2L));
    CHECK_FALSE(is_weekend(1L));
}

TEST_CASE("date parsing accepts only YYYY-MM-DD", "[calendar]") {
    CHECK(format_date(parse_date("2022-02-05")) == "2022-02-05");
    CHECK_THROWS_AS(parse_date("2022/02/05"), ParseError);
    CHECK_THROWS_AS(parse_date("02-05-2022"), ParseError);
    CHECK_THROWS_AS(parse_date("2022-02-30"), ParseError);
    CHECK_THROWS_AS(parse_date("2022-13-01"), ParseError);
    CHECK_THROWS_AS(parse_date(""), ParseError);
    CHECK_THROWS_AS(parse_date("2022-02-05x"), ParseError);
}

TEST_CASE("next_day crosses month and year boundaries", "[calendar]") {
    CHECK(format_date(next_day(parse_date("2022-01-31"))) == "2022-02-01");
    CHECK(format_date(next_day(parse_date("2022-12-31"))) == "2023-01-01");
    CHECK(format_date(next_day(parse_date("2022-02-28"))) == "2022-03-01");
}
