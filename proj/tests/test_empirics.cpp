#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dmp/csv.hpp"
#include "dmp/empirics.hpp"
#include "dmp/errors.hpp"

using namespace dmp;

#ifndef DMP_TEST_DATA_DIR
#error "DMP_TEST_DATA_DIR must be defined"
#endif

namespace {

const std::filesystem::path kData{DMP_TEST_DATA_DIR};

LaborSeries from_text(const std::string& text, const std::string& column = {}) {
    std::istringstream in(text);
    return load_series(in, "inline.csv", column);
}

}  // namespace

TEST_CASE("dates") {
    CHECK(YearMonth::parse("2008-03-01") == YearMonth{2008, 3});
    CHECK(YearMonth::parse("2008-03") == YearMonth{2008, 3});
    CHECK_FALSE(YearMonth::parse("2008-13-01"));
    CHECK_FALSE(YearMonth::parse("03/01/2008"));
    CHECK(YearMonth{2000, 12}.to_string() == "2000-12-01");
    CHECK(YearMonth{2000, 12} < YearMonth{2001, 1});
}

TEST_CASE("csv helpers") {
    CHECK(split_fields("a,\"b\",c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(join_fields({"a", "b"}) == "a,b");
    CHECK(parse_number("1.5e3", "x", 1) == 1500.0);
    CHECK_THROWS_AS(parse_number("1.5x", "x", 1), ParseError);
    CHECK_THROWS_AS(parse_number("", "x", 1), ParseError);
}

TEST_CASE("bundled fixtures load with both header styles") {
    const auto u = load_series(kData / "UNEMPLOY_2008_2009.csv");
    const auto v = load_series(kData / "JTSJOL_2008_2009.csv");
    CHECK(u.id == "UNEMPLOY");
    CHECK(v.id == "JTSJOL");
    CHECK(u.size() == 24);
    CHECK(v.size() == 24);
    CHECK(u.observations.front().date == YearMonth{2008, 1});
    CHECK(v.observations.back().date == YearMonth{2009, 12});
}

TEST_CASE("missing marker, CRLF, BOM and unsorted rows") {
    const auto s = from_text("\xEF\xBB\xBF" "DATE,UNEMPLOY\r\n2001-03-01,6000\r\n2001-01-01,5800\r\n2001-02-01,.\r\n\r\n");
    CHECK(s.rows_read == 3);
    CHECK(s.missing_count == 1);
    REQUIRE(s.size() == 2);
    CHECK(s.observations[0].date == YearMonth{2001, 1});
    CHECK(s.observations[1].value == 6000.0);
}

TEST_CASE("value column selection") {
    const std::string three = "DATE,A,B\n2001-01-01,1,2\n";
    CHECK_THROWS_AS(from_text(three), SchemaError);
    CHECK(from_text(three, "B").observations[0].value == 2.0);
    CHECK_THROWS_AS(from_text(three, "C"), SchemaError);
    CHECK_THROWS_AS(from_text("when,A\n2001-01-01,1\n"), SchemaError);
}

TEST_CASE("malformed rows report their line") {
    try {
        from_text("DATE,A\n2001-01-01,1\n2001-02-01,abc\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(from_text("DATE,A\n2001-01-01,-4\n"), ParseError);
    CHECK_THROWS_AS(from_text("DATE,A\n2001-01-01,0\n"), ParseError);
    CHECK_THROWS_AS(from_text("DATE,A\n2001-01-01,1\n2001-01-15,2\n"), ParseError);
    CHECK_THROWS_AS(from_text("DATE,A\n2001-01-01\n"), ParseError);
    CHECK_THROWS_AS(from_text("DATE,A\nyesterday,1\n"), ParseError);
    CHECK_THROWS_AS(load_series(kData / "no_such_file.csv"), IoError);
}

TEST_CASE("join keeps common months from the floor on") {
    const auto u = from_text("DATE,U\n2000-11-01,5\n2000-12-01,6\n2001-01-01,7\n2001-03-01,8\n");
    const auto v = from_text("DATE,V\n2000-11-01,3\n2000-12-01,3\n2001-02-01,4\n2001-03-01,2\n");
    std::size_t dropped = 0;
    const auto j = join_series(u, v, kJoltsStart, &dropped);
    REQUIRE(j.size() == 2);
    CHECK(dropped == 1);
    CHECK(j[0].date == YearMonth{2000, 12});
    CHECK(j[1].vacancies == 2.0);
    CHECK_THROWS_AS(join_series(u, v, YearMonth{2002, 1}), JoinError);
    CHECK_THROWS_AS(join_series(LaborSeries{}, v, kJoltsStart), JoinError);
}

TEST_CASE("bounds on the fixture") {
    const auto ts = tightness_series(load_series(kData / "UNEMPLOY_2008_2009.csv"),
                                     load_series(kData / "JTSJOL_2008_2009.csv"));
    REQUIRE(ts.size() == 24);
    const auto cd = bound_series(ts, CobbDouglas{1.0, 0.5});
    const auto nl = bound_series(ts, Nonlinear{1.0, 1.27});
    for (std::size_t i = 0; i < ts.size(); ++i) {
        CHECK(cd.bound[i] == 2.0);
        CHECK(nl.bound[i] > 1.0);
        // 1/eta = 1 + theta^-gamma
        CHECK(nl.bound[i] == doctest::Approx(1.0 + std::pow(ts.theta[i], -1.27)).epsilon(1e-13));
    }
    std::ostringstream out;
    write_bounds_csv(out, ts);
    CHECK(out.str().rfind("date,theta,bound_cd,bound_nl\n2008-01-01,", 0) == 0);
}

TEST_CASE("nonlinear bound at a frozen point") {
    TightnessSeries ts;
    ts.dates = {YearMonth{2001, 1}, YearMonth{2001, 2}};
    ts.theta = {0.5, 1.0};
    const auto nl = bound_series(ts, Nonlinear{1.0, 1.27});
    CHECK(nl.bound[0] == doctest::Approx(3.4116156553815208).epsilon(1e-14));  // mpmath
    CHECK(nl.bound[1] == 2.0);
}

TEST_CASE("Beveridge correlation") {
    const auto curve = beveridge_points(load_series(kData / "UNEMPLOY_2008_2009.csv"),
                                        load_series(kData / "JTSJOL_2008_2009.csv"));
    REQUIRE(curve.correlation);
    CHECK(*curve.correlation < 0.0);
    CHECK(*curve.correlation >= -1.0);

    CHECK(pearson_correlation({1, 2, 3}, {2, 4, 6}).value() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_FALSE(pearson_correlation({1}, {2}));
    CHECK_FALSE(pearson_correlation({1, 1, 1}, {1, 2, 3}));

    const auto one = beveridge_points(from_text("DATE,U\n2005-01-01,5\n"), from_text("DATE,V\n2005-01-01,3\n"));
    CHECK(one.points.size() == 1);
    CHECK_FALSE(one.correlation);
    std::ostringstream out;
    write_beveridge_csv(out, one);
    CHECK(out.str() == "date,u_thousands,v_thousands\n2005-01-01,5,3\n");
}
