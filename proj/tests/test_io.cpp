#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "epistoch/errors.hpp"
#include "epistoch/io.hpp"
#include "test_support.hpp"

using namespace epistoch;
using test_support::fixture_path;
using test_support::temp_path;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    const std::string path = temp_path(name);
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("day-indexed incidence parsing") {
    const auto p = write_temp("day_basic.csv", "day,cases\n0,2\n1,3\n");
    const IncidenceSeries s = parse_incidence_csv(p);
    CHECK(s.incident == std::vector<double>{2, 3});
    CHECK(s.cumulative == std::vector<double>{2, 5});
    std::remove(p.c_str());
}

TEST_CASE("day gaps are filled with zero counts") {
    const auto p = write_temp("day_gap.csv", "day,cases\n0,1\n3,2\n");
    const IncidenceSeries s = parse_incidence_csv(p);
    CHECK(s.incident == std::vector<double>{1, 0, 0, 2});
    std::remove(p.c_str());
}

TEST_CASE("date-indexed incidence with calendar gap fill") {
    const auto p = write_temp("date_gap.csv",
                              "date,cases\n2003-02-27,1\n2003-02-28,1\n2003-03-02,3\n");
    const IncidenceSeries s = parse_incidence_csv(p);
    // feb 2003 has 28 days, so one missing day (mar 01) is zero-filled
    CHECK(s.incident == std::vector<double>{1, 1, 0, 3});
    std::remove(p.c_str());
}

TEST_CASE("comment lines are skipped but still counted for diagnostics") {
    const auto p = write_temp("commented.csv",
                              "# synthetic outbreak\n# second note\nday,cases\n0,4\n2,1\n");
    const IncidenceSeries s = parse_incidence_csv(p);
    CHECK(s.cumulative == std::vector<double>{4, 4, 5});
    std::remove(p.c_str());
}

TEST_CASE("parse errors carry one-based line numbers") {
    struct Case {
        const char* name;
        const char* body;
        int line;
    };
    const Case cases[] = {
        {"neg.csv", "day,cases\n0,5\n1,-2\n", 3},
        {"dup.csv", "day,cases\n0,5\n0,2\n", 3},
        {"backwards.csv", "date,cases\n2003-03-02,5\n2003-03-01,2\n", 3},
        {"header.csv", "time,cases\n0,5\n", 1},
        {"baddate.csv", "date,cases\n2003-13-01,5\n", 2},
        {"shortfeb.csv", "date,cases\n1900-02-29,5\n", 2},
        {"frac.csv", "day,cases\n0,2.5\n", 2},
        {"alpha.csv", "day,cases\nzero,2\n", 2},
        {"columns.csv", "day,cases\n0,2,9\n", 2},
        {"empty.csv", "day,cases\n", 1},
        {"comment_only.csv", "# nothing here\n", 1},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        const auto p = write_temp(c.name, c.body);
        try {
            parse_incidence_csv(p);
            FAIL_CHECK("expected ParseError for " << c.name);
        } catch (const ParseError& e) {
            CHECK(e.line() == c.line);
            if (c.line > 0) {
                const std::string what = e.what();
                CHECK(what.find("line " + std::to_string(c.line)) != std::string::npos);
            }
        }
        std::remove(p.c_str());
    }
    CHECK_THROWS_AS(parse_incidence_csv("/nonexistent/nope.csv"), ParseError);
}

TEST_CASE("bundled synthetic outbreak fixture") {
    const IncidenceSeries s = parse_incidence_csv(fixture_path("data/sars_synthetic.csv"));
    REQUIRE(s.days() == 60);
    CHECK(s.incident[0] == 11);
    CHECK(s.cumulative[10] == 30);
    CHECK(s.cumulative[20] == 50);
    CHECK(s.cumulative[25] == 67);
    CHECK(s.cumulative[59] == 253);
}

TEST_CASE("civil day arithmetic") {
    CHECK(days_from_civil(1970, 1, 1) == 0);
    CHECK(days_from_civil(1970, 1, 2) == 1);
    CHECK(days_from_civil(1969, 12, 31) == -1);
    CHECK(days_from_civil(2000, 3, 1) - days_from_civil(2000, 2, 28) == 2);  // leap year
    CHECK(days_from_civil(1900, 3, 1) - days_from_civil(1900, 2, 28) == 1);  // century rule
    CHECK(days_from_civil(2003, 4, 2) - days_from_civil(2003, 3, 31) == 2);
}

TEST_CASE("numeric tables round-trip bitwise through csv") {
    CsvTable t;
    t.header = {"a", "b", "c"};
    t.comment = "three columns of awkward values";
    t.rows = {
        {1.0 / 3.0, 1e-300, 9.87654321e12},
        {-0.0, 1.7976931348623157e308, 0.1},
        {2.0, std::nextafter(2.0, 3.0), -1.0 / 7.0},
    };
    const auto p = temp_path("roundtrip.csv");
    write_csv(p, t);
    const CsvTable back = read_numeric_csv(p);
    REQUIRE(back.header == t.header);
    REQUIRE(back.rows.size() == t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j)
            CHECK(back.rows[i][j] == t.rows[i][j]);
    // the comment line must be present in the raw file but absent after reparse
    std::ifstream in(p);
    std::string first;
    std::getline(in, first);
    CHECK(first.rfind("# ", 0) == 0);
    CHECK(back.comment.empty());
    std::remove(p.c_str());
}

TEST_CASE("csv reader rejects ragged and non-numeric rows") {
    const auto ragged = write_temp("ragged.csv", "a,b\n1,2\n3\n");
    CHECK_THROWS_AS(read_numeric_csv(ragged), ParseError);
    std::remove(ragged.c_str());
    const auto words = write_temp("words.csv", "a,b\n1,two\n");
    CHECK_THROWS_AS(read_numeric_csv(words), ParseError);
    std::remove(words.c_str());
}
