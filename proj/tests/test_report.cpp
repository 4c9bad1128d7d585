#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mackeylab/report.hpp"

using namespace mlab;

TEST_CASE("report round trip")
{
    Report r;
    auto& a = r.entry("rootinfo.A2");
    a.add("roots", "6");
    a.add("poincare", "[1,2,2,1]");
    auto& b = r.entry("check.green-square-sum.q3");
    b.add("expected", "324");
    b.add("computed", "324");
    b.add("status", "pass");
    b.add("note", "values compared exactly");

    std::string text = r.emit_string();
    Report back = Report::parse_string(text);
    CHECK(back == r);
    CHECK(back.entries.size() == 2);
    CHECK(*back.entries[1].find("status") == "pass");
    CHECK(back.entries[0].find("missing") == nullptr);
}

TEST_CASE("parse rejects malformed input")
{
    CHECK_THROWS_AS(Report::parse_string("nope"), Error);
    CHECK_THROWS_AS(Report::parse_string("mackeylab-report 1\nf key value\n"), Error);
    CHECK_THROWS_AS(Report::parse_string("mackeylab-report 1\njunk line\n"), Error);
}

TEST_CASE("emit rejects unrepresentable content")
{
    Report r;
    r.entry("bad id with spaces").add("k", "v");
    std::ostringstream os;
    CHECK_THROWS_AS(r.emit(os), Error);

    Report r2;
    r2.entry("ok").add("k", "line1\nline2");
    std::ostringstream os2;
    CHECK_THROWS_AS(r2.emit(os2), Error);
}

TEST_CASE("empty values round trip")
{
    Report r;
    r.entry("e").add("empty", "");
    Report back = Report::parse_string(r.emit_string());
    CHECK(back == r);
}
