#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "schatten_lab/report.hpp"

using namespace schatten_lab;
using Catch::Approx;

TEST_CASE("gap report verdicts") {
    auto holds = make_gap_report(1.0, 0.5, Direction::GreaterEq, 1e-9);
    REQUIRE(holds.verdict == Verdict::Holds);
    REQUIRE(holds.gap == Approx(0.5));

    auto within = make_gap_report(1.0, 1.0 + 5e-10, Direction::GreaterEq, 1e-9);
    REQUIRE(within.verdict == Verdict::WithinTolerance);

    auto violated = make_gap_report(1.0, 2.0, Direction::GreaterEq, 1e-9);
    REQUIRE(violated.verdict == Verdict::Violated);

    auto le_holds = make_gap_report(1.0, 2.0, Direction::LessEq, 1e-9);
    REQUIRE(le_holds.verdict == Verdict::Holds);
    REQUIRE(le_holds.directed_gap() == Approx(1.0));

    auto nan_report = make_gap_report(std::nan(""), 1.0, Direction::GreaterEq, 1e-9);
    REQUIRE(nan_report.verdict == Verdict::Violated);
}

TEST_CASE("17-digit floats round-trip") {
    const double values[] = {0.1, 1.0 / 3.0, 3.14159265358979323846, 1e-300, -2.5e17,
                             0.30000000000000004};
    for (double v : values) {
        const std::string s = fmt17(v);
        REQUIRE(std::strtod(s.c_str(), nullptr) == v);
    }
    REQUIRE(fmt17(std::nan("")) == "null");
}

TEST_CASE("json writer shapes") {
    JsonWriter w;
    w.begin_object();
    w.key("name").value("demo");
    w.key("count").value(3);
    w.key("xs").begin_array().value(1.5).value(2.5).end_array();
    w.key("nested").begin_object().key("flag").value(true).end_object();
    w.end_object();
    REQUIRE(w.str() ==
            "{\"name\":\"demo\",\"count\":3,\"xs\":[1.5,2.5],\"nested\":{\"flag\":true}}");
}

TEST_CASE("json escaping") {
    JsonWriter w;
    w.begin_object();
    w.key("s").value("a\"b\\c\nd");
    w.end_object();
    REQUIRE(w.str() == "{\"s\":\"a\\\"b\\\\c\\nd\"}");
}

TEST_CASE("gap report serialization embeds every field") {
    auto rep = make_gap_report(2.0, 1.0, Direction::GreaterEq, 1e-9, "context string");
    JsonWriter w;
    write_gap_report_json(w, rep);
    const std::string s = w.str();
    REQUIRE(s.find("\"lhs\":2") != std::string::npos);
    REQUIRE(s.find("\"verdict\":\"holds\"") != std::string::npos);
    REQUIRE(s.find("context string") != std::string::npos);
}

TEST_CASE("sweep CSV shape") {
    std::vector<SweepRecord> recs = {{0.0, 0.5, 1.25, false},
                                     {0.5, 0.5, -0.25, false},
                                     {1.0, 0.5, 0.0, true}};
    const std::string csv = sweep_to_csv(recs);
    REQUIRE(csv.rfind("t,s,gap\n", 0) == 0);
    REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 4);
    REQUIRE(csv.find("nan") != std::string::npos);
}

TEST_CASE("sweep SVG is self-contained with axes and zero line") {
    std::vector<SweepRecord> recs;
    for (int i = 0; i <= 10; ++i)
        recs.push_back({i * 0.1, 0.5, std::sin(i * 0.6) - 0.2, false});
    for (int i = 0; i <= 10; ++i)
        recs.push_back({i * 0.1, 0.25, std::cos(i * 0.6), false});
    const std::string svg = sweep_to_svg(recs);
    REQUIRE(svg.rfind("<svg", 0) == 0);
    REQUIRE(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
    REQUIRE(std::count(svg.begin(), svg.end(), '\n') > 5);
    // one polyline per s value
    std::size_t polylines = 0, pos = 0;
    while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
        ++polylines;
        ++pos;
    }
    REQUIRE(polylines == 2);
    REQUIRE(svg.find(">t</text>") != std::string::npos);
    REQUIRE(svg.find(">gap</text>") != std::string::npos);
    REQUIRE(svg.find("stroke-dasharray") != std::string::npos);  // zero line
    REQUIRE(svg.find("http://") == svg.find("http://www.w3.org/2000/svg"));  // no external assets
}

TEST_CASE("parallel_for writes each slot exactly once in any thread mode") {
    std::vector<int> hits(257, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += static_cast<int>(i); }, 3);
    for (std::size_t i = 0; i < hits.size(); ++i) REQUIRE(hits[i] == static_cast<int>(i));
}
