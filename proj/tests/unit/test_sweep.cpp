#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "berger/fixtures.hpp"
#include "berger/sweep.hpp"
#include "helpers.hpp"

using namespace berger;
using namespace berger::testing;

TEST_CASE("regression slope of exact lines and degenerate inputs")
{
    CHECK(*regressionSlope({{0, 1}, {1, 3}, {2, 5}}) == doctest::Approx(2.0));
    CHECK(*regressionSlope({{1, 0}, {2, -1}}) == doctest::Approx(-1.0));
    CHECK_FALSE(regressionSlope({{1, 2}, {1, 3}}));
    CHECK_FALSE(regressionSlope({}));

    // y = x^2 sampled at powers of two: slope 2 in log-log space.
    std::vector<std::pair<double, double>> pts;
    for (double n : {8.0, 16.0, 32.0, 64.0})
        pts.emplace_back(std::log(n), std::log(n * n));
    CHECK(*regressionSlope(pts) == doctest::Approx(2.0));

    // Symmetric scatter around a line keeps its slope.
    CHECK(*regressionSlope({{0, 0.5}, {0, -0.5}, {1, 1.5}, {1, 0.5}}) == doctest::Approx(1.0));
}

TEST_CASE("thread bound on the octahedron")
{
    // Two three-node cores: four thread originators, twelve edges.
    CHECK(threadTransmissionBound(fixtures::octahedron()) == 4u * 12u);
}

TEST_CASE("sweep: cells, counts and the fault-free slope")
{
    SweepSpec spec = parseSweepSpec(R"({"family": "double-ring", "sizes": [8, 16, 32],
        "strategies": ["NONE", "CRASH"], "seedsPerCell": 4, "schedules": ["seeded-random", "fifo-global"]})");
    const SweepResult r = sweep(spec);
    REQUIRE(r.cells.size() == 6);
    CHECK_FALSE(r.failed());
    CHECK(r.violations == 0);
    REQUIRE(r.slope);
    CHECK(*r.slope > 0.5);
    CHECK(*r.slope < 2.3);
    for (const SweepCell& c : r.cells) {
        CHECK(c.error.empty());
        CHECK(c.deliveries == c.runs);
        if (!c.strategy) {
            CHECK(c.runs == 4);
            CHECK(c.maxThreadSends <= c.threadBound);
            // Fault-free totals do not depend on the schedule.
            CHECK(c.meanSends == doctest::Approx(static_cast<double>(c.maxSends)));
        } else {
            CHECK(c.runs > 4);
            CHECK(c.runs % 4 == 0);
        }
    }
}

TEST_CASE("sweep: result independent of the worker count")
{
    SweepSpec spec = parseSweepSpec(R"({"instances": ["octahedron.json", "notched-wheel.json"],
        "strategies": "all", "seedsPerCell": 3})",
                                    "w", BERGER_FIXTURE_DIR);
    CHECK(formatSweepTable(sweep(spec, 1)) == formatSweepTable(sweep(spec, 4)));
}

TEST_CASE("sweep: unusable instances are listed, other cells still run")
{
    SweepSpec spec = parseSweepSpec(R"({"instances": ["stranded-node.json", "octahedron.json"]})", "w",
                                    BERGER_FIXTURE_DIR);
    const SweepResult r = sweep(spec);
    REQUIRE(r.cells.size() == 2);
    CHECK_FALSE(r.cells[0].error.empty());
    CHECK(r.cells[0].runs == 0);
    CHECK(r.cells[1].runs == 1);
    CHECK(r.instanceFailures == 1);
    CHECK(r.failed());
}

TEST_CASE("sweep table layout")
{
    SweepSpec spec = parseSweepSpec(R"({"instances": ["octahedron.json"], "strategies": ["NONE", "CRASH"]})", "w",
                                    BERGER_FIXTURE_DIR);
    const std::string table = formatSweepTable(sweep(spec));
    std::istringstream in(table);
    std::string line;
    std::getline(in, line);
    CHECK(line.starts_with("target\tnodes\tedges\tstrategy\truns"));
    const auto columns = std::count(line.begin(), line.end(), '\t');
    for (int row = 0; row < 2; ++row) {
        std::getline(in, line);
        CHECK(std::count(line.begin(), line.end(), '\t') == columns);
        CHECK(line.starts_with("octahedron\t6\t12\t"));
    }
    CHECK(table.find("# status PASS\n") != std::string::npos);
    CHECK(table.find("# slope n/a\n") != std::string::npos);
}
