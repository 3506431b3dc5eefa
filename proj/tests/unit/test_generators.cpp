#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "berger/generators.hpp"
#include "berger/random.hpp"
#include "berger/topology.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace berger;
using namespace berger::testing;

TEST_CASE("family names")
{
    for (Family f : {Family::DoubleRing, Family::TriangulatedLadder, Family::GabrielUnitDisk})
        CHECK(parseFamily(toString(f)) == f);
    CHECK_FALSE(parseFamily("grid"));
}

TEST_CASE("generated instances validate and have the requested size")
{
    struct Case
    {
        Family family;
        std::size_t size;
    };
    for (const Case& c : {Case{Family::DoubleRing, 6}, Case{Family::DoubleRing, 12}, Case{Family::DoubleRing, 33},
                          Case{Family::TriangulatedLadder, 8}, Case{Family::TriangulatedLadder, 20},
                          Case{Family::GabrielUnitDisk, 16}, Case{Family::GabrielUnitDisk, 40}}) {
        CAPTURE(toString(c.family));
        CAPTURE(c.size);
        for (std::uint64_t seed : {1u, 2u}) {
            const GeneratedInstance g = generateFamily(c.family, c.size, seed);
            CHECK(g.instance.graph.nodeCount() == c.size);
            CHECK(validateInstance(g.instance).admissible());
            CHECK(g.attempts >= 1);
            CHECK(g.attempts <= kDefaultGenerationAttempts);
            CHECK(oracle::eulerHolds(g.instance.graph, enumerateFaces(g.instance.graph)));
        }
    }
}

TEST_CASE("generation is deterministic in its seed")
{
    const auto a = generateFamily(Family::GabrielUnitDisk, 24, 5);
    const auto b = generateFamily(Family::GabrielUnitDisk, 24, 5);
    CHECK(a.instance.graph.points() == b.instance.graph.points());
    CHECK(a.instance.source == b.instance.source);
    CHECK(a.seedUsed == b.seedUsed);
    const auto c = generateFamily(Family::GabrielUnitDisk, 24, 6);
    CHECK(a.instance.graph.points() != c.instance.graph.points());
}

TEST_CASE("generator size limits")
{
    CHECK_THROWS_AS(generateFamily(Family::DoubleRing, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(generateFamily(Family::TriangulatedLadder, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(generateFamily(Family::GabrielUnitDisk, 8, 1), GenerationError);
}

TEST_CASE("gabriel edges: within range and with empty diametral disks")
{
    const Instance inst = generateFamily(Family::GabrielUnitDisk, 40, 3).instance;
    const EmbeddedGraph& g = inst.graph;
    for (const Edge& e : g.rawEdges()) {
        const Point a = g.point(e.u);
        const Point b = g.point(e.v);
        const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
        const double r2 = ((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y)) / 4;
        for (NodeId n = 0; n < g.nodeCount(); ++n) {
            if (n == e.u || n == e.v)
                continue;
            const Point p = g.point(n);
            CHECK((p.x - mid.x) * (p.x - mid.x) + (p.y - mid.y) * (p.y - mid.y) >= r2);
        }
    }
}

TEST_CASE("greedy forwarding gets stuck on the trap fixture; the cores do not")
{
    const Instance inst = loadFixture("greedy-trap.json");
    const EmbeddedGraph& g = inst.graph;
    auto dist2 = [&](NodeId n) {
        const Point p = g.point(n);
        return (p.x - inst.t().x) * (p.x - inst.t().x) + (p.y - inst.t().y) * (p.y - inst.t().y);
    };
    NodeId at = inst.source;
    for (;;) {
        NodeId best = at;
        for (NodeId n : g.neighbors(at))
            if (dist2(n) < dist2(best))
                best = n;
        if (best == at)
            break;
        at = best;
    }
    CHECK(at != inst.target);

    for (Direction c : {Direction::L, Direction::R})
        CHECK(corePathOracle(inst, c).back() == inst.target);
}

TEST_CASE("rng helpers: ranges and rejection sampling")
{
    Rng rng(1);
    std::size_t counts[3] = {};
    for (int i = 0; i < 30000; ++i) {
        const double u = uniformReal(rng);
        CHECK((u >= 0.0 && u < 1.0));
        const double v = uniformReal(rng, -2.0, 3.0);
        CHECK((v >= -2.0 && v < 3.0));
        ++counts[uniformIndex(rng, 3)];
    }
    for (std::size_t c : counts)
        CHECK(c == doctest::Approx(10000).epsilon(0.05));
    CHECK(mixSeed(1, 2) != mixSeed(2, 1));
}
