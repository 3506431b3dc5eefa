#include "berger/fixtures.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berger::fixtures {

namespace {

struct Spec
{
    std::vector<std::pair<std::string, Point>> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    std::string source;
    std::string target;
};

Instance build(const Spec& spec)
{
    std::vector<Point> points;
    std::vector<std::string> labels;
    for (const auto& [label, p] : spec.nodes) {
        labels.push_back(label);
        points.push_back(p);
    }
    auto id = [&](const std::string& label) {
        for (NodeId i = 0; i < labels.size(); ++i)
            if (labels[i] == label)
                return i;
        throw std::logic_error("fixture references unknown node " + label);
    };
    std::vector<Edge> edges;
    for (const auto& [a, b] : spec.edges)
        edges.push_back({id(a), id(b)});
    const NodeId source = id(spec.source);
    const NodeId target = id(spec.target);
    return {EmbeddedGraph(std::move(points), std::move(edges), std::move(labels)), source, target};
}

}  // namespace

Instance octahedron()
{
    return build({
        {{"s", {0, 9}}, {"B", {-8, -5}}, {"C", {8, -5}}, {"t", {0, -2}}, {"b", {1.7, 1}}, {"c", {-1.7, 1}}},
        {{"s", "B"}, {"s", "C"}, {"B", "C"}, {"t", "b"}, {"t", "c"}, {"b", "c"},
         {"t", "B"}, {"t", "C"}, {"b", "C"}, {"b", "s"}, {"c", "s"}, {"c", "B"}},
        "s",
        "t",
    });
}

Instance strandedNode()
{
    return build({
        {{"s", {0, 0}}, {"t", {10, 0}}, {"x", {5.3, 1}}, {"y1", {2, -3}}, {"y2", {5, -3.5}}, {"y3", {8, -3}},
         {"u", {5, 6}}, {"w", {5, -8}}},
        {{"x", "y1"}, {"x", "y2"}, {"x", "y3"}, {"y1", "y2"}, {"y2", "y3"}, {"s", "y1"}, {"t", "y3"}, {"s", "u"},
         {"t", "u"}, {"u", "y1"}, {"u", "y3"}, {"s", "w"}, {"t", "w"}, {"w", "y1"}, {"w", "y2"}, {"w", "y3"}},
        "s",
        "t",
    });
}

Instance notchedWheel()
{
    return build({
        {{"h", {0, -6}}, {"s", {-4, 2}}, {"n", {0, -1}}, {"t", {4, 2.5}}, {"r1", {6, -3}}, {"r2", {3, -9}},
         {"r3", {-3, -9.5}}, {"r4", {-6, -3}}},
        {{"r1", "t"}, {"t", "n"}, {"n", "s"}, {"s", "r4"}, {"r4", "r3"}, {"r3", "r2"}, {"r2", "r1"},
         {"h", "r1"}, {"h", "t"}, {"h", "n"}, {"h", "s"}, {"h", "r4"}, {"h", "r3"}, {"h", "r2"}},
        "s",
        "t",
    });
}

}  // namespace berger::fixtures
