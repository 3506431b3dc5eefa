#include "berger/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace berger {

namespace {

std::string names(const EmbeddedGraph& g, const std::vector<NodeId>& ids)
{
    std::string out;
    for (NodeId id : ids) {
        if (!out.empty())
            out += ", ";
        out += g.label(id);
    }
    return out;
}

bool collinearOnSegment(const Point& a, const Point& p, const Point& b)
{
    return orientation(a, b, p) == Orientation::Collinear && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x)
        && std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

void add(ValidationReport& report, ViolationKind kind, std::string message, std::vector<NodeId> witness = {})
{
    report.violations.push_back({kind, std::move(message), std::move(witness)});
}

void checkEmbedding(const Instance& inst, ValidationReport& report)
{
    const EmbeddedGraph& g = inst.graph;
    const auto& edges = g.edges();

    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& a = edges[i];
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& b = edges[j];
            if (segmentsIntersect(g.point(a.u), g.point(a.v), g.point(b.u), g.point(b.v)))
                add(report, ViolationKind::EdgeCrossing,
                    "edges " + g.label(a.u) + "-" + g.label(a.v) + " and " + g.label(b.u) + "-" + g.label(b.v)
                        + " intersect away from a shared node",
                    {a.u, a.v, b.u, b.v});
        }
    }

    for (const Edge& e : edges) {
        for (NodeId w = 0; w < g.nodeCount(); ++w) {
            if (w == e.u || w == e.v)
                continue;
            if (collinearOnSegment(g.point(e.u), g.point(w), g.point(e.v)))
                add(report, ViolationKind::NodeOnEdge,
                    "node " + g.label(w) + " lies on edge " + g.label(e.u) + "-" + g.label(e.v), {w, e.u, e.v});
        }
    }
}

void checkGeneralPosition(const Instance& inst, ValidationReport& report)
{
    const EmbeddedGraph& g = inst.graph;
    const Point& s = inst.s();
    const Point& t = inst.t();

    for (NodeId w = 0; w < g.nodeCount(); ++w) {
        if (w == inst.source || w == inst.target)
            continue;
        if (collinearOnSegment(s, g.point(w), t))
            add(report, ViolationKind::NodeOnSegment, "node " + g.label(w) + " lies on the source-target segment", {w});
    }

    for (const Edge& e : g.edges()) {
        const Point& a = g.point(e.u);
        const Point& b = g.point(e.v);
        if (orientation(s, t, a) == Orientation::Collinear && orientation(s, t, b) == Orientation::Collinear
            && segmentsIntersect(a, b, s, t))
            add(report, ViolationKind::EdgeOverlapsSegment,
                "edge " + g.label(e.u) + "-" + g.label(e.v) + " overlaps the source-target segment", {e.u, e.v});
    }

    for (NodeId v = 0; v < g.nodeCount(); ++v) {
        const auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (orientation(g.point(v), g.point(nb[i]), g.point(nb[j])) == Orientation::Collinear)
                    add(report, ViolationKind::CollinearNeighbors,
                        "neighbors " + g.label(nb[i]) + " and " + g.label(nb[j]) + " are collinear with "
                            + g.label(v),
                        {nb[i], v, nb[j]});
    }
}

void checkReducedConnectivity(const Instance& inst, ValidationReport& report)
{
    const EmbeddedGraph reduced = reducedGraph(inst);
    const auto cut = separatingSet(reduced);
    if (!cut)
        return;
    if (cut->empty()) {
        // Name the nodes cut off from the source.
        std::vector<NodeId> stranded;
        std::vector<bool> seen(reduced.nodeCount(), false);
        std::vector<NodeId> stack{inst.source};
        seen[inst.source] = true;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v : reduced.neighbors(u))
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        for (NodeId v = 0; v < reduced.nodeCount(); ++v)
            if (!seen[v])
                stranded.push_back(v);
        add(report, ViolationKind::ReducedDisconnected,
            "G-st disconnected: {" + names(reduced, stranded) + "} unreachable from " + reduced.label(inst.source),
            stranded);
        return;
    }
    add(report, ViolationKind::ReducedSeparatingPair,
        "G-st is not 3-connected: removing {" + names(reduced, *cut) + "} disconnects it", *cut);
}

}  // namespace

const char* toString(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::NonFiniteCoordinate: return "non-finite-coordinate";
    case ViolationKind::DuplicateCoordinates: return "duplicate-coordinates";
    case ViolationKind::SelfLoop: return "self-loop";
    case ViolationKind::DuplicateEdge: return "duplicate-edge";
    case ViolationKind::EdgeCrossing: return "edge-crossing";
    case ViolationKind::NodeOnEdge: return "node-on-edge";
    case ViolationKind::SourceEqualsTarget: return "source-equals-target";
    case ViolationKind::SourceTargetAdjacent: return "source-target-adjacent";
    case ViolationKind::Disconnected: return "disconnected";
    case ViolationKind::NodeOnSegment: return "node-on-segment";
    case ViolationKind::EdgeOverlapsSegment: return "edge-overlaps-segment";
    case ViolationKind::CollinearNeighbors: return "collinear-neighbors";
    case ViolationKind::TooFewNodes: return "too-few-nodes";
    case ViolationKind::ReducedDisconnected: return "reduced-disconnected";
    case ViolationKind::ReducedSeparatingPair: return "reduced-separating-pair";
    }
    return "unknown";
}

bool ValidationReport::contains(ViolationKind kind) const { return first(kind) != nullptr; }

const Violation* ValidationReport::first(ViolationKind kind) const
{
    for (const Violation& v : violations)
        if (v.kind == kind)
            return &v;
    return nullptr;
}

ValidationReport validateInstance(const Instance& inst)
{
    ValidationReport report;
    const EmbeddedGraph& g = inst.graph;

    for (NodeId v = 0; v < g.nodeCount(); ++v)
        if (!isFinite(g.point(v)))
            add(report, ViolationKind::NonFiniteCoordinate, "node " + g.label(v) + " has a non-finite coordinate", {v});
    if (!report.admissible())
        return report;

    std::vector<NodeId> order(g.nodeCount());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return g.point(a) < g.point(b); });
    bool duplicates = false;
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (g.point(order[i - 1]) == g.point(order[i])) {
            duplicates = true;
            add(report, ViolationKind::DuplicateCoordinates,
                "nodes " + g.label(order[i - 1]) + " and " + g.label(order[i]) + " share coordinates "
                    + toString(g.point(order[i])),
                {order[i - 1], order[i]});
        }
    }

    std::vector<std::pair<NodeId, NodeId>> seenEdges;
    for (const Edge& e : g.rawEdges()) {
        if (e.u == e.v) {
            add(report, ViolationKind::SelfLoop, "self-loop at " + g.label(e.u), {e.u});
            continue;
        }
        const std::pair<NodeId, NodeId> key = std::minmax(e.u, e.v);
        if (std::find(seenEdges.begin(), seenEdges.end(), key) != seenEdges.end())
            add(report, ViolationKind::DuplicateEdge, "edge " + g.label(e.u) + "-" + g.label(e.v) + " repeated",
                {e.u, e.v});
        else
            seenEdges.push_back(key);
    }

    if (inst.source == inst.target || inst.s() == inst.t())
        add(report, ViolationKind::SourceEqualsTarget, "source and target coincide", {inst.source, inst.target});
    else if (g.adjacent(inst.source, inst.target))
        add(report, ViolationKind::SourceTargetAdjacent, "source and target are neighbors",
            {inst.source, inst.target});

    if (g.nodeCount() < 4)
        add(report, ViolationKind::TooFewNodes, "at least 4 nodes are needed for 3-connectivity");

    if (!g.connected())
        add(report, ViolationKind::Disconnected, "graph is disconnected");

    // Geometry is meaningless once distinct nodes coincide.
    if (duplicates || report.contains(ViolationKind::SourceEqualsTarget))
        return report;

    checkEmbedding(inst, report);
    checkGeneralPosition(inst, report);
    if (g.nodeCount() >= 4)
        checkReducedConnectivity(inst, report);
    return report;
}

EmbeddedGraph reducedGraph(const Instance& inst)
{
    const EmbeddedGraph& g = inst.graph;
    const Point& s = inst.s();
    const Point& t = inst.t();
    return g.filterEdges([&](const Edge& e) { return !segmentsIntersect(g.point(e.u), g.point(e.v), s, t); });
}

std::optional<std::vector<NodeId>> separatingSet(const EmbeddedGraph& g)
{
    const std::size_t n = g.nodeCount();
    if (!g.connected())
        return std::vector<NodeId>{};
    std::vector<bool> removed(n, false);
    for (NodeId u = 0; u < n; ++u) {
        removed[u] = true;
        for (NodeId v = u + 1; v < n; ++v) {
            removed[v] = true;
            const bool ok = n - 2 < 2 || g.connectedWithout(removed);
            removed[v] = false;
            if (!ok)
                return std::vector<NodeId>{u, v};
        }
        removed[u] = false;
    }
    return std::nullopt;
}

FaceSet::FaceSet(const EmbeddedGraph& g)
{
    if (!g.connected())
        throw std::invalid_argument("face enumeration needs a connected graph");
    if (g.nodeCount() == 0)
        return;

    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    dartFace_.assign(g.dartCount(), kUnset);
    for (std::size_t start = 0; start < g.dartCount(); ++start) {
        if (dartFace_[start] != kUnset)
            continue;
        const std::size_t id = faces_.size();
        Face face;
        std::size_t d = start;
        do {
            dartFace_[d] = id;
            face.nodes.push_back(g.dartTail(d));
            const NodeId v = g.dartHead(d);
            const std::size_t deg = g.degree(v);
            const std::size_t back = g.dartTwinIndex(d);
            d = g.dartOffset(v) + (back + deg - 1) % deg;
        } while (d != start);
        faces_.push_back(std::move(face));
    }

    // The external face owns the corner pointing away from the graph at its
    // leftmost (then lowest) node.
    NodeId left = 0;
    for (NodeId v = 1; v < g.nodeCount(); ++v)
        if (g.point(v) < g.point(left))
            left = v;
    if (faces_.empty()) {
        faces_.push_back(Face{{left}, true});
        external_ = 0;
        return;
    }
    const Point& p = g.point(left);
    const Point outside{p.x - std::max(1.0, std::fabs(p.x)), p.y};
    const auto first = firstInSweep(g.neighborPoints(left), p, outside, Direction::R);
    external_ = dartFace_[g.dart(left, *g.find(*first))];
    faces_[external_].external = true;
}

FaceSet enumerateFaces(const EmbeddedGraph& g) { return FaceSet(g); }

bool GreenFace::isGreen(NodeId n) const { return std::binary_search(nodes.begin(), nodes.end(), n); }

GreenFace greenFace(const Instance& inst)
{
    GreenFace green;
    green.reduced = reducedGraph(inst);
    green.faces = FaceSet(green.reduced);

    // The open segment leaves s inside the corner that contains ray s->t and
    // enters t inside the corner containing ray t->s.
    auto faceAt = [&](NodeId from, const Point& toward) {
        const auto nb = green.reduced.neighborPoints(from);
        const auto first = firstInSweep(nb, green.reduced.point(from), toward, Direction::R);
        if (!first)
            throw TopologyError("node " + green.reduced.label(from) + " is isolated in G-st");
        return green.faces.faceOfDart(green.reduced.dart(from, *green.reduced.find(*first)));
    };
    const std::size_t atSource = faceAt(inst.source, inst.t());
    const std::size_t atTarget = faceAt(inst.target, inst.s());
    if (atSource != atTarget)
        throw TopologyError("source-target segment spans more than one face of G-st");

    green.face = atSource;
    green.nodes = green.faces[atSource].nodes;
    std::sort(green.nodes.begin(), green.nodes.end());
    green.nodes.erase(std::unique(green.nodes.begin(), green.nodes.end()), green.nodes.end());
    green.source = inst.source;
    green.target = inst.target;
    return green;
}

BlueFace blueFace(const GreenFace& green, NodeId k)
{
    if (!green.isGreen(k))
        throw TopologyError("node " + green.reduced.label(k) + " is not green");
    if (k == green.source || k == green.target)
        throw TopologyError("blue faces are defined for green nodes other than s and t");

    BlueFace blue;
    const EmbeddedGraph& g = green.reduced;
    for (std::size_t i = 0; i < g.degree(k); ++i) {
        const std::size_t f = green.faces.faceOfDart(g.dartOffset(k) + i);
        if (f != green.face && std::find(blue.faces.begin(), blue.faces.end(), f) == blue.faces.end())
            blue.faces.push_back(f);
    }
    std::sort(blue.faces.begin(), blue.faces.end());
    for (std::size_t f : blue.faces)
        for (NodeId v : green.faces[f].nodes)
            if (!green.isGreen(v))
                blue.nodes.push_back(v);
    std::sort(blue.nodes.begin(), blue.nodes.end());
    blue.nodes.erase(std::unique(blue.nodes.begin(), blue.nodes.end()), blue.nodes.end());
    return blue;
}

BlueFace blueFace(const Instance& inst, NodeId k) { return blueFace(greenFace(inst), k); }

std::vector<FaceClassification> classifyFaces(const GreenFace& green)
{
    std::vector<FaceClassification> out(green.faces.size());
    out[green.face].kind = FaceClass::Green;
    for (std::size_t f = 0; f < green.faces.size(); ++f) {
        if (f == green.face)
            continue;
        for (NodeId v : green.faces[f].nodes)
            if (green.isGreen(v) && v != green.source && v != green.target
                && std::find(out[f].blueFor.begin(), out[f].blueFor.end(), v) == out[f].blueFor.end())
                out[f].blueFor.push_back(v);
        std::sort(out[f].blueFor.begin(), out[f].blueFor.end());
        out[f].kind = out[f].blueFor.empty() ? FaceClass::Other : FaceClass::Blue;
    }
    return out;
}

std::vector<NodeId> corePathOracle(const Instance& inst, Direction c)
{
    const EmbeddedGraph& g = inst.graph;
    const Point& s = inst.s();
    const Point& t = inst.t();
    std::vector<NodeId> path{inst.source};
    NodeId current = inst.source;
    Point reference = t;
    for (std::size_t hop = 0; hop < g.nodeCount(); ++hop) {
        const auto next = nextNode(g.neighborPoints(current), g.point(current), reference, s, t, c, std::nullopt);
        if (!next)
            throw TopologyError("core traversal dead-ends at " + g.label(current));
        const NodeId id = *g.find(*next);
        path.push_back(id);
        if (id == inst.target)
            return path;
        reference = g.point(current);
        current = id;
    }
    std::ostringstream msg;
    msg << "core traversal (" << toChar(c) << ") did not reach the target within " << g.nodeCount() << " hops";
    throw TopologyError(msg.str());
}

ThreadPath threadPathOracle(const Instance& inst, NodeId origin, NodeId reference, NodeId k, Direction c)
{
    if (k == origin)
        throw std::invalid_argument("a thread cannot skip its own origin");
    const EmbeddedGraph& g = inst.graph;
    const Point& s = inst.s();
    const Point& t = inst.t();
    const std::optional<Point> skip = g.point(k);

    ThreadPath out;
    out.nodes.push_back(origin);
    NodeId current = origin;
    Point ref = g.point(reference);
    for (std::size_t hop = 0; hop <= g.dartCount(); ++hop) {
        const auto next = nextNode(g.neighborPoints(current), g.point(current), ref, s, t, c, skip);
        if (!next)
            return out;
        const NodeId id = *g.find(*next);
        out.nodes.push_back(id);
        if (id == inst.target) {
            out.reachedTarget = true;
            return out;
        }
        if (id == origin)
            return out;
        ref = g.point(current);
        current = id;
    }
    throw TopologyError("thread traversal from " + g.label(origin) + " skipping " + g.label(k)
                        + " neither reached the target nor returned");
}

ThreadPath threadPathOracle(const Instance& inst, NodeId origin, NodeId k, Direction c)
{
    if (origin == inst.source)
        return threadPathOracle(inst, origin, inst.target, k, c);
    const auto core = corePathOracle(inst, c);
    const auto it = std::find(core.begin() + 1, core.end(), origin);
    if (it == core.end() || origin == inst.target)
        throw std::invalid_argument("origin " + inst.graph.label(origin) + " is not an internal node of the core path");
    return threadPathOracle(inst, origin, *(it - 1), k, c);
}

}  // namespace berger
