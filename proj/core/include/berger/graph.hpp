#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "berger/geometry.hpp"

namespace berger {

using NodeId = std::uint32_t;

struct Edge
{
    NodeId u = 0;
    NodeId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected graph with straight-line edges between 2-D node positions.
///
/// Construction accepts anything whose endpoints are in range, so that the
/// validator can report duplicate coordinates, self-loops and repeated edges
/// instead of failing early. The derived structure (adjacency, darts) ignores
/// self-loops and repeated edges; every algorithm beyond validation assumes an
/// admissible instance.
///
/// Adjacency lists are in counter-clockwise angular order around each node.
/// A dart is a directed edge (u, adjacency(u)[i]) with id dartOffset(u) + i.
class EmbeddedGraph
{
public:
    EmbeddedGraph() = default;
    EmbeddedGraph(std::vector<Point> points, std::vector<Edge> edges, std::vector<std::string> labels = {});

    std::size_t nodeCount() const { return points_.size(); }
    std::size_t edgeCount() const { return edges_.size(); }
    std::size_t dartCount() const { return 2 * edges_.size(); }

    const Point& point(NodeId n) const { return points_[n]; }
    const std::vector<Point>& points() const { return points_; }
    const std::string& label(NodeId n) const { return labels_[n]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Simple edges, u < v, in input order with repeats and self-loops removed.
    const std::vector<Edge>& edges() const { return edges_; }
    // Edges exactly as given.
    const std::vector<Edge>& rawEdges() const { return rawEdges_; }

    std::span<const NodeId> neighbors(NodeId n) const;
    std::span<const Point> neighborPoints(NodeId n) const;
    std::size_t degree(NodeId n) const { return neighbors(n).size(); }
    bool adjacent(NodeId u, NodeId v) const;

    std::optional<NodeId> find(const Point& p) const;
    std::optional<NodeId> findLabel(const std::string& label) const;

    std::size_t dartOffset(NodeId n) const { return offsets_[n]; }
    // Dart id of (u, v); requires adjacent(u, v).
    std::size_t dart(NodeId u, NodeId v) const;
    NodeId dartTail(std::size_t d) const { return tails_[d]; }
    NodeId dartHead(std::size_t d) const { return heads_[d]; }
    // Position of the tail inside the head's adjacency list.
    std::size_t dartTwinIndex(std::size_t d) const { return twinIndex_[d]; }

    // Same nodes and labels, only the edges for which keep(edge) holds.
    template <typename Pred>
    EmbeddedGraph filterEdges(Pred keep) const
    {
        std::vector<Edge> kept;
        for (const Edge& e : edges_)
            if (keep(e))
                kept.push_back(e);
        return EmbeddedGraph(points_, std::move(kept), labels_);
    }

    // Connectivity of the graph with the nodes flagged in `removed` deleted.
    bool connectedWithout(const std::vector<bool>& removed) const;
    bool connected() const;

private:
    std::vector<Point> points_;
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<Edge> rawEdges_;

    std::vector<std::size_t> offsets_;  // size nodeCount()+1
    std::vector<NodeId> heads_;
    std::vector<NodeId> tails_;
    std::vector<Point> headPoints_;
    std::vector<std::size_t> twinIndex_;
};

struct Instance
{
    EmbeddedGraph graph;
    NodeId source = 0;
    NodeId target = 0;

    const Point& s() const { return graph.point(source); }
    const Point& t() const { return graph.point(target); }
};

}  // namespace berger
