#include "berger/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace berger {

EmbeddedGraph::EmbeddedGraph(std::vector<Point> points, std::vector<Edge> edges, std::vector<std::string> labels)
    : points_(std::move(points)), labels_(std::move(labels)), rawEdges_(std::move(edges))
{
    const std::size_t n = points_.size();
    if (labels_.empty()) {
        labels_.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            labels_.push_back(std::to_string(i));
    }
    if (labels_.size() != n)
        throw std::invalid_argument("label count does not match node count");

    std::set<std::pair<NodeId, NodeId>> seen;
    for (const Edge& e : rawEdges_) {
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v)
            continue;
        const std::pair<NodeId, NodeId> key = std::minmax(e.u, e.v);
        if (seen.insert(key).second)
            edges_.push_back({key.first, key.second});
    }

    std::vector<std::vector<NodeId>> adj(n);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (NodeId u = 0; u < n; ++u) {
        const Point& center = points_[u];
        std::stable_sort(adj[u].begin(), adj[u].end(), [&](NodeId a, NodeId b) {
            return angularLess(center, points_[a], points_[b]);
        });
    }

    offsets_.assign(n + 1, 0);
    for (NodeId u = 0; u < n; ++u)
        offsets_[u + 1] = offsets_[u] + adj[u].size();
    heads_.reserve(offsets_[n]);
    tails_.reserve(offsets_[n]);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : adj[u]) {
            tails_.push_back(u);
            heads_.push_back(v);
            headPoints_.push_back(points_[v]);
        }
    }
    twinIndex_.resize(heads_.size());
    for (std::size_t d = 0; d < heads_.size(); ++d) {
        const NodeId v = heads_[d];
        const NodeId u = tails_[d];
        const auto begin = heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
        const auto end = heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
        twinIndex_[d] = static_cast<std::size_t>(std::find(begin, end, u) - begin);
    }
}

std::span<const NodeId> EmbeddedGraph::neighbors(NodeId n) const
{
    return {heads_.data() + offsets_[n], offsets_[n + 1] - offsets_[n]};
}

std::span<const Point> EmbeddedGraph::neighborPoints(NodeId n) const
{
    return {headPoints_.data() + offsets_[n], offsets_[n + 1] - offsets_[n]};
}

bool EmbeddedGraph::adjacent(NodeId u, NodeId v) const
{
    const auto nb = neighbors(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::size_t EmbeddedGraph::dart(NodeId u, NodeId v) const
{
    const auto nb = neighbors(u);
    const auto it = std::find(nb.begin(), nb.end(), v);
    if (it == nb.end())
        throw std::invalid_argument("no edge " + labels_[u] + "-" + labels_[v]);
    return offsets_[u] + static_cast<std::size_t>(it - nb.begin());
}

std::optional<NodeId> EmbeddedGraph::find(const Point& p) const
{
    for (NodeId i = 0; i < points_.size(); ++i)
        if (points_[i] == p)
            return i;
    return std::nullopt;
}

std::optional<NodeId> EmbeddedGraph::findLabel(const std::string& label) const
{
    for (NodeId i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return i;
    return std::nullopt;
}

bool EmbeddedGraph::connectedWithout(const std::vector<bool>& removed) const
{
    const std::size_t n = points_.size();
    std::vector<bool> seen(n, false);
    std::vector<NodeId> stack;
    std::size_t remaining = 0;
    for (NodeId i = 0; i < n; ++i) {
        if (removed[i])
            continue;
        ++remaining;
        if (stack.empty() && !seen[i]) {
            seen[i] = true;
            stack.push_back(i);
        }
    }
    std::size_t reached = stack.size();
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (NodeId v : neighbors(u)) {
            if (removed[v] || seen[v])
                continue;
            seen[v] = true;
            ++reached;
            stack.push_back(v);
        }
    }
    return reached == remaining;
}

bool EmbeddedGraph::connected() const
{
    return connectedWithout(std::vector<bool>(points_.size(), false));
}

}  // namespace berger
