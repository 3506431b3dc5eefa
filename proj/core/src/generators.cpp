#include "berger/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>
#include <vector>

#include "berger/random.hpp"
#include "berger/topology.hpp"

namespace berger {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

struct Candidate
{
    std::vector<Point> points;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    // Source-target pairs to try, best first.
    std::vector<std::pair<NodeId, NodeId>> pairs;
};

void addEdge(std::set<std::pair<NodeId, NodeId>>& edges, NodeId a, NodeId b)
{
    if (a != b)
        edges.emplace(std::min(a, b), std::max(a, b));
}

// Inner ring at radius 1, outer ring at radius 2 with its angles shifted by
// `offset` steps, joined by a band that advances whichever ring is behind.
Candidate rings(std::size_t inner, std::size_t outer, double offset, Rng& rng)
{
    Candidate c;
    auto place = [&](std::size_t count, double radius, double shift, const char* prefix) {
        const double step = kTau / static_cast<double>(count);
        for (std::size_t i = 0; i < count; ++i) {
            const double a = step * (static_cast<double>(i) + shift) + uniformReal(rng, -0.15, 0.15) * step;
            const double r = radius + uniformReal(rng, -0.06, 0.06);
            c.points.push_back({r * std::cos(a), r * std::sin(a)});
            c.labels.push_back(prefix + std::to_string(i));
        }
    };
    place(inner, 1.0, 0.0, "i");
    // A small outer ring is pushed out so its chords clear the inner ring.
    place(outer, std::max(2.0, 1.4 / std::cos(kTau / 2.0 / static_cast<double>(outer))), offset, "o");

    const auto in = [&](std::size_t i) { return static_cast<NodeId>(i % inner); };
    const auto out = [&](std::size_t j) { return static_cast<NodeId>(inner + j % outer); };
    std::set<std::pair<NodeId, NodeId>> edges;
    for (std::size_t i = 0; i < inner; ++i)
        addEdge(edges, in(i), in(i + 1));
    for (std::size_t j = 0; j < outer; ++j)
        addEdge(edges, out(j), out(j + 1));

    std::size_t i = 0;
    std::size_t j = 0;
    addEdge(edges, in(0), out(0));
    while (i < inner || j < outer) {
        const double nextInner = static_cast<double>(i + 1) / static_cast<double>(inner);
        const double nextOuter = (static_cast<double>(j + 1) + offset) / static_cast<double>(outer);
        if (j == outer || (i < inner && nextInner <= nextOuter))
            ++i;
        else
            ++j;
        addEdge(edges, in(i), out(j));
    }
    for (const auto& [a, b] : edges)
        c.edges.push_back({a, b});
    return c;
}

Candidate doubleRing(std::size_t size, Rng& rng)
{
    const std::size_t inner = size / 2;
    Candidate c = rings(inner, size - inner, 0.5, rng);
    // t: the outer node nearest the direction opposite s.
    const Point s = c.points[0];
    NodeId t = static_cast<NodeId>(inner);
    for (NodeId v = static_cast<NodeId>(inner); v < size; ++v)
        if (std::hypot(c.points[v].x + s.x, c.points[v].y + s.y) < std::hypot(c.points[t].x + s.x, c.points[t].y + s.y))
            t = v;
    c.pairs.push_back({0, t});
    return c;
}

Candidate ladder(std::size_t size, Rng& rng)
{
    const std::size_t inner = size / 2;
    Candidate c = rings(inner, size - inner, 0.0, rng);
    c.pairs.push_back({0, static_cast<NodeId>(inner / 2)});
    return c;
}

Candidate gabriel(std::size_t size, Rng& rng)
{
    // Triangular lattice with unit spacing, cropped to the `size` sites
    // nearest a seeded point near the origin. Moving the crop centre changes
    // the boundary shape between attempts.
    const double cx = uniformReal(rng, -0.5, 0.5);
    const double cy = uniformReal(rng, -0.5, 0.5);
    const int span = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(size)))) + 2;
    struct Site
    {
        double d2;
        int a;
        int b;
    };
    std::vector<Site> sites;
    const double h = std::sqrt(3.0) / 2.0;
    for (int a = -span; a <= span; ++a)
        for (int b = -span; b <= span; ++b) {
            const double x = a + 0.5 * b;
            const double y = h * b;
            sites.push_back({(x - cx) * (x - cx) + (y - cy) * (y - cy), a, b});
        }
    std::sort(sites.begin(), sites.end(), [](const Site& l, const Site& r) {
        return std::tie(l.d2, l.a, l.b) < std::tie(r.d2, r.a, r.b);
    });

    // A site with fewer than three chosen lattice neighbors would become a
    // degree-2 node; trade it for the nearest unchosen site that has three.
    std::set<std::pair<int, int>> chosen;
    for (std::size_t i = 0; i < size; ++i)
        chosen.emplace(sites[i].a, sites[i].b);
    auto support = [&](int a, int b) {
        static constexpr int kOffsets[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
        int n = 0;
        for (const auto& o : kOffsets)
            n += chosen.contains({a + o[0], b + o[1]});
        return n;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (auto it = sites.rbegin(); it != sites.rend() && !changed; ++it) {
            if (!chosen.contains({it->a, it->b}) || support(it->a, it->b) >= 3)
                continue;
            chosen.erase({it->a, it->b});
            for (const Site& cand : sites)
                if (!chosen.contains({cand.a, cand.b}) && (cand.a != it->a || cand.b != it->b)
                    && support(cand.a, cand.b) >= 3) {
                    chosen.emplace(cand.a, cand.b);
                    changed = true;
                    break;
                }
            if (!changed)
                chosen.emplace(it->a, it->b);
        }
    }

    Candidate c;
    for (const Site& st : sites) {
        if (!chosen.contains({st.a, st.b}))
            continue;
        c.points.push_back({st.a + 0.5 * st.b + uniformReal(rng, -0.15, 0.15), h * st.b + uniformReal(rng, -0.15, 0.15)});
        c.labels.push_back("n" + std::to_string(c.labels.size()));
    }

    constexpr double kRange = 1.45;
    auto d2 = [](const Point& p, const Point& q) { return (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y); };
    for (NodeId u = 0; u < size; ++u)
        for (NodeId v = u + 1; v < size; ++v) {
            const double len2 = d2(c.points[u], c.points[v]);
            if (len2 > kRange * kRange)
                continue;
            const Point mid{(c.points[u].x + c.points[v].x) / 2, (c.points[u].y + c.points[v].y) / 2};
            bool empty = true;
            for (NodeId w = 0; w < size && empty; ++w)
                if (w != u && w != v && d2(mid, c.points[w]) < len2 / 4)
                    empty = false;
            if (empty)
                c.edges.push_back({u, v});
        }

    const EmbeddedGraph g(c.points, c.edges);
    std::vector<bool> boundary(size, false);
    if (g.connected()) {
        const FaceSet faces(g);
        for (NodeId n : faces[faces.externalFace()].nodes)
            boundary[n] = true;
    }
    std::vector<std::pair<double, std::pair<NodeId, NodeId>>> ranked;
    std::vector<std::pair<double, std::pair<NodeId, NodeId>>> fallback;
    for (NodeId u = 0; u < size; ++u)
        for (NodeId v = u + 1; v < size; ++v)
            if (!g.adjacent(u, v))
                (boundary[u] || boundary[v] ? fallback : ranked).push_back({-d2(c.points[u], c.points[v]), {u, v}});
    std::sort(ranked.begin(), ranked.end());
    std::sort(fallback.begin(), fallback.end());
    // The longest third of the interior pairs in a seeded order, then pairs
    // touching the boundary, which rarely work.
    if (ranked.size() > 3)
        ranked.resize(ranked.size() / 3);
    for (std::size_t i = ranked.size(); i > 1; --i)
        std::swap(ranked[i - 1], ranked[uniformIndex(rng, i)]);
    ranked.insert(ranked.end(), fallback.begin(), fallback.end());
    for (std::size_t i = 0; i < ranked.size() && i < 24; ++i)
        c.pairs.push_back(ranked[i].second);
    return c;
}

Candidate build(Family family, std::size_t size, std::uint64_t seed)
{
    if (size < 6)
        throw std::invalid_argument("generated instances need at least 6 nodes");
    Rng rng(seed);
    switch (family) {
    case Family::DoubleRing: return doubleRing(size, rng);
    case Family::TriangulatedLadder:
        if (size < 8)
            throw std::invalid_argument("triangulated-ladder needs at least 8 nodes");
        return ladder(size, rng);
    case Family::GabrielUnitDisk: return gabriel(size, rng);
    }
    throw std::invalid_argument("unknown family");
}

Instance toInstance(const Candidate& c, std::pair<NodeId, NodeId> st)
{
    return {EmbeddedGraph(c.points, c.edges, c.labels), st.first, st.second};
}

}  // namespace

const char* toString(Family family)
{
    switch (family) {
    case Family::DoubleRing: return "double-ring";
    case Family::TriangulatedLadder: return "triangulated-ladder";
    case Family::GabrielUnitDisk: return "gabriel-unit-disk";
    }
    return "unknown";
}

std::optional<Family> parseFamily(std::string_view name)
{
    for (Family f : {Family::DoubleRing, Family::TriangulatedLadder, Family::GabrielUnitDisk})
        if (name == toString(f))
            return f;
    return std::nullopt;
}

Instance generateCandidate(Family family, std::size_t size, std::uint64_t seed)
{
    const Candidate c = build(family, size, seed);
    if (c.pairs.empty())
        throw GenerationError("no source-target pair available");
    return toInstance(c, c.pairs.front());
}

GeneratedInstance generateFamily(Family family, std::size_t size, std::uint64_t seed, int maxAttempts)
{
    for (int attempt = 0; attempt < maxAttempts; ++attempt) {
        const std::uint64_t s = attempt == 0 ? seed : mixSeed(seed, static_cast<std::uint64_t>(attempt));
        const Candidate c = build(family, size, s);
        for (const auto& st : c.pairs) {
            Instance inst = toInstance(c, st);
            if (validateInstance(inst).admissible())
                return {std::move(inst), s, attempt + 1};
        }
    }
    throw GenerationError(std::string("no admissible ") + toString(family) + " instance of size " + std::to_string(size)
                          + " from seed " + std::to_string(seed) + " within " + std::to_string(maxAttempts)
                          + " attempts");
}

}  // namespace berger
