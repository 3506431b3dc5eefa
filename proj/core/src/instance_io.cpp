#include "berger/instance_io.hpp"

#include <map>
#include <utility>
#include <vector>

#include "json_util.hpp"

namespace berger {

namespace detail {

namespace {

std::string idOf(const json& v, const JsonReader& reader, const json::json_pointer& where)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<std::int64_t>());
    reader.fail(where, "node id must be a string or an integer");
}

}  // namespace

Instance instanceFromJson(const json& doc, const JsonReader& reader, const json::json_pointer& where)
{
    reader.expectKeys(doc, where, {"nodes", "edges", "source", "target", "name"});

    const json& nodes = reader.require(doc, where, "nodes");
    if (!nodes.is_array())
        reader.fail(where / "nodes", "expected an array");
    std::vector<Point> points;
    std::vector<std::string> labels;
    std::map<std::string, NodeId> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto at = where / "nodes" / i;
        const json& n = nodes[i];
        if (!n.is_array() || n.size() != 3)
            reader.fail(at, "expected [id, x, y]");
        std::string id = idOf(n[0], reader, at / 0);
        if (index.contains(id))
            reader.fail(at / 0, "duplicate node id \"" + id + "\"");
        index.emplace(id, static_cast<NodeId>(points.size()));
        points.push_back({reader.number(n[1], at / 1), reader.number(n[2], at / 2)});
        labels.push_back(std::move(id));
    }

    auto lookup = [&](const json& v, const json::json_pointer& at) {
        const std::string id = idOf(v, reader, at);
        const auto it = index.find(id);
        if (it == index.end())
            reader.fail(at, "unknown node id \"" + id + "\"");
        return it->second;
    };

    const json& edges = reader.require(doc, where, "edges");
    if (!edges.is_array())
        reader.fail(where / "edges", "expected an array");
    std::vector<Edge> edgeList;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto at = where / "edges" / i;
        if (!edges[i].is_array() || edges[i].size() != 2)
            reader.fail(at, "expected [id, id]");
        edgeList.push_back({lookup(edges[i][0], at / 0), lookup(edges[i][1], at / 1)});
    }

    const NodeId source = lookup(reader.require(doc, where, "source"), where / "source");
    const NodeId target = lookup(reader.require(doc, where, "target"), where / "target");
    return {EmbeddedGraph(std::move(points), std::move(edgeList), std::move(labels)), source, target};
}

json instanceToJson(const Instance& inst)
{
    const EmbeddedGraph& g = inst.graph;
    json nodes = json::array();
    for (NodeId n = 0; n < g.nodeCount(); ++n)
        nodes.push_back(json::array({labelToJson(g.label(n)), g.point(n).x, g.point(n).y}));
    json edges = json::array();
    for (const Edge& e : g.rawEdges())
        edges.push_back(json::array({labelToJson(g.label(e.u)), labelToJson(g.label(e.v))}));
    json doc = json::object();
    doc["nodes"] = std::move(nodes);
    doc["edges"] = std::move(edges);
    doc["source"] = labelToJson(g.label(inst.source));
    doc["target"] = labelToJson(g.label(inst.target));
    return doc;
}

}  // namespace detail

Instance parseInstance(std::string_view text, std::string_view origin)
{
    const detail::JsonReader reader(origin);
    return detail::instanceFromJson(reader.parse(text), reader, detail::json::json_pointer());
}

Instance readInstanceFile(const std::filesystem::path& path)
{
    return parseInstance(detail::readFile(path), path.string());
}

std::string formatInstance(const Instance& inst)
{
    // One node or edge per line keeps fixture diffs readable.
    const detail::json doc = detail::instanceToJson(inst);
    std::string out = "{\n  \"nodes\": [\n";
    for (std::size_t i = 0; i < doc["nodes"].size(); ++i)
        out += "    " + doc["nodes"][i].dump() + (i + 1 < doc["nodes"].size() ? ",\n" : "\n");
    out += "  ],\n  \"edges\": [\n";
    for (std::size_t i = 0; i < doc["edges"].size(); ++i)
        out += "    " + doc["edges"][i].dump() + (i + 1 < doc["edges"].size() ? ",\n" : "\n");
    out += "  ],\n  \"source\": " + doc["source"].dump() + ",\n  \"target\": " + doc["target"].dump() + "\n}\n";
    return out;
}

}  // namespace berger
