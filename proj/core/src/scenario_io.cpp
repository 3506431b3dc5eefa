#include "berger/scenario_io.hpp"

#include <utility>

#include "json_util.hpp"

namespace berger {

const char* toString(IngressCheck mode)
{
    return mode == IngressCheck::Literal ? "literal" : "edge-consistent";
}

std::optional<IngressCheck> parseIngressCheck(std::string_view name)
{
    if (name == "literal")
        return IngressCheck::Literal;
    if (name == "edge-consistent")
        return IngressCheck::EdgeConsistent;
    return std::nullopt;
}

std::string toHexBytes(std::string_view bytes)
{
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * bytes.size());
    for (unsigned char c : bytes) {
        out.push_back(kDigits[c >> 4]);
        out.push_back(kDigits[c & 15]);
    }
    return out;
}

namespace {

using detail::json;
using detail::JsonReader;
using Ptr = json::json_pointer;

struct InstanceRef
{
    std::string name;
    std::optional<Instance> instance;
    std::optional<Family> family;
    std::size_t size = 0;
    std::uint64_t seed = 1;
};

InstanceRef readInstanceRef(const json& v, const JsonReader& reader, const Ptr& where,
                            const std::filesystem::path& baseDir)
{
    InstanceRef ref;
    if (v.is_string()) {
        const std::filesystem::path path = baseDir / v.get<std::string>();
        ref.name = path.stem().string();
        ref.instance = readInstanceFile(path);
        return ref;
    }
    if (!v.is_object())
        reader.fail(where, "expected a file name, an inline instance or a generator block");
    if (v.contains("generator")) {
        reader.expectKeys(v, where, {"generator"});
        const json& gen = v["generator"];
        const Ptr at = where / "generator";
        reader.expectKeys(gen, at, {"family", "size", "seed"});
        const std::string family = reader.string(reader.require(gen, at, "family"), at / "family");
        ref.family = parseFamily(family);
        if (!ref.family)
            reader.fail(at / "family", "unknown family \"" + family + "\"");
        ref.size = reader.unsignedInt(reader.require(gen, at, "size"), at / "size");
        if (gen.contains("seed"))
            ref.seed = reader.unsignedInt(gen["seed"], at / "seed");
        ref.name = family + "-" + std::to_string(ref.size);
        return ref;
    }
    ref.instance = detail::instanceFromJson(v, reader, where);
    ref.name = v.contains("name") && v["name"].is_string() ? v["name"].get<std::string>() : "inline";
    return ref;
}

Instance materialize(const InstanceRef& ref, const JsonReader& reader, const Ptr& where)
{
    if (ref.instance)
        return *ref.instance;
    try {
        return generateFamily(*ref.family, ref.size, ref.seed).instance;
    } catch (const std::exception& e) {
        reader.fail(where, e.what());
    }
}

Message readMessage(const json& v, const JsonReader& reader, const Ptr& where)
{
    if (v.is_string())
        return v.get<std::string>();
    reader.expectKeys(v, where, {"text", "hex"});
    if (v.size() != 1)
        reader.fail(where, "expected exactly one of \"text\" or \"hex\"");
    if (v.contains("text"))
        return reader.string(v["text"], where / "text");
    const std::string hex = reader.string(v["hex"], where / "hex");
    if (hex.size() % 2 != 0)
        reader.fail(where / "hex", "odd number of hex digits");
    auto digit = [&](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        if (c >= 'A' && c <= 'F')
            return c - 'A' + 10;
        reader.fail(where / "hex", std::string("not a hex digit: '") + c + "'");
    };
    Message out;
    for (std::size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<char>(digit(hex[i]) * 16 + digit(hex[i + 1])));
    return out;
}

json messageToJson(const Message& m)
{
    for (unsigned char c : m)
        if (c < 0x20 || c > 0x7e)
            return json{{"hex", toHexBytes(m)}};
    return m;
}

IngressCheck readIngress(const json& v, const JsonReader& reader, const Ptr& where)
{
    const std::string name = reader.string(v, where);
    const auto mode = parseIngressCheck(name);
    if (!mode)
        reader.fail(where, "unknown ingress check \"" + name + "\" (edge-consistent or literal)");
    return *mode;
}

std::optional<std::uint64_t> readCaps(const json& doc, const JsonReader& reader, const Ptr& where)
{
    if (!doc.contains("caps"))
        return std::nullopt;
    const Ptr at = where / "caps";
    reader.expectKeys(doc["caps"], at, {"steps"});
    if (!doc["caps"].contains("steps"))
        return std::nullopt;
    const std::uint64_t steps = reader.unsignedInt(doc["caps"]["steps"], at / "steps");
    if (steps == 0)
        reader.fail(at / "steps", "step cap must be positive");
    return steps;
}

SchedulePolicy readPolicy(const json& v, const JsonReader& reader, const Ptr& where)
{
    const std::string name = reader.string(v, where);
    const auto policy = parseSchedulePolicy(name);
    if (!policy)
        reader.fail(where, "unknown schedule policy \"" + name + "\"");
    return *policy;
}

Strategy readStrategy(const json& v, const JsonReader& reader, const Ptr& where)
{
    const std::string name = reader.string(v, where);
    const auto strategy = parseStrategy(name);
    if (!strategy)
        reader.fail(where, "unknown strategy \"" + name + "\"");
    return *strategy;
}

std::string idText(const json& v, const JsonReader& reader, const Ptr& where)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<std::int64_t>());
    reader.fail(where, "node id must be a string or an integer");
}

}  // namespace

Scenario parseScenario(std::string_view text, std::string_view origin, const std::filesystem::path& baseDir)
{
    const JsonReader reader(origin);
    const json doc = reader.parse(text);
    const Ptr root;
    reader.expectKeys(doc, root, {"instance", "message", "fault", "schedule", "caps", "ingress"});

    Scenario sc;
    const InstanceRef ref = readInstanceRef(reader.require(doc, root, "instance"), reader, root / "instance", baseDir);
    sc.instance = materialize(ref, reader, root / "instance");
    sc.message = readMessage(reader.require(doc, root, "message"), reader, root / "message");

    if (doc.contains("fault")) {
        const Ptr at = root / "fault";
        const json& f = doc["fault"];
        reader.expectKeys(f, at, {"node", "strategy", "seed", "budget"});
        FaultSpec fault;
        const std::string id = idText(reader.require(f, at, "node"), reader, at / "node");
        const auto node = sc.instance.graph.findLabel(id);
        if (!node)
            reader.fail(at / "node", "unknown node id \"" + id + "\"");
        if (*node == sc.instance.source || *node == sc.instance.target)
            reader.fail(at / "node", "fault at " + std::string(*node == sc.instance.source ? "s" : "t")
                                         + ": s and t are correct");
        fault.node = *node;
        fault.strategy = readStrategy(reader.require(f, at, "strategy"), reader, at / "strategy");
        if (f.contains("seed"))
            fault.seed = reader.unsignedInt(f["seed"], at / "seed");
        if (f.contains("budget"))
            fault.budget = reader.unsignedInt(f["budget"], at / "budget");
        sc.fault = fault;
    }

    if (doc.contains("schedule")) {
        const Ptr at = root / "schedule";
        const json& s = doc["schedule"];
        reader.expectKeys(s, at, {"policy", "seed"});
        if (s.contains("policy"))
            sc.schedule.policy = readPolicy(s["policy"], reader, at / "policy");
        if (s.contains("seed"))
            sc.schedule.seed = reader.unsignedInt(s["seed"], at / "seed");
    }

    sc.stepCap = readCaps(doc, reader, root);
    if (doc.contains("ingress"))
        sc.ingress = readIngress(doc["ingress"], reader, root / "ingress");
    return sc;
}

Scenario readScenarioFile(const std::filesystem::path& path)
{
    return parseScenario(detail::readFile(path), path.string(), path.parent_path());
}

std::string formatScenario(const Scenario& sc)
{
    const EmbeddedGraph& g = sc.instance.graph;
    json doc = json::object();
    doc["instance"] = detail::instanceToJson(sc.instance);
    doc["message"] = messageToJson(sc.message);
    if (sc.fault) {
        json f = json::object();
        f["node"] = detail::labelToJson(g.label(sc.fault->node));
        f["strategy"] = toString(sc.fault->strategy);
        f["seed"] = sc.fault->seed;
        if (sc.fault->budget)
            f["budget"] = *sc.fault->budget;
        doc["fault"] = std::move(f);
    }
    doc["schedule"] = json{{"policy", toString(sc.schedule.policy)}, {"seed", sc.schedule.seed}};
    if (sc.stepCap)
        doc["caps"] = json{{"steps", *sc.stepCap}};
    doc["ingress"] = toString(sc.ingress);
    return doc.dump();
}

SweepSpec parseSweepSpec(std::string_view text, std::string_view origin, const std::filesystem::path& baseDir)
{
    const JsonReader reader(origin);
    const json doc = reader.parse(text);
    const Ptr root;
    reader.expectKeys(doc, root,
                      {"family", "sizes", "generatorSeed", "instances", "strategies", "seedsPerCell", "schedules",
                       "faults", "message", "budget", "caps", "ingress"});

    SweepSpec spec;
    const bool byFamily = doc.contains("family") || doc.contains("sizes");
    if (byFamily == doc.contains("instances"))
        reader.fail(root, "give either \"family\" with \"sizes\" or \"instances\"");

    if (byFamily) {
        const std::string family = reader.string(reader.require(doc, root, "family"), root / "family");
        const auto fam = parseFamily(family);
        if (!fam)
            reader.fail(root / "family", "unknown family \"" + family + "\"");
        const json& sizes = reader.require(doc, root, "sizes");
        if (!sizes.is_array())
            reader.fail(root / "sizes", "expected an array");
        if (sizes.empty())
            reader.fail(root / "sizes", "sizes list is empty");
        std::uint64_t seed = 1;
        if (doc.contains("generatorSeed"))
            seed = reader.unsignedInt(doc["generatorSeed"], root / "generatorSeed");
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            SweepSpec::Target t;
            t.family = fam;
            t.size = reader.unsignedInt(sizes[i], root / "sizes" / i);
            t.generatorSeed = seed;
            t.name = family + "-" + std::to_string(t.size);
            spec.targets.push_back(std::move(t));
        }
    } else {
        if (doc.contains("generatorSeed"))
            reader.fail(root / "generatorSeed", "only meaningful with \"family\"");
        const json& list = doc["instances"];
        if (!list.is_array())
            reader.fail(root / "instances", "expected an array");
        if (list.empty())
            reader.fail(root / "instances", "instances list is empty");
        for (std::size_t i = 0; i < list.size(); ++i) {
            InstanceRef ref = readInstanceRef(list[i], reader, root / "instances" / i, baseDir);
            SweepSpec::Target t;
            t.name = std::move(ref.name);
            t.instance = std::move(ref.instance);
            t.family = ref.family;
            t.size = ref.size;
            t.generatorSeed = ref.seed;
            spec.targets.push_back(std::move(t));
        }
    }

    if (doc.contains("strategies")) {
        const json& s = doc["strategies"];
        if (s.is_string() && s.get<std::string>() == "all") {
            spec.strategies.push_back(std::nullopt);
            for (const auto& info : strategyCatalog())
                spec.strategies.push_back(info.strategy);
        } else if (s.is_array() && !s.empty()) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i].is_string() && s[i].get<std::string>() == "NONE")
                    spec.strategies.push_back(std::nullopt);
                else
                    spec.strategies.push_back(readStrategy(s[i], reader, root / "strategies" / i));
            }
        } else {
            reader.fail(root / "strategies", "expected \"all\" or a non-empty array of strategy names");
        }
    } else {
        spec.strategies.push_back(std::nullopt);
    }

    if (doc.contains("seedsPerCell")) {
        spec.seedsPerCell = reader.unsignedInt(doc["seedsPerCell"], root / "seedsPerCell");
        if (spec.seedsPerCell == 0)
            reader.fail(root / "seedsPerCell", "must be positive");
    }
    if (doc.contains("schedules")) {
        const json& s = doc["schedules"];
        if (!s.is_array() || s.empty())
            reader.fail(root / "schedules", "expected a non-empty array");
        spec.schedules.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
            spec.schedules.push_back(readPolicy(s[i], reader, root / "schedules" / i));
    }
    if (doc.contains("faults")) {
        const std::string f = reader.string(doc["faults"], root / "faults");
        if (f == "green")
            spec.faults = SweepSpec::Faults::Green;
        else if (f == "all")
            spec.faults = SweepSpec::Faults::All;
        else
            reader.fail(root / "faults", "expected \"green\" or \"all\"");
    }
    if (doc.contains("message"))
        spec.message = readMessage(doc["message"], reader, root / "message");
    if (doc.contains("budget"))
        spec.budget = reader.unsignedInt(doc["budget"], root / "budget");
    spec.stepCap = readCaps(doc, reader, root);
    if (doc.contains("ingress"))
        spec.ingress = readIngress(doc["ingress"], reader, root / "ingress");
    return spec;
}

SweepSpec readSweepSpecFile(const std::filesystem::path& path)
{
    return parseSweepSpec(detail::readFile(path), path.string(), path.parent_path());
}

}  // namespace berger
