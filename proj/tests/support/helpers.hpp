#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "berger/graph.hpp"
#include "berger/instance_io.hpp"
#include "berger/protocol.hpp"

namespace berger::testing {

inline std::filesystem::path fixturePath(const std::string& name) { return std::filesystem::path(BERGER_FIXTURE_DIR) / name; }

inline Instance loadFixture(const std::string& name) { return readInstanceFile(fixturePath(name)); }

inline NodeId id(const Instance& inst, const std::string& label) { return *inst.graph.findLabel(label); }

inline Point at(const Instance& inst, const std::string& label) { return inst.graph.point(id(inst, label)); }

inline NodeContext context(const Instance& inst, NodeId n)
{
    const auto nb = inst.graph.neighborPoints(n);
    return {inst.graph.point(n), {nb.begin(), nb.end()}};
}

inline NodeContext context(const Instance& inst, const std::string& label) { return context(inst, id(inst, label)); }

// Fixture files of admissible instances.
inline std::vector<std::string> admissibleFixtureFiles()
{
    return {"octahedron.json", "notched-wheel.json", "double-ring-12.json", "gabriel-unit-disk-40.json",
            "triangulated-ladder-16.json", "greedy-trap.json"};
}

}  // namespace berger::testing
