#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berger/adversary.hpp"
#include "berger/generators.hpp"
#include "berger/instance_io.hpp"
#include "berger/simulator.hpp"

namespace berger {

const char* toString(IngressCheck mode);
std::optional<IngressCheck> parseIngressCheck(std::string_view name);

// Scenario document:
//
//   {
//     "instance": "graph.json" | {inline instance} | {"generator": {"family": "double-ring", "size": 12, "seed": 1}},
//     "message": "text" | {"text": "..."} | {"hex": "00ff"},
//     "fault": {"node": id, "strategy": "CRASH", "seed": 0, "budget": 48},
//     "schedule": {"policy": "seeded-random", "seed": 0},
//     "caps": {"steps": 100000},
//     "ingress": "edge-consistent" | "literal"
//   }
//
// Only "instance" and "message" are required. Relative instance paths resolve
// against baseDir. Faults at s or t, unknown node ids and unknown keys are
// ParseErrors.
Scenario parseScenario(std::string_view text, std::string_view origin = "<input>",
                       const std::filesystem::path& baseDir = {});
Scenario readScenarioFile(const std::filesystem::path& path);

// Single-line document with the instance inlined; parseScenario reads it back
// to an identical scenario.
std::string formatScenario(const Scenario& sc);

std::string toHexBytes(std::string_view bytes);

struct SweepSpec
{
    struct Target
    {
        std::string name;  // e.g. "double-ring-12" or the file name
        std::optional<Instance> instance;
        // Generated targets are built when the sweep runs, so failures stay per cell.
        std::optional<Family> family;
        std::size_t size = 0;
        std::uint64_t generatorSeed = 1;
    };

    // Fault locations for faulty cells: green nodes or every node but s and t.
    enum class Faults { Green, All };

    std::vector<Target> targets;
    // nullopt stands for the fault-free column.
    std::vector<std::optional<Strategy>> strategies;
    std::size_t seedsPerCell = 1;
    std::vector<SchedulePolicy> schedules{SchedulePolicy::SeededRandom};
    Faults faults = Faults::Green;
    Message message = "sweep";
    std::optional<std::size_t> budget;
    std::optional<std::uint64_t> stepCap;
    IngressCheck ingress = IngressCheck::EdgeConsistent;
};

// Sweep document:
//
//   {
//     "family": "double-ring", "sizes": [8, 16], "generatorSeed": 1,   (or)
//     "instances": ["a.json", {inline instance}, {"generator": {...}}],
//     "strategies": ["NONE", "CRASH", ...] | "all",
//     "seedsPerCell": 50,
//     "schedules": ["seeded-random", "fifo-global", "adversarial-delay"],
//     "faults": "green" | "all",
//     "message": ..., "budget": 48, "caps": {"steps": N}, "ingress": ...
//   }
//
// "NONE" is the fault-free column; "all" is NONE plus the whole catalog.
// Seeds cycle through the listed schedules. An empty sizes or instances list
// is a ParseError.
SweepSpec parseSweepSpec(std::string_view text, std::string_view origin = "<input>",
                         const std::filesystem::path& baseDir = {});
SweepSpec readSweepSpecFile(const std::filesystem::path& path);

}  // namespace berger
