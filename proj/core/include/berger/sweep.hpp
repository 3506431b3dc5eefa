#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berger/scenario_io.hpp"
#include "berger/simulator.hpp"

namespace berger {

struct SweepCell
{
    std::string target;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::optional<Strategy> strategy;  // nullopt: fault-free
    std::string error;                 // unusable instance, cell not run

    std::size_t runs = 0;
    std::size_t deliveries = 0;
    std::array<std::size_t, 5> findings{};  // indexed by FindingKind
    std::uint64_t maxSends = 0;
    double meanSends = 0.0;
    std::uint64_t maxThreadSends = 0;
    // Fault-free cells only: threads per run times E, and how many runs exceeded it.
    std::uint64_t threadBound = 0;
    std::size_t threadBoundExceeded = 0;
    std::vector<std::string> examples;  // first few failing runs

    std::size_t count(FindingKind kind) const { return findings[static_cast<std::size_t>(kind)]; }
    std::size_t violations() const;
};

struct SweepResult
{
    std::vector<SweepCell> cells;
    // Least-squares slope of log(mean sends) against log(N) over fault-free cells.
    std::optional<double> slope;
    std::size_t violations = 0;
    std::size_t threadBoundExceeded = 0;
    std::size_t instanceFailures = 0;

    bool failed() const { return violations > 0 || threadBoundExceeded > 0 || instanceFailures > 0; }
};

// Fits y = a + b x and returns b; nullopt with fewer than two distinct x.
std::optional<double> regressionSlope(const std::vector<std::pair<double, double>>& points);

// Threads one fault-free run may originate times the edge count.
std::uint64_t threadTransmissionBound(const Instance& inst);

// Runs are independent; `jobs` worker threads share them. The result does not
// depend on `jobs`.
SweepResult sweep(const SweepSpec& spec, unsigned jobs = 1);

// Tab-separated table, one row per cell, then "# key value" summary lines.
std::string formatSweepTable(const SweepResult& result);

}  // namespace berger
