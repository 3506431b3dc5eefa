#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "berger/scenario_io.hpp"
#include "berger/simulator.hpp"

namespace berger::cli {

enum ExitCode : int { kClean = 0, kViolation = 1, kUsage = 2 };

int cmdValidate(const std::filesystem::path& file, std::ostream& out, std::ostream& err);

struct RunOptions
{
    std::optional<std::filesystem::path> trace;
    std::optional<std::filesystem::path> json;
    // Replaces the schedule seed; takes precedence over BERGER_SEED.
    std::optional<std::uint64_t> seed;
};

int cmdRun(const std::filesystem::path& file, const RunOptions& options, std::ostream& out, std::ostream& err);

struct SweepOptions
{
    std::optional<std::filesystem::path> out;
    unsigned jobs = 1;
};

int cmdSweep(const std::filesystem::path& file, const SweepOptions& options, std::ostream& out, std::ostream& err);

int cmdReplay(const std::filesystem::path& file, std::ostream& out, std::ostream& err);

// BERGER_SEED as an unsigned integer; throws std::invalid_argument if it is set
// but malformed.
std::optional<std::uint64_t> seedFromEnvironment();

// Header lines followed by one line per event.
std::string traceDocument(const Scenario& sc, const RunOutcome& outcome);

// Pretty-printed JSON; keys always appear in the same order.
std::string outcomeDocument(const Scenario& sc, const RunOutcome& outcome);

}  // namespace berger::cli
