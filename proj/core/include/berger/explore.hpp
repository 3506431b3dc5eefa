#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "berger/simulator.hpp"

namespace berger {

struct ExploreLimits
{
    std::size_t maxStates = 1'000'000;
};

struct ExploreResult
{
    std::size_t distinctStates = 0;
    std::size_t terminalStates = 0;
    // Distinct delivery orders from the initial state, saturating at UINT64_MAX.
    std::uint64_t interleavings = 0;
    // Every order quiesced with the source's message delivered and no finding.
    bool allDelivered = true;
    // False when maxStates stopped the search early.
    bool complete = true;
    std::vector<std::string> violations;  // at most a few, for diagnostics
};

/// Exhaustive search over all delivery orders of the scenario. The schedule
/// in the scenario is ignored; the step cap still bounds each order.
ExploreResult explore(const Scenario& sc, const ExploreLimits& limits = {});

}  // namespace berger
