#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "berger/geometry.hpp"

namespace berger {

// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t basis);

// 16 lowercase hex digits.
std::string toHex(std::uint64_t value);

enum class EventKind { Send, Recv, Drop, Deliver };

const char* toString(EventKind kind);

// step | kind | from | to | CORE/THREAD | L/R | k | |l| | msgHash
struct TraceEvent
{
    std::uint64_t step = 0;
    EventKind kind = EventKind::Send;
    std::string from;
    std::string to;
    bool core = true;
    Direction direction = Direction::R;
    std::string skip;  // "-" for cores
    std::size_t visited = 0;
    std::uint64_t messageHash = 0;
};

std::string formatEvent(const TraceEvent& event);

inline constexpr std::string_view kTraceMagic = "# berger-trace 1";
inline constexpr std::string_view kTraceScenarioPrefix = "# scenario ";

}  // namespace berger
