#include "berger/trace.hpp"

#include <cstdio>

namespace berger {

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t basis)
{
    std::uint64_t h = basis;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv1a64(std::string_view bytes) { return fnv1a64(bytes, 0xcbf29ce484222325ULL); }

std::string toHex(std::uint64_t value)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

const char* toString(EventKind kind)
{
    switch (kind) {
    case EventKind::Send: return "SEND";
    case EventKind::Recv: return "RECV";
    case EventKind::Drop: return "DROP";
    case EventKind::Deliver: return "DELIVER";
    }
    return "?";
}

std::string formatEvent(const TraceEvent& e)
{
    std::string line = std::to_string(e.step);
    line += " | ";
    line += toString(e.kind);
    line += " | " + e.from + " | " + e.to + " | ";
    line += e.core ? "CORE" : "THREAD";
    line += " | ";
    line += toChar(e.direction);
    line += " | " + e.skip + " | " + std::to_string(e.visited) + " | " + toHex(e.messageHash);
    return line;
}

}  // namespace berger
