#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "berger/geometry.hpp"

namespace berger {

// Opaque payload, compared bytewise.
using Message = std::string;

/// Routing packet. A core has no skipped node and accumulates the nodes that
/// forwarded it; a thread skips one node and carries only its originator.
struct Packet
{
    Message message;
    Point source;
    Point target;
    Direction direction = Direction::R;
    std::optional<Point> skip;
    std::vector<Point> visited;

    bool isCore() const { return !skip.has_value(); }

    friend bool operator==(const Packet&, const Packet&) = default;
};

struct NodeContext
{
    Point self;
    std::vector<Point> neighbors;
};

struct SendAction
{
    Packet packet;
    Point to;

    friend bool operator==(const SendAction&, const SendAction&) = default;
};

// How strictly a correct node screens arriving packets.
//
// Literal applies exactly the three drop rules (sender skipping itself, core
// back at its source, visited-list cycle). EdgeConsistent also drops packets
// that no correct neighbor could have sent: ones that skip the receiver, or
// that arrive over an edge crossing the packet's source-target segment.
// Without those two rules an injected thread can circle a face that neither
// contains its injector nor any node of its visited list, forever.
enum class IngressCheck { Literal, EdgeConsistent };

enum class DropReason {
    SkipsSender,
    CoreAtSource,
    Cycle,
    SkipsReceiver,
    ForeignEdge,
    NoCandidate,
};

const char* toString(DropReason reason);

std::optional<DropReason> checkIngress(const NodeContext& ctx, const Point& from, const Packet& pkt,
                                       IngressCheck mode = IngressCheck::EdgeConsistent);

// The three literal drop rules.
bool invalid(const NodeContext& ctx, const Point& from, const Packet& pkt);

class ModelViolation : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Two cores and two threads, one of each per direction. Throws ModelViolation
// if the neighborhood offers no admissible first hop.
std::vector<SendAction> sourceInit(const NodeContext& ctx, const Point& target, const Message& message);

struct ReceiveResult
{
    std::vector<SendAction> sends;
    std::optional<DropReason> dropped;
    // Core forwarded but the split thread had nowhere to go.
    bool threadSuppressed = false;

    friend bool operator==(const ReceiveResult&, const ReceiveResult&) = default;
};

// Action of a correct node that is not the packet's target. Stateless.
ReceiveResult onReceive(const NodeContext& ctx, const Point& from, Packet pkt,
                        IngressCheck mode = IngressCheck::EdgeConsistent);

struct TargetRecord
{
    Message message;
    Point source;
    Direction direction = Direction::R;
    std::optional<Point> skip;
    std::vector<Point> visited;

    friend auto operator<=>(const TargetRecord&, const TargetRecord&) = default;
};

struct ExpectedNeighbors
{
    std::optional<Point> coreR;
    std::optional<Point> coreL;
    std::optional<Point> threadR;
    std::optional<Point> threadL;
};

// Neighbors of the target from which it accepts cores and threads of source s.
ExpectedNeighbors expectedNeighbors(const NodeContext& target, const Point& source);

/// Recording and delivery logic of a node acting as a packet's target.
///
/// Deliveries are latched per claimed source. The braid rule asks for a
/// thread skipping every visited node except the source itself.
class TargetState
{
public:
    struct Outcome
    {
        bool recorded = false;
        std::optional<DropReason> dropped;
        std::optional<Message> delivered;
        // Messages other than the latched one that now satisfy a delivery rule.
        std::vector<Message> conflicting;
    };

    Outcome receive(const NodeContext& ctx, const Point& from, Packet pkt,
                    IngressCheck mode = IngressCheck::EdgeConsistent);

    const std::set<TargetRecord>& records() const { return records_; }
    std::optional<Message> delivered(const Point& source) const;
    const std::map<Point, Message>& deliveries() const { return delivered_; }

    bool matchingCores(const Message& m, const Point& source) const;
    bool matchingBraid(const Message& m, const Point& source) const;

    friend bool operator==(const TargetState&, const TargetState&) = default;

private:
    std::set<TargetRecord> records_;
    std::map<Point, Message> delivered_;
    std::set<std::pair<Point, Message>> conflictsReported_;
};

}  // namespace berger
