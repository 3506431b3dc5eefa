#include "berger/protocol.hpp"

#include <algorithm>

namespace berger {

namespace {

bool contains(const std::vector<Point>& list, const Point& p)
{
    return std::find(list.begin(), list.end(), p) != list.end();
}

std::optional<Point> select(const NodeContext& ctx, const Point& ref, const Packet& pkt, Direction c,
                            const std::optional<Point>& skip)
{
    return nextNode(ctx.neighbors, ctx.self, ref, pkt.source, pkt.target, c, skip);
}

}  // namespace

const char* toString(DropReason reason)
{
    switch (reason) {
    case DropReason::SkipsSender: return "skips-sender";
    case DropReason::CoreAtSource: return "core-at-source";
    case DropReason::Cycle: return "cycle";
    case DropReason::SkipsReceiver: return "skips-receiver";
    case DropReason::ForeignEdge: return "foreign-edge";
    case DropReason::NoCandidate: return "no-candidate";
    }
    return "unknown";
}

std::optional<DropReason> checkIngress(const NodeContext& ctx, const Point& from, const Packet& pkt, IngressCheck mode)
{
    if (pkt.skip && *pkt.skip == from)
        return DropReason::SkipsSender;
    if (ctx.self == pkt.source && pkt.isCore())
        return DropReason::CoreAtSource;
    if (contains(pkt.visited, ctx.self))
        return DropReason::Cycle;
    if (mode == IngressCheck::EdgeConsistent) {
        if (pkt.skip && *pkt.skip == ctx.self)
            return DropReason::SkipsReceiver;
        if (!onThisSide(pkt.source, pkt.target, ctx.self, from))
            return DropReason::ForeignEdge;
    }
    return std::nullopt;
}

bool invalid(const NodeContext& ctx, const Point& from, const Packet& pkt)
{
    return checkIngress(ctx, from, pkt, IngressCheck::Literal).has_value();
}

std::vector<SendAction> sourceInit(const NodeContext& ctx, const Point& target, const Message& message)
{
    const Point& s = ctx.self;
    std::vector<SendAction> out;
    auto hop = [&](Direction c, const std::optional<Point>& skip) {
        const auto to = nextNode(ctx.neighbors, s, target, s, target, c, skip);
        if (!to)
            throw ModelViolation("instance violates model: source has no admissible neighbor");
        return *to;
    };

    for (Direction c : {Direction::R, Direction::L})
        out.push_back({Packet{message, s, target, c, std::nullopt, {}}, hop(c, std::nullopt)});
    for (Direction c : {Direction::R, Direction::L}) {
        const Point k = hop(c, std::nullopt);
        out.push_back({Packet{message, s, target, c, k, {s}}, hop(c, k)});
    }
    return out;
}

ReceiveResult onReceive(const NodeContext& ctx, const Point& from, Packet pkt, IngressCheck mode)
{
    ReceiveResult result;
    if (auto reason = checkIngress(ctx, from, pkt, mode)) {
        result.dropped = reason;
        return result;
    }
    const bool core = pkt.isCore();
    if (core)
        pkt.visited.push_back(from);

    const auto forward = select(ctx, from, pkt, pkt.direction, pkt.skip);
    if (!forward) {
        result.dropped = DropReason::NoCandidate;
        return result;
    }

    std::optional<SendAction> thread;
    if (core) {
        // The next green node, unless the core has already been there.
        const auto nextGreen = select(ctx, from, pkt, pkt.direction, std::nullopt);
        if (nextGreen && !contains(pkt.visited, *nextGreen)) {
            const auto to = select(ctx, from, pkt, pkt.direction, nextGreen);
            if (to)
                thread = SendAction{Packet{pkt.message, pkt.source, pkt.target, pkt.direction, nextGreen, {ctx.self}},
                                    *to};
            else
                result.threadSuppressed = true;
        }
    }

    result.sends.push_back({std::move(pkt), *forward});
    if (thread)
        result.sends.push_back(std::move(*thread));
    return result;
}

ExpectedNeighbors expectedNeighbors(const NodeContext& target, const Point& source)
{
    ExpectedNeighbors e;
    const Point& t = target.self;
    e.coreR = nextNode(target.neighbors, t, source, source, t, Direction::L, std::nullopt);
    e.coreL = nextNode(target.neighbors, t, source, source, t, Direction::R, std::nullopt);
    if (e.coreR)
        e.threadR = nextNode(target.neighbors, t, source, source, t, Direction::L, e.coreR);
    if (e.coreL)
        e.threadL = nextNode(target.neighbors, t, source, source, t, Direction::R, e.coreL);
    return e;
}

TargetState::Outcome TargetState::receive(const NodeContext& ctx, const Point& from, Packet pkt, IngressCheck mode)
{
    Outcome out;
    if (auto reason = checkIngress(ctx, from, pkt, mode)) {
        out.dropped = reason;
        return out;
    }
    if (pkt.isCore())
        pkt.visited.push_back(from);

    const ExpectedNeighbors expected = expectedNeighbors(ctx, pkt.source);
    const Direction c = pkt.direction;
    const auto& coreFrom = c == Direction::R ? expected.coreR : expected.coreL;
    const auto& threadFrom = c == Direction::R ? expected.threadR : expected.threadL;

    if (pkt.isCore() && coreFrom && from == *coreFrom) {
        out.recorded = true;
        records_.insert({pkt.message, pkt.source, c, std::nullopt, pkt.visited});
    } else if (!pkt.isCore() && ((coreFrom && from == *coreFrom) || (threadFrom && from == *threadFrom))) {
        out.recorded = true;
        records_.insert({pkt.message, pkt.source, c, pkt.skip, {}});
    }

    const bool satisfied = matchingCores(pkt.message, pkt.source) || matchingBraid(pkt.message, pkt.source);
    if (!satisfied)
        return out;

    const auto latched = delivered_.find(pkt.source);
    if (latched == delivered_.end()) {
        delivered_.emplace(pkt.source, pkt.message);
        out.delivered = pkt.message;
    } else if (latched->second != pkt.message && conflictsReported_.emplace(pkt.source, pkt.message).second) {
        out.conflicting.push_back(pkt.message);
    }
    return out;
}

std::optional<Message> TargetState::delivered(const Point& source) const
{
    const auto it = delivered_.find(source);
    if (it == delivered_.end())
        return std::nullopt;
    return it->second;
}

bool TargetState::matchingCores(const Message& m, const Point& source) const
{
    std::vector<const TargetRecord*> left;
    std::vector<const TargetRecord*> right;
    for (const TargetRecord& r : records_) {
        if (r.skip || r.message != m || r.source != source)
            continue;
        (r.direction == Direction::L ? left : right).push_back(&r);
    }
    for (const TargetRecord* l : left) {
        for (const TargetRecord* r : right) {
            // The intersection of the two visited lists must be exactly {s}.
            bool onlySource = contains(l->visited, source) && contains(r->visited, source);
            for (const Point& p : l->visited)
                if (p != source && contains(r->visited, p))
                    onlySource = false;
            if (onlySource)
                return true;
        }
    }
    return false;
}

bool TargetState::matchingBraid(const Message& m, const Point& source) const
{
    for (const TargetRecord& core : records_) {
        if (core.skip || core.message != m || core.source != source)
            continue;
        bool braid = true;
        for (const Point& i : core.visited) {
            if (i == source)
                continue;
            if (!records_.contains(TargetRecord{m, source, core.direction, i, {}})) {
                braid = false;
                break;
            }
        }
        if (braid)
            return true;
    }
    return false;
}

}  // namespace berger
