#include "berger/simulator.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "berger/random.hpp"

namespace berger {

const char* toString(SchedulePolicy policy)
{
    switch (policy) {
    case SchedulePolicy::SeededRandom: return "seeded-random";
    case SchedulePolicy::FifoGlobal: return "fifo-global";
    case SchedulePolicy::AdversarialDelay: return "adversarial-delay";
    }
    return "?";
}

std::optional<SchedulePolicy> parseSchedulePolicy(std::string_view name)
{
    for (SchedulePolicy p : {SchedulePolicy::SeededRandom, SchedulePolicy::FifoGlobal, SchedulePolicy::AdversarialDelay})
        if (name == toString(p))
            return p;
    return std::nullopt;
}

const char* toString(FindingKind kind)
{
    switch (kind) {
    case FindingKind::Validity: return "VALIDITY";
    case FindingKind::Liveness: return "LIVENESS";
    case FindingKind::Termination: return "TERMINATION";
    case FindingKind::Authenticity: return "AUTHENTICITY";
    case FindingKind::SecondMatch: return "SECOND-MATCH";
    }
    return "?";
}

std::size_t defaultBudget(const Instance& inst) { return 4 * inst.graph.nodeCount(); }

std::uint64_t defaultStepCap(const Instance& inst)
{
    return 64ULL * inst.graph.nodeCount() * std::max<std::size_t>(1, inst.graph.edgeCount());
}

void checkScenario(const Scenario& sc)
{
    const Instance& inst = sc.instance;
    if (inst.source >= inst.graph.nodeCount() || inst.target >= inst.graph.nodeCount())
        throw std::invalid_argument("source or target is not a node");
    if (!sc.fault)
        return;
    if (sc.fault->node >= inst.graph.nodeCount())
        throw std::invalid_argument("faulty node is not a node of the instance");
    if (sc.fault->node == inst.source || sc.fault->node == inst.target)
        throw std::invalid_argument("the faulty node must not be s or t: s and t are correct");
}

bool RunOutcome::has(FindingKind kind) const
{
    for (const Finding& f : findings)
        if (f.kind == kind)
            return true;
    return false;
}

Network::Network(const Scenario& sc)
    : sc_(&sc), traceHash_(fnv1a64(""))
{
    checkScenario(sc);
    const EmbeddedGraph& g = sc.instance.graph;
    for (NodeId n = 0; n < g.nodeCount(); ++n) {
        index_.emplace(g.point(n), n);
        const auto nb = g.neighborPoints(n);
        contexts_.push_back({g.point(n), {nb.begin(), nb.end()}});
    }
    queues_.resize(g.dartCount());
    sequence_.resize(g.dartCount());
    activePos_.assign(g.dartCount(), SIZE_MAX);

    if (sc.fault) {
        AdversaryKnowledge knowledge{contexts_[sc.fault->node], sc.instance.s(), sc.instance.t(), g.points()};
        adversary_.emplace(sc.fault->strategy, sc.fault->seed, sc.fault->budget.value_or(defaultBudget(sc.instance)),
                           std::move(knowledge));
    }
}

const TargetState& Network::genuineTarget() const
{
    static const TargetState empty;
    const auto it = targets_.find(sc_->instance.target);
    return it == targets_.end() ? empty : it->second;
}

std::optional<NodeId> Network::lookup(const Point& p) const
{
    const auto it = index_.find(p);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::string Network::name(const Point& p) const
{
    if (const auto id = lookup(p))
        return sc_->instance.graph.label(*id);
    return "(" + toString(p) + ")";
}

void Network::event(EventKind kind, const std::string& from, const std::string& to, const Packet& pkt)
{
    if (!sc_->recordTrace)
        return;
    TraceEvent e;
    e.step = metrics_.steps;
    e.kind = kind;
    e.from = from;
    e.to = to;
    e.core = pkt.isCore();
    e.direction = pkt.direction;
    e.skip = pkt.skip ? name(*pkt.skip) : "-";
    e.visited = pkt.visited.size();
    e.messageHash = fnv1a64(pkt.message);
    std::string line = formatEvent(e);
    traceHash_ = fnv1a64(line, traceHash_);
    traceHash_ = fnv1a64("\n", traceHash_);
    trace_.push_back(std::move(line));
}

void Network::addFinding(FindingKind kind, std::string detail)
{
    findings_.push_back({kind, metrics_.steps, std::move(detail)});
}

void Network::enqueue(std::size_t dart, Packet pkt)
{
    if (queues_[dart].empty()) {
        activePos_[dart] = active_.size();
        active_.push_back(dart);
    }
    queues_[dart].push_back(std::move(pkt));
    sequence_[dart].push_back(nextSequence_++);
}

void Network::send(NodeId from, const SendAction& action, bool byAdversary)
{
    const EmbeddedGraph& g = sc_->instance.graph;
    const auto to = lookup(action.to);
    if (!to || !g.adjacent(from, *to)) {
        if (!byAdversary)
            throw std::logic_error("correct node " + g.label(from) + " sent to a non-neighbor");
        addFinding(FindingKind::Authenticity, "faulty node addressed non-neighbor " + name(action.to));
        return;
    }
    if (byAdversary)
        ++metrics_.adversarySends;
    else if (action.packet.isCore())
        ++metrics_.coreSends;
    else
        ++metrics_.threadSends;
    event(EventKind::Send, g.label(from), g.label(*to), action.packet);
    enqueue(g.dart(from, *to), action.packet);
}

void Network::inject(NodeId from, const SendAction& action)
{
    send(from, action, true);
}

void Network::start()
{
    const Instance& inst = sc_->instance;
    for (const SendAction& a : sourceInit(contexts_[inst.source], inst.t(), sc_->message))
        send(inst.source, a, false);
    if (adversary_)
        for (const SendAction& a : adversary_->activate())
            send(sc_->fault->node, a, true);
}

std::uint64_t Network::deliver(std::size_t dart)
{
    const EmbeddedGraph& g = sc_->instance.graph;
    const Instance& inst = sc_->instance;

    Packet pkt = std::move(queues_[dart].front());
    queues_[dart].pop_front();
    sequence_[dart].pop_front();
    if (queues_[dart].empty()) {
        const std::size_t pos = activePos_[dart];
        active_[pos] = active_.back();
        activePos_[active_[pos]] = pos;
        active_.pop_back();
        activePos_[dart] = SIZE_MAX;
    }

    const std::uint64_t step = ++metrics_.steps;
    const NodeId from = g.dartTail(dart);
    const NodeId to = g.dartHead(dart);
    metrics_.maxVisited = std::max(metrics_.maxVisited, pkt.visited.size());
    event(EventKind::Recv, g.label(from), g.label(to), pkt);

    if (adversary_ && to == sc_->fault->node) {
        for (const SendAction& a : adversary_->receive(g.point(from), pkt))
            send(to, a, true);
        return step;
    }

    if (pkt.target == g.point(to)) {
        const auto out = targets_[to].receive(contexts_[to], g.point(from), pkt, sc_->ingress);
        if (out.dropped) {
            ++metrics_.drops;
            event(EventKind::Drop, g.label(from), g.label(to), pkt);
        }
        const bool genuine = to == inst.target && pkt.source == inst.s();
        if (out.delivered) {
            event(EventKind::Deliver, name(pkt.source), g.label(to), pkt);
            if (genuine) {
                delivered_ = Delivery{*out.delivered, step};
                if (*out.delivered != sc_->message)
                    addFinding(FindingKind::Validity,
                               "target delivered message " + toHex(fnv1a64(*out.delivered)) + " instead of "
                                   + toHex(fnv1a64(sc_->message)));
            } else {
                ++metrics_.foreignDeliveries;
            }
        }
        if (genuine && !out.conflicting.empty() && !secondMatchReported_) {
            secondMatchReported_ = true;
            addFinding(FindingKind::SecondMatch,
                       "message " + toHex(fnv1a64(out.conflicting.front())) + " also satisfies a delivery rule");
        }
        return step;
    }

    // Keep the packet for the DROP line only when tracing.
    const ReceiveResult r = sc_->recordTrace ? onReceive(contexts_[to], g.point(from), pkt, sc_->ingress)
                                             : onReceive(contexts_[to], g.point(from), std::move(pkt), sc_->ingress);
    if (r.dropped) {
        if (*r.dropped == DropReason::NoCandidate)
            ++metrics_.noCandidateDrops;
        else
            ++metrics_.drops;
        event(EventKind::Drop, g.label(from), g.label(to), pkt);
    }
    if (r.threadSuppressed)
        ++metrics_.suppressedThreads;
    for (const SendAction& a : r.sends)
        send(to, a, false);
    return step;
}

std::string Network::stateKey() const
{
    std::ostringstream key;
    auto point = [&](const Point& p) {
        if (const auto id = lookup(p))
            key << '#' << *id;
        else
            key << '(' << std::bit_cast<std::uint64_t>(p.x) << ',' << std::bit_cast<std::uint64_t>(p.y) << ')';
    };
    auto packet = [&](const Message& m, const Point& s, const Point& t, Direction c, const std::optional<Point>& k,
                      const std::vector<Point>& l) {
        key << m.size() << ':' << m;
        point(s);
        point(t);
        key << toChar(c);
        if (k)
            point(*k);
        else
            key << '-';
        key << '[';
        for (const Point& p : l)
            point(p);
        key << ']';
    };

    for (std::size_t d = 0; d < queues_.size(); ++d) {
        if (queues_[d].empty())
            continue;
        key << 'q' << d << '{';
        for (const Packet& p : queues_[d])
            packet(p.message, p.source, p.target, p.direction, p.skip, p.visited);
        key << '}';
    }
    for (const auto& [node, ts] : targets_) {
        key << 'T' << node << '{';
        for (const TargetRecord& r : ts.records())
            packet(r.message, r.source, Point{}, r.direction, r.skip, r.visited);
        key << '|';
        for (const auto& [src, m] : ts.deliveries()) {
            point(src);
            key << m.size() << ':' << m;
        }
        key << '}';
    }
    if (adversary_)
        key << 'A' << adversary_->stateKey();
    key << 'F';
    for (const Finding& f : findings_)
        key << static_cast<int>(f.kind);
    return key.str();
}

RunOutcome run(const Scenario& sc)
{
    Network net(sc);
    net.start();

    const Instance& inst = sc.instance;
    const std::uint64_t cap = sc.stepCap.value_or(defaultStepCap(inst));
    Rng rng(sc.schedule.seed);

    // adversarial-delay: links leaving nodes on the far side of line st from
    // the fault wait until nothing else can move.
    std::vector<bool> starved(inst.graph.dartCount(), false);
    if (sc.schedule.policy == SchedulePolicy::AdversarialDelay && sc.fault) {
        const Orientation faultSide = orientation(inst.s(), inst.t(), inst.graph.point(sc.fault->node));
        for (std::size_t d = 0; d < starved.size(); ++d) {
            const Orientation side = orientation(inst.s(), inst.t(), inst.graph.point(inst.graph.dartTail(d)));
            starved[d] = side != Orientation::Collinear && faultSide != Orientation::Collinear && side != faultSide;
        }
    }

    std::vector<std::size_t> preferred;
    while (!net.quiescent() && net.steps() < cap) {
        const auto& active = net.activeLinks();
        std::size_t dart = active.front();
        switch (sc.schedule.policy) {
        case SchedulePolicy::SeededRandom: dart = active[uniformIndex(rng, active.size())]; break;
        case SchedulePolicy::FifoGlobal:
            for (std::size_t d : active)
                if (net.headSequence(d) < net.headSequence(dart))
                    dart = d;
            break;
        case SchedulePolicy::AdversarialDelay:
            preferred.clear();
            for (std::size_t d : active)
                if (!starved[d])
                    preferred.push_back(d);
            dart = preferred.empty() ? active[uniformIndex(rng, active.size())]
                                     : preferred[uniformIndex(rng, preferred.size())];
            break;
        }
        net.deliver(dart);
    }

    RunOutcome out;
    out.quiesced = net.quiescent();
    if (!out.quiesced)
        net.addFinding(FindingKind::Termination,
                       "step cap " + std::to_string(cap) + " reached with " + std::to_string(net.activeLinks().size())
                           + " links still busy");
    else if (!net.delivered())
        net.addFinding(FindingKind::Liveness, "quiesced without delivering");
    out.delivered = net.delivered();
    out.findings = net.findings();
    out.metrics = net.metrics();
    out.trace = net.trace();
    out.target = net.genuineTarget();
    out.traceHash = net.traceHash();
    return out;
}

}  // namespace berger
