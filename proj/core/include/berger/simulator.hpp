#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "berger/adversary.hpp"
#include "berger/graph.hpp"
#include "berger/protocol.hpp"
#include "berger/trace.hpp"

namespace berger {

enum class SchedulePolicy { SeededRandom, FifoGlobal, AdversarialDelay };

const char* toString(SchedulePolicy policy);
std::optional<SchedulePolicy> parseSchedulePolicy(std::string_view name);

struct Schedule
{
    SchedulePolicy policy = SchedulePolicy::SeededRandom;
    std::uint64_t seed = 0;
};

struct FaultSpec
{
    NodeId node = 0;
    Strategy strategy = Strategy::Crash;
    std::uint64_t seed = 0;
    std::optional<std::size_t> budget;  // default 4 |V|
};

struct Scenario
{
    Instance instance;
    Message message;
    std::optional<FaultSpec> fault;
    Schedule schedule;
    std::optional<std::uint64_t> stepCap;  // default 64 |V| |E|
    IngressCheck ingress = IngressCheck::EdgeConsistent;
    bool recordTrace = true;
};

std::size_t defaultBudget(const Instance& inst);
std::uint64_t defaultStepCap(const Instance& inst);

// Throws std::invalid_argument when the fault sits on s or t or outside the graph.
void checkScenario(const Scenario& sc);

enum class FindingKind { Validity, Liveness, Termination, Authenticity, SecondMatch };

const char* toString(FindingKind kind);

struct Finding
{
    FindingKind kind;
    std::uint64_t step = 0;
    std::string detail;
};

struct Metrics
{
    std::uint64_t steps = 0;           // packet receptions
    std::uint64_t coreSends = 0;       // by correct nodes, the source included
    std::uint64_t threadSends = 0;
    std::uint64_t adversarySends = 0;
    std::uint64_t drops = 0;           // refused by a correct node's checks
    std::uint64_t noCandidateDrops = 0;
    std::uint64_t suppressedThreads = 0;
    std::uint64_t foreignDeliveries = 0;  // at other targets or for other claimed sources
    std::size_t maxVisited = 0;

    std::uint64_t totalSends() const { return coreSends + threadSends + adversarySends; }
};

struct Delivery
{
    Message message;
    std::uint64_t step = 0;
};

struct RunOutcome
{
    std::optional<Delivery> delivered;
    bool quiesced = false;
    std::vector<Finding> findings;
    Metrics metrics;
    std::vector<std::string> trace;
    std::uint64_t traceHash = 0;
    // Records kept by the genuine target.
    TargetState target;

    bool clean() const { return findings.empty(); }
    bool has(FindingKind kind) const;
};

/// Network state: per-link FIFO queues, the target states of correct nodes,
/// the faulty node and the monitors. A scheduler repeatedly picks a non-empty
/// link and calls deliver(); copies are independent, which is what the
/// exhaustive explorer relies on.
class Network
{
public:
    explicit Network(const Scenario& sc);

    // Source's initial sends and the faulty node's activation.
    void start();

    // Links (dart ids of the graph) with a packet in flight, in no particular
    // order.
    const std::vector<std::size_t>& activeLinks() const { return active_; }
    bool quiescent() const { return active_.empty(); }

    // Deliver the head packet of link `dart`; returns the step number used.
    std::uint64_t deliver(std::size_t dart);

    const Packet& head(std::size_t dart) const { return queues_[dart].front(); }
    std::uint64_t headSequence(std::size_t dart) const { return sequence_[dart].front(); }

    std::uint64_t steps() const { return metrics_.steps; }
    const Metrics& metrics() const { return metrics_; }
    const std::vector<Finding>& findings() const { return findings_; }
    const std::optional<Delivery>& delivered() const { return delivered_; }
    const std::vector<std::string>& trace() const { return trace_; }
    // FNV-1a over the trace lines, each followed by a newline.
    std::uint64_t traceHash() const { return traceHash_; }
    const EmbeddedGraph& graph() const { return sc_->instance.graph; }
    const Scenario& scenario() const { return *sc_; }
    const TargetState& genuineTarget() const;

    void addFinding(FindingKind kind, std::string detail);

    // Sends `action` as node `from` without consulting its automaton, the way
    // a faulty node would; a non-neighbor destination is an AUTHENTICITY
    // finding. Lets tests stage behavior outside the single-fault model.
    void inject(NodeId from, const SendAction& action);

    // Canonical encoding of everything that influences future behavior.
    std::string stateKey() const;

private:
    void send(NodeId from, const SendAction& action, bool byAdversary);
    void enqueue(std::size_t dart, Packet pkt);
    void event(EventKind kind, const std::string& from, const std::string& to, const Packet& pkt);
    std::string name(const Point& p) const;
    std::optional<NodeId> lookup(const Point& p) const;

    const Scenario* sc_;
    std::unordered_map<Point, NodeId, PointHash> index_;
    std::vector<NodeContext> contexts_;
    std::vector<std::deque<Packet>> queues_;
    std::vector<std::deque<std::uint64_t>> sequence_;
    std::vector<std::size_t> active_;
    std::vector<std::size_t> activePos_;
    std::map<NodeId, TargetState> targets_;
    std::optional<Adversary> adversary_;
    std::optional<Delivery> delivered_;
    std::vector<Finding> findings_;
    Metrics metrics_;
    std::vector<std::string> trace_;
    std::uint64_t traceHash_;
    std::uint64_t nextSequence_ = 0;
    bool secondMatchReported_ = false;
};

RunOutcome run(const Scenario& sc);

}  // namespace berger
