#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berger/geometry.hpp"
#include "berger/protocol.hpp"
#include "berger/random.hpp"

namespace berger {

enum class Strategy {
    Crash,           // drops everything, sends nothing
    ForgeMessage,    // relays like a correct node, but with an altered message
    DropCore,        // drops cores, relays threads like a correct node
    SpuriousCore,    // injects cores whose visited list is made up, never listing itself
    TamperVisited,   // relays cores with spurious entries in the visited list
    SkipSelfThread,  // injects threads that skip the faulty node itself
    Random,          // arbitrary packets to random neighbors
};

const char* toString(Strategy strategy);
std::optional<Strategy> parseStrategy(std::string_view name);

struct StrategyInfo
{
    Strategy strategy;
    const char* name;
    const char* summary;
};

const std::vector<StrategyInfo>& strategyCatalog();

// What the faulty node knows when it starts: its own neighborhood, every node
// position, and the source-target pair of the run.
struct AdversaryKnowledge
{
    NodeContext self;
    Point source;
    Point target;
    std::vector<Point> nodes;
};

/// The single Byzantine node.
///
/// Every packet it emits counts against the origination budget; once spent,
/// it goes silent. Output depends only on (strategy, seed, knowledge, the
/// sequence of events), so a run is reproducible from its seeds.
class Adversary
{
public:
    Adversary(Strategy strategy, std::uint64_t seed, std::size_t budget, AdversaryKnowledge knowledge);

    // Called once, before any packet is delivered.
    std::vector<SendAction> activate();
    std::vector<SendAction> receive(const Point& from, const Packet& pkt);

    Strategy strategy() const { return strategy_; }
    std::size_t budget() const { return budget_; }
    std::size_t originated() const { return originated_; }
    const Point& self() const { return knowledge_.self.self; }

    // Compact encoding of the mutable state, for state-space exploration.
    std::string stateKey() const;

private:
    std::vector<SendAction> spend(std::vector<SendAction> sends);
    std::vector<SendAction> relay(const Point& from, Packet pkt);
    Message forge(const Message& m);
    Packet randomPacket();
    Point randomNode();
    Point fabricatedPoint();

    Strategy strategy_;
    std::size_t budget_;
    std::size_t originated_ = 0;
    AdversaryKnowledge knowledge_;
    Rng rng_;
    std::vector<Message> seen_;
};

}  // namespace berger
