#include "berger/adversary.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace berger {

namespace {

const std::vector<StrategyInfo> kCatalog{
    {Strategy::Crash, "CRASH", "drop every packet, send nothing"},
    {Strategy::ForgeMessage, "FORGE-MESSAGE", "relay each packet once with an altered message"},
    {Strategy::DropCore, "DROP-CORE", "drop cores, relay threads unchanged"},
    {Strategy::SpuriousCore, "SPURIOUS-CORE", "inject cores with made-up visited lists that omit the faulty node"},
    {Strategy::TamperVisited, "TAMPER-VISITED", "relay cores and threads with spurious visited-list entries"},
    {Strategy::SkipSelfThread, "SKIP-SELF-THREAD", "inject threads skipping the faulty node itself"},
    {Strategy::Random, "RANDOM", "seeded arbitrary packets to random neighbors"},
};

}  // namespace

const char* toString(Strategy strategy)
{
    for (const auto& info : kCatalog)
        if (info.strategy == strategy)
            return info.name;
    return "UNKNOWN";
}

std::optional<Strategy> parseStrategy(std::string_view name)
{
    for (const auto& info : kCatalog)
        if (name == info.name)
            return info.strategy;
    return std::nullopt;
}

const std::vector<StrategyInfo>& strategyCatalog() { return kCatalog; }

Adversary::Adversary(Strategy strategy, std::uint64_t seed, std::size_t budget, AdversaryKnowledge knowledge)
    : strategy_(strategy), budget_(budget), knowledge_(std::move(knowledge)), rng_(seed)
{
}

std::vector<SendAction> Adversary::spend(std::vector<SendAction> sends)
{
    const std::size_t left = budget_ - originated_;
    if (sends.size() > left)
        sends.resize(left);
    originated_ += sends.size();
    return sends;
}

// What a correct node would send, had it received pkt from `from`.
std::vector<SendAction> Adversary::relay(const Point& from, Packet pkt)
{
    if (pkt.target == self())
        return {};
    return onReceive(knowledge_.self, from, std::move(pkt), IngressCheck::Literal).sends;
}

Message Adversary::forge(const Message& m)
{
    Message out = m;
    out += "~forged";
    return out;
}

Point Adversary::randomNode() { return knowledge_.nodes[uniformIndex(rng_, knowledge_.nodes.size())]; }

Point Adversary::fabricatedPoint()
{
    const auto [xmin, xmax] = std::minmax_element(knowledge_.nodes.begin(), knowledge_.nodes.end(),
                                                  [](const Point& a, const Point& b) { return a.x < b.x; });
    const auto [ymin, ymax] = std::minmax_element(knowledge_.nodes.begin(), knowledge_.nodes.end(),
                                                  [](const Point& a, const Point& b) { return a.y < b.y; });
    return {uniformReal(rng_, xmin->x, xmax->x), uniformReal(rng_, ymin->y, ymax->y)};
}

Packet Adversary::randomPacket()
{
    Packet p;
    if (!seen_.empty() && uniformIndex(rng_, 2) == 0) {
        p.message = seen_[uniformIndex(rng_, seen_.size())];
        if (uniformIndex(rng_, 2) == 0)
            p.message = forge(p.message);
    } else {
        const std::size_t len = 1 + uniformIndex(rng_, 8);
        for (std::size_t i = 0; i < len; ++i)
            p.message.push_back(static_cast<char>('a' + uniformIndex(rng_, 26)));
    }

    const auto pick = uniformIndex(rng_, 4);
    p.source = pick < 2 ? knowledge_.source : pick == 2 ? randomNode() : self();
    p.target = uniformIndex(rng_, 5) < 3 ? knowledge_.target : randomNode();
    p.direction = uniformIndex(rng_, 2) == 0 ? Direction::L : Direction::R;

    const auto kind = uniformIndex(rng_, 20);
    const auto& nbrs = knowledge_.self.neighbors;
    if (kind < 8)
        p.skip = std::nullopt;
    else if (kind < 14)
        p.skip = randomNode();
    else if (kind < 17)
        p.skip = self();
    else
        p.skip = nbrs[uniformIndex(rng_, nbrs.size())];

    const std::size_t len = uniformIndex(rng_, 5);
    for (std::size_t i = 0; i < len; ++i)
        p.visited.push_back(uniformIndex(rng_, 4) == 0 ? fabricatedPoint() : randomNode());
    return p;
}

std::vector<SendAction> Adversary::activate()
{
    const auto& nbrs = knowledge_.self.neighbors;
    const Point& s = knowledge_.source;
    const Point& t = knowledge_.target;
    std::vector<SendAction> out;
    switch (strategy_) {
    case Strategy::SpuriousCore:
        for (Direction c : {Direction::L, Direction::R})
            for (const Point& n : nbrs)
                out.push_back({Packet{"spurious", s, t, c, std::nullopt, {s}}, n});
        break;
    case Strategy::SkipSelfThread:
        for (Direction c : {Direction::L, Direction::R})
            for (const Point& n : nbrs)
                out.push_back({Packet{"spurious", s, t, c, self(), {self()}}, n});
        break;
    case Strategy::Random:
        for (std::size_t i = 1 + uniformIndex(rng_, 3); i > 0; --i)
            out.push_back({randomPacket(), nbrs[uniformIndex(rng_, nbrs.size())]});
        break;
    default: break;
    }
    return spend(std::move(out));
}

std::vector<SendAction> Adversary::receive(const Point& from, const Packet& pkt)
{
    if (originated_ >= budget_)
        return {};
    if (std::find(seen_.begin(), seen_.end(), pkt.message) == seen_.end())
        seen_.push_back(pkt.message);

    std::vector<SendAction> out;
    switch (strategy_) {
    case Strategy::Crash: break;

    case Strategy::ForgeMessage: {
        Packet forged = pkt;
        forged.message = forge(pkt.message);
        auto sends = relay(from, std::move(forged));
        // Only the relayed packet itself, no thread split.
        if (!sends.empty())
            out.push_back(std::move(sends.front()));
        break;
    }

    case Strategy::DropCore:
        if (!pkt.isCore())
            out = relay(from, pkt);
        break;

    case Strategy::SpuriousCore:
        if (pkt.isCore()) {
            // Forward the genuine core without listing ourselves, plus a fake
            // that claims to come straight from the source.
            Packet genuine = pkt;
            genuine.visited.push_back(from);
            Packet fake{forge(pkt.message), pkt.source, pkt.target, pkt.direction, std::nullopt, {pkt.source}};
            for (auto& send : relay(from, pkt))
                if (send.packet.isCore()) {
                    out.push_back({genuine, send.to});
                    out.push_back({fake, send.to});
                }
        }
        break;

    case Strategy::TamperVisited:
        for (auto& send : relay(from, pkt)) {
            Packet p = std::move(send.packet);
            if (p.isCore()) {
                p.visited.insert(p.visited.begin() + static_cast<std::ptrdiff_t>(uniformIndex(rng_, p.visited.size() + 1)),
                                 uniformIndex(rng_, 3) == 0 ? fabricatedPoint() : randomNode());
                if (p.visited.size() > 1 && uniformIndex(rng_, 2) == 0)
                    p.visited.erase(p.visited.begin() + static_cast<std::ptrdiff_t>(uniformIndex(rng_, p.visited.size())));
            } else {
                p.visited = {randomNode()};
            }
            out.push_back({std::move(p), send.to});
        }
        break;

    case Strategy::SkipSelfThread:
        for (Direction c : {Direction::L, Direction::R})
            for (const Point& n : knowledge_.self.neighbors)
                out.push_back({Packet{pkt.message, pkt.source, pkt.target, c, self(), {self()}}, n});
        break;

    case Strategy::Random: {
        const auto& nbrs = knowledge_.self.neighbors;
        for (std::size_t i = uniformIndex(rng_, 3); i > 0; --i)
            out.push_back({randomPacket(), nbrs[uniformIndex(rng_, nbrs.size())]});
        break;
    }
    }
    return spend(std::move(out));
}

std::string Adversary::stateKey() const
{
    std::ostringstream key;
    key << originated_ << '|' << seen_.size() << '|';
    if (strategy_ == Strategy::Random || strategy_ == Strategy::TamperVisited) {
        for (const Message& m : seen_)
            key << m.size() << ':' << m;
        key << rng_;
    }
    return key.str();
}

}  // namespace berger
