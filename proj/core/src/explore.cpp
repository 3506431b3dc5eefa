#include "berger/explore.hpp"

#include <limits>
#include <unordered_map>

namespace berger {

namespace {

struct Summary
{
    std::uint64_t orders = 0;
    bool good = true;
};

std::uint64_t saturatingAdd(std::uint64_t a, std::uint64_t b)
{
    return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

class Explorer
{
public:
    Explorer(const Scenario& sc, const ExploreLimits& limits, ExploreResult& result)
        : sc_(sc), limits_(limits), result_(result), cap_(sc.stepCap.value_or(defaultStepCap(sc.instance)))
    {
    }

    Summary visit(const Network& net)
    {
        std::string key = net.stateKey();
        if (const auto it = memo_.find(key); it != memo_.end())
            return it->second;
        if (memo_.size() >= limits_.maxStates) {
            result_.complete = false;
            return {0, true};
        }

        Summary here;
        if (net.quiescent() || net.steps() >= cap_) {
            ++result_.terminalStates;
            here.orders = 1;
            here.good = check(net);
        } else {
            for (std::size_t dart : net.activeLinks()) {
                Network next = net;
                next.deliver(dart);
                const Summary child = visit(next);
                here.orders = saturatingAdd(here.orders, child.orders);
                here.good = here.good && child.good;
            }
        }
        memo_.emplace(std::move(key), here);
        return here;
    }

    std::size_t states() const { return memo_.size(); }

private:
    bool check(const Network& net)
    {
        std::string problem;
        if (!net.quiescent())
            problem = "step cap reached";
        else if (!net.delivered())
            problem = "quiesced without delivering";
        else if (net.delivered()->message != sc_.message)
            problem = "delivered a message other than the source's";
        else if (!net.findings().empty())
            problem = std::string(toString(net.findings().front().kind)) + ": " + net.findings().front().detail;
        if (problem.empty())
            return true;
        if (result_.violations.size() < 8)
            result_.violations.push_back("after " + std::to_string(net.steps()) + " steps: " + problem);
        return false;
    }

    const Scenario& sc_;
    const ExploreLimits& limits_;
    ExploreResult& result_;
    std::uint64_t cap_;
    std::unordered_map<std::string, Summary> memo_;
};

}  // namespace

ExploreResult explore(const Scenario& sc, const ExploreLimits& limits)
{
    Scenario quiet = sc;
    quiet.recordTrace = false;
    Network root(quiet);
    root.start();

    ExploreResult result;
    Explorer explorer(quiet, limits, result);
    const Summary s = explorer.visit(root);
    result.distinctStates = explorer.states();
    result.interleavings = s.orders;
    result.allDelivered = s.good && result.complete;
    return result;
}

}  // namespace berger
