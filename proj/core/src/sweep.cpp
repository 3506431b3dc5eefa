#include "berger/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <thread>

#include "berger/topology.hpp"

namespace berger {

std::size_t SweepCell::violations() const
{
    std::size_t n = 0;
    for (std::size_t c : findings)
        n += c;
    return n;
}

std::optional<double> regressionSlope(const std::vector<std::pair<double, double>>& points)
{
    std::set<double> xs;
    double mx = 0.0;
    double my = 0.0;
    for (const auto& [x, y] : points) {
        xs.insert(x);
        mx += x;
        my += y;
    }
    if (xs.size() < 2)
        return std::nullopt;
    mx /= static_cast<double>(points.size());
    my /= static_cast<double>(points.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto& [x, y] : points) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    return sxy / sxx;
}

std::uint64_t threadTransmissionBound(const Instance& inst)
{
    const std::size_t right = corePathOracle(inst, Direction::R).size();
    const std::size_t left = corePathOracle(inst, Direction::L).size();
    return static_cast<std::uint64_t>(right - 1 + left - 1) * inst.graph.edgeCount();
}

namespace {

struct Job
{
    std::size_t cell;
    Scenario scenario;
    std::string label;
};

struct RunSummary
{
    bool delivered = false;
    std::vector<Finding> findings;
    Metrics metrics;
};

}  // namespace

SweepResult sweep(const SweepSpec& spec, unsigned jobs)
{
    SweepResult result;
    std::vector<Job> work;

    for (const SweepSpec::Target& target : spec.targets) {
        std::optional<Instance> inst = target.instance;
        std::string error;
        if (!inst) {
            try {
                inst = generateFamily(*target.family, target.size, target.generatorSeed).instance;
            } catch (const std::exception& e) {
                error = e.what();
            }
        }
        if (inst && error.empty() && !validateInstance(*inst).admissible())
            error = "instance is not admissible";

        std::vector<NodeId> faultNodes;
        if (error.empty()) {
            if (spec.faults == SweepSpec::Faults::Green) {
                faultNodes = greenFace(*inst).nodes;
            } else {
                for (NodeId n = 0; n < inst->graph.nodeCount(); ++n)
                    faultNodes.push_back(n);
            }
            std::erase_if(faultNodes, [&](NodeId n) { return n == inst->source || n == inst->target; });
        }

        for (const auto& strategy : spec.strategies) {
            SweepCell cell;
            cell.target = target.name;
            cell.strategy = strategy;
            cell.error = error;
            if (!error.empty()) {
                ++result.instanceFailures;
                result.cells.push_back(std::move(cell));
                continue;
            }
            cell.nodes = inst->graph.nodeCount();
            cell.edges = inst->graph.edgeCount();
            if (!strategy)
                cell.threadBound = threadTransmissionBound(*inst);
            const std::size_t index = result.cells.size();
            result.cells.push_back(std::move(cell));

            Scenario base;
            base.instance = *inst;
            base.message = spec.message;
            base.stepCap = spec.stepCap;
            base.ingress = spec.ingress;
            base.recordTrace = false;

            const std::vector<std::optional<NodeId>> locations = [&] {
                std::vector<std::optional<NodeId>> out;
                if (!strategy)
                    out.push_back(std::nullopt);
                else
                    out.assign(faultNodes.begin(), faultNodes.end());
                return out;
            }();
            for (const auto& node : locations)
                for (std::size_t seed = 0; seed < spec.seedsPerCell; ++seed) {
                    Job job{index, base, {}};
                    job.scenario.schedule = {spec.schedules[seed % spec.schedules.size()], seed};
                    if (node)
                        job.scenario.fault = FaultSpec{*node, *strategy, seed, spec.budget};
                    job.label = std::string(node ? "fault=" + inst->graph.label(*node) + " " : "") + "seed="
                                + std::to_string(seed) + " " + toString(job.scenario.schedule.policy);
                    work.push_back(std::move(job));
                }
        }
    }

    std::vector<RunSummary> runs(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            const RunOutcome out = run(work[i].scenario);
            runs[i] = {out.delivered.has_value(), out.findings, out.metrics};
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::max(1u, jobs); ++j)
        pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool)
        t.join();

    std::vector<double> sendTotals(result.cells.size(), 0.0);
    for (std::size_t i = 0; i < work.size(); ++i) {
        SweepCell& cell = result.cells[work[i].cell];
        const RunSummary& r = runs[i];
        ++cell.runs;
        cell.deliveries += r.delivered ? 1 : 0;
        for (const Finding& f : r.findings)
            ++cell.findings[static_cast<std::size_t>(f.kind)];
        cell.maxSends = std::max(cell.maxSends, r.metrics.totalSends());
        cell.maxThreadSends = std::max(cell.maxThreadSends, r.metrics.threadSends);
        sendTotals[work[i].cell] += static_cast<double>(r.metrics.totalSends());
        const bool overBound = !cell.strategy && r.metrics.threadSends > cell.threadBound;
        cell.threadBoundExceeded += overBound ? 1 : 0;
        if ((!r.findings.empty() || overBound) && cell.examples.size() < 3) {
            std::string ex = work[i].label + ":";
            for (const Finding& f : r.findings)
                ex += std::string(" ") + toString(f.kind) + " (" + f.detail + ")";
            if (overBound)
                ex += " thread sends " + std::to_string(r.metrics.threadSends) + " over bound";
            cell.examples.push_back(std::move(ex));
        }
    }

    std::vector<std::pair<double, double>> points;
    for (std::size_t c = 0; c < result.cells.size(); ++c) {
        SweepCell& cell = result.cells[c];
        if (cell.runs > 0)
            cell.meanSends = sendTotals[c] / static_cast<double>(cell.runs);
        result.violations += cell.violations();
        result.threadBoundExceeded += cell.threadBoundExceeded;
        if (!cell.strategy && cell.runs > 0 && cell.meanSends > 0)
            points.emplace_back(std::log(static_cast<double>(cell.nodes)), std::log(cell.meanSends));
    }
    result.slope = regressionSlope(points);
    return result;
}

std::string formatSweepTable(const SweepResult& result)
{
    std::ostringstream out;
    out << "target\tnodes\tedges\tstrategy\truns\tdelivered\tVALIDITY\tLIVENESS\tTERMINATION\tAUTHENTICITY\t"
           "SECOND-MATCH\tmax_sends\tmean_sends\tmax_thread_sends\tthread_bound\tnote\n";
    for (const SweepCell& c : result.cells) {
        char mean[32];
        std::snprintf(mean, sizeof mean, "%.2f", c.meanSends);
        out << c.target << '\t' << c.nodes << '\t' << c.edges << '\t' << (c.strategy ? toString(*c.strategy) : "NONE")
            << '\t' << c.runs << '\t' << c.deliveries;
        for (std::size_t n : c.findings)
            out << '\t' << n;
        out << '\t' << c.maxSends << '\t' << mean << '\t' << c.maxThreadSends << '\t';
        if (c.strategy)
            out << '-';
        else
            out << c.threadBound;
        out << '\t';
        if (!c.error.empty())
            out << "skipped: " << c.error;
        else if (!c.examples.empty())
            out << c.examples.front();
        out << '\n';
    }
    char slope[32] = "n/a";
    if (result.slope)
        std::snprintf(slope, sizeof slope, "%.4f", *result.slope);
    out << "# slope " << slope << '\n';
    out << "# violations " << result.violations << '\n';
    out << "# thread_bound_exceeded " << result.threadBoundExceeded << '\n';
    out << "# instance_failures " << result.instanceFailures << '\n';
    out << "# status " << (result.failed() ? "FAIL" : "PASS") << '\n';
    return out.str();
}

}  // namespace berger
