// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "berger/adversary.hpp"
#include "berger/explore.hpp"
#include "berger/generators.hpp"
#include "berger/simulator.hpp"
#include "berger/sweep.hpp"
#include "berger/topology.hpp"
#include "commands.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace berger;
using namespace berger::testing;
namespace fs = std::filesystem;

namespace {

constexpr SchedulePolicy kPolicies[] = {SchedulePolicy::SeededRandom, SchedulePolicy::FifoGlobal,
                                        SchedulePolicy::AdversarialDelay};
constexpr int kSeeds = 50;
const Message kMessage = "acceptance";

struct Verdict
{
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

int failures = 0;

void report(int number, const char* name, const Verdict& v)
{
    std::printf("criterion %d %-22s %s%s%s\n", number, name, v.pass ? "PASS" : "FAIL", v.detail.empty() ? "" : ": ",
                v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass)
        ++failures;
}

void parallelFor(std::size_t n, const std::function<void(std::size_t)>& body)
{
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
                body(i);
        });
}

// Criteria 1-3 share one run matrix.
struct MatrixTally
{
    std::mutex mutex;
    std::size_t runs = 0;
    Verdict validity, liveness, termination;
};

void runMatrix(MatrixTally& tally)
{
    struct Job
    {
        const Instance* inst;
        std::string name;
        Strategy strategy;
        NodeId fault;
    };
    std::vector<Instance> instances;
    std::vector<std::string> names{"octahedron.json", "double-ring-12.json", "gabriel-unit-disk-40.json"};
    for (const auto& n : names)
        instances.push_back(loadFixture(n));
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < instances.size(); ++i)
        for (const auto& info : strategyCatalog())
            for (NodeId f : greenFace(instances[i]).nodes)
                if (f != instances[i].source && f != instances[i].target)
                    jobs.push_back({&instances[i], names[i], info.strategy, f});

    parallelFor(jobs.size(), [&](std::size_t j) {
        const Job& job = jobs[j];
        for (int seed = 0; seed < kSeeds; ++seed) {
            Scenario sc;
            sc.instance = *job.inst;
            sc.message = kMessage;
            sc.fault = FaultSpec{job.fault, job.strategy, static_cast<std::uint64_t>(seed),
                                 defaultBudget(*job.inst)};
            sc.schedule = {kPolicies[seed % 3], static_cast<std::uint64_t>(seed)};
            sc.stepCap = defaultStepCap(*job.inst);
            sc.recordTrace = false;
            const RunOutcome out = run(sc);

            const std::string where = job.name + " " + toString(job.strategy) + " at "
                                      + job.inst->graph.label(job.fault) + " seed " + std::to_string(seed);
            std::lock_guard lock(tally.mutex);
            ++tally.runs;
            if (out.has(FindingKind::Validity) || out.has(FindingKind::SecondMatch) ||
                (out.delivered && out.delivered->message != kMessage))
                tally.validity.fail(where);
            if (out.has(FindingKind::Liveness) || (out.quiesced && !out.delivered))
                tally.liveness.fail(where);
            if (out.has(FindingKind::Termination) || !out.quiesced)
                tally.termination.fail(where);
        }
    });
}

Verdict geometricOracles()
{
    Verdict v;
    std::size_t threads = 0;
    for (const auto& file : admissibleFixtureFiles()) {
        const Instance inst = loadFixture(file);
        if (!oracle::coresDisjoint(inst))
            v.fail(file + ": core paths share an internal node");
        for (Direction c : {Direction::L, Direction::R}) {
            const auto check = oracle::threadsAvoidOppositeCore(inst, c);
            threads += check.threads;
            if (!check.failures.empty())
                v.fail(file + ": " + check.failures.front());
        }
        const EmbeddedGraph reduced = reducedGraph(inst);
        if (!oracle::eulerHolds(inst.graph, enumerateFaces(inst.graph)) ||
            !oracle::eulerHolds(reduced, enumerateFaces(reduced)))
            v.fail(file + ": V - E + F != 2");
    }
    if (v.pass)
        v.detail = std::to_string(admissibleFixtureFiles().size()) + " fixtures, " + std::to_string(threads)
                   + " thread paths";
    return v;
}

Verdict faultFreeEquivalence()
{
    Verdict v;
    std::size_t runs = 0;
    for (const auto& file : admissibleFixtureFiles()) {
        const Instance inst = loadFixture(file);
        std::set<TargetRecord> expected;
        for (Direction c : {Direction::L, Direction::R}) {
            auto path = corePathOracle(inst, c);
            path.pop_back();
            TargetRecord r{kMessage, inst.s(), c, std::nullopt, {}};
            for (NodeId n : path)
                r.visited.push_back(inst.graph.point(n));
            expected.insert(r);
        }
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Scenario sc;
            sc.instance = inst;
            sc.message = kMessage;
            sc.schedule = {kPolicies[seed % 3], seed};
            sc.recordTrace = false;
            const RunOutcome out = run(sc);
            ++runs;
            std::set<TargetRecord> cores;
            for (const TargetRecord& r : out.target.records())
                if (!r.skip)
                    cores.insert(r);
            if (cores != expected)
                v.fail(file + " seed " + std::to_string(seed));
        }
    }
    if (v.pass)
        v.detail = std::to_string(runs) + " runs";
    return v;
}

Verdict complexity()
{
    Verdict v;
    std::vector<std::pair<double, double>> points;
    for (std::size_t n : {8u, 16u, 32u, 64u, 128u}) {
        const Instance inst = generateFamily(Family::DoubleRing, n, 1).instance;
        // One thread per core node other than t, each crossing at most E edges.
        const std::size_t threads =
            corePathOracle(inst, Direction::L).size() + corePathOracle(inst, Direction::R).size() - 2;
        const std::uint64_t bound = threads * inst.graph.edgeCount();
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Scenario sc;
            sc.instance = inst;
            sc.message = kMessage;
            sc.schedule = {kPolicies[seed % 2], seed};
            sc.recordTrace = false;
            const RunOutcome out = run(sc);
            if (!out.delivered || !out.clean())
                v.fail("double-ring-" + std::to_string(n) + " did not deliver cleanly");
            if (out.metrics.threadSends > bound)
                v.fail("double-ring-" + std::to_string(n) + ": " + std::to_string(out.metrics.threadSends)
                       + " thread sends > " + std::to_string(bound));
            points.emplace_back(std::log(static_cast<double>(n)),
                                std::log(static_cast<double>(out.metrics.totalSends())));
        }
    }
    const auto slope = regressionSlope(points);
    if (!slope || *slope > 2.3)
        v.fail("slope " + (slope ? std::to_string(*slope) : std::string("undefined")));
    else if (v.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "slope %.4f <= 2.3", *slope);
        v.detail = buf;
    }
    return v;
}

Verdict rejection()
{
    Verdict v;
    std::ostringstream out, err;
    if (cli::cmdValidate(fixturePath("stranded-node.json"), out, err) != cli::kViolation)
        v.fail("stranded-node accepted");
    else if (out.str().find("[witness: x]") == std::string::npos)
        v.fail("no named witness");
    std::ostringstream out2, err2;
    if (cli::cmdValidate(fixturePath("octahedron.json"), out2, err2) != cli::kClean)
        v.fail("octahedron rejected");
    return v;
}

Verdict exhaustive()
{
    Verdict v;
    const Instance inst = loadFixture("octahedron.json");
    std::uint64_t orders = 0;
    for (NodeId f = 0; f < inst.graph.nodeCount(); ++f) {
        if (f == inst.source || f == inst.target)
            continue;
        Scenario sc;
        sc.instance = inst;
        sc.message = kMessage;
        sc.fault = FaultSpec{f, Strategy::Crash, 0, {}};
        const ExploreResult r = explore(sc);
        orders += r.interleavings;
        if (!r.complete)
            v.fail("search incomplete with the fault at " + inst.graph.label(f));
        else if (!r.allDelivered)
            v.fail("fault at " + inst.graph.label(f) + ": "
                   + (r.violations.empty() ? std::string("undelivered order") : r.violations.front()));
    }
    if (v.pass)
        v.detail = std::to_string(orders) + " delivery orders";
    return v;
}

Verdict replay()
{
    Verdict v;
    const fs::path dir = fs::temp_directory_path() / "berger-acceptance";
    fs::create_directories(dir);
    const std::vector<std::string> scenarios{"octahedron-fault-free.json", "octahedron-crash.json",
                                             "double-ring-forge.json", "gabriel-random.json",
                                             "generated-ladder.json"};
    int count = 0;
    for (const auto& file : scenarios)
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            cli::RunOptions opts;
            opts.seed = seed;
            opts.trace = dir / (file + "." + std::to_string(seed) + ".trace");
            std::ostringstream out, err;
            if (cli::cmdRun(fixturePath("scenarios/" + file), opts, out, err) != cli::kClean) {
                v.fail(file + ": run failed: " + err.str());
                continue;
            }
            std::ostringstream rout, rerr;
            if (cli::cmdReplay(*opts.trace, rout, rerr) != cli::kClean)
                v.fail(file + ": " + rerr.str());
            ++count;
        }
    fs::remove_all(dir);
    if (count < 10)
        v.fail("only " + std::to_string(count) + " scenarios");
    else if (v.pass)
        v.detail = std::to_string(count) + " traces replayed";
    return v;
}

}  // namespace

int main()
{
    MatrixTally tally;
    runMatrix(tally);
    for (Verdict* v : {&tally.validity, &tally.liveness, &tally.termination})
        if (v->pass)
            v->detail = std::to_string(tally.runs) + " runs";
    report(1, "validity", tally.validity);
    report(2, "liveness", tally.liveness);
    report(3, "termination", tally.termination);
    report(4, "geometric-oracles", geometricOracles());
    report(5, "fault-free-cores", faultFreeEquivalence());
    report(6, "complexity", complexity());
    report(7, "rejection", rejection());
    report(8, "exhaustive-octahedron", exhaustive());
    report(9, "replay", replay());
    return failures == 0 ? 0 : 1;
}
