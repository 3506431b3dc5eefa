#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "berger/sweep.hpp"
#include "berger/topology.hpp"

namespace berger::cli {

namespace {

std::string witnessNames(const Instance& inst, const std::vector<NodeId>& witness)
{
    std::string out;
    for (NodeId n : witness)
        out += (out.empty() ? "" : ", ") + inst.graph.label(n);
    return out;
}

void printReport(const Instance& inst, const ValidationReport& report, std::ostream& out)
{
    if (report.admissible()) {
        out << "admissible: " << inst.graph.nodeCount() << " nodes, " << inst.graph.edgeCount() << " edges, s="
            << inst.graph.label(inst.source) << " t=" << inst.graph.label(inst.target) << '\n';
        return;
    }
    out << "not admissible: " << report.violations.size() << " violation(s)\n";
    for (const Violation& v : report.violations) {
        out << "  " << toString(v.kind) << ": " << v.message;
        if (!v.witness.empty())
            out << " [witness: " << witnessNames(inst, v.witness) << ']';
        out << '\n';
    }
}

bool writeFile(const std::filesystem::path& path, const std::string& text, std::ostream& err)
{
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) {
        err << path.string() << ": cannot write\n";
        return false;
    }
    return true;
}

std::vector<std::string> splitLines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace

std::optional<std::uint64_t> seedFromEnvironment()
{
    const char* value = std::getenv("BERGER_SEED");
    if (value == nullptr || *value == '\0')
        return std::nullopt;
    const std::string_view text(value);
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("BERGER_SEED is not an unsigned integer: \"" + std::string(text) + "\"");
    return seed;
}

int cmdValidate(const std::filesystem::path& file, std::ostream& out, std::ostream& err)
{
    Instance inst;
    try {
        inst = readInstanceFile(file);
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }
    const ValidationReport report = validateInstance(inst);
    printReport(inst, report, out);
    return report.admissible() ? kClean : kViolation;
}

std::string traceDocument(const Scenario& sc, const RunOutcome& outcome)
{
    std::string doc;
    doc += kTraceMagic;
    doc += '\n';
    doc += kTraceScenarioPrefix;
    doc += formatScenario(sc);
    doc += '\n';
    for (const std::string& line : outcome.trace) {
        doc += line;
        doc += '\n';
    }
    return doc;
}

std::string outcomeDocument(const Scenario& sc, const RunOutcome& outcome)
{
    using nlohmann::ordered_json;
    const Metrics& m = outcome.metrics;
    ordered_json doc;
    doc["format"] = "berger-outcome 1";
    doc["nodes"] = sc.instance.graph.nodeCount();
    doc["edges"] = sc.instance.graph.edgeCount();
    doc["fault"] = sc.fault ? ordered_json{{"node", sc.instance.graph.label(sc.fault->node)},
                                           {"strategy", toString(sc.fault->strategy)},
                                           {"seed", sc.fault->seed},
                                           {"budget", sc.fault->budget.value_or(defaultBudget(sc.instance))}}
                            : ordered_json(nullptr);
    doc["schedule"] = {{"policy", toString(sc.schedule.policy)}, {"seed", sc.schedule.seed}};
    doc["delivered"] = outcome.delivered.has_value();
    doc["message_hash"] = outcome.delivered ? ordered_json(toHex(fnv1a64(outcome.delivered->message)))
                                            : ordered_json(nullptr);
    doc["expected_hash"] = toHex(fnv1a64(sc.message));
    doc["delivery_step"] = outcome.delivered ? ordered_json(outcome.delivered->step) : ordered_json(nullptr);
    doc["quiesced"] = outcome.quiesced;
    doc["counters"] = {
        {"steps", m.steps},
        {"core_sends", m.coreSends},
        {"thread_sends", m.threadSends},
        {"adversary_sends", m.adversarySends},
        {"total_sends", m.totalSends()},
        {"drops", m.drops},
        {"no_candidate_drops", m.noCandidateDrops},
        {"suppressed_threads", m.suppressedThreads},
        {"foreign_deliveries", m.foreignDeliveries},
        {"max_visited", m.maxVisited},
    };
    ordered_json findings = ordered_json::array();
    for (const Finding& f : outcome.findings)
        findings.push_back({{"kind", toString(f.kind)}, {"step", f.step}, {"detail", f.detail}});
    doc["violations"] = std::move(findings);
    doc["trace_hash"] = toHex(outcome.traceHash);
    return doc.dump(2) + "\n";
}

int cmdRun(const std::filesystem::path& file, const RunOptions& options, std::ostream& out, std::ostream& err)
{
    Scenario sc;
    try {
        sc = readScenarioFile(file);
        if (options.seed)
            sc.schedule.seed = *options.seed;
        else if (const auto env = seedFromEnvironment())
            sc.schedule.seed = *env;
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    const ValidationReport report = validateInstance(sc.instance);
    if (!report.admissible()) {
        printReport(sc.instance, report, err);
        return kViolation;
    }

    const RunOutcome outcome = run(sc);
    if (options.trace && !writeFile(*options.trace, traceDocument(sc, outcome), err))
        return kUsage;
    if (options.json && !writeFile(*options.json, outcomeDocument(sc, outcome), err))
        return kUsage;

    if (outcome.delivered)
        out << "delivered " << toHex(fnv1a64(outcome.delivered->message)) << " at step " << outcome.delivered->step
            << (outcome.delivered->message == sc.message ? " (source message)" : " (NOT the source message)") << '\n';
    else
        out << "no delivery\n";
    out << "steps " << outcome.metrics.steps << ", sends " << outcome.metrics.totalSends() << " (core "
        << outcome.metrics.coreSends << ", thread " << outcome.metrics.threadSends << ", adversary "
        << outcome.metrics.adversarySends << ")\n";
    for (const Finding& f : outcome.findings)
        out << toString(f.kind) << " at step " << f.step << ": " << f.detail << '\n';
    return outcome.clean() ? kClean : kViolation;
}

int cmdSweep(const std::filesystem::path& file, const SweepOptions& options, std::ostream& out, std::ostream& err)
{
    SweepSpec spec;
    try {
        spec = readSweepSpecFile(file);
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }
    const SweepResult result = sweep(spec, options.jobs);
    const std::string table = formatSweepTable(result);
    if (options.out) {
        if (!writeFile(*options.out, table, err))
            return kUsage;
        for (const std::string& line : splitLines(table))
            if (line.starts_with("# "))
                out << line << '\n';
    } else {
        out << table;
    }
    for (const SweepCell& c : result.cells)
        for (const std::string& ex : c.examples)
            err << c.target << ' ' << (c.strategy ? toString(*c.strategy) : "NONE") << ": " << ex << '\n';
    return result.failed() ? kViolation : kClean;
}

int cmdReplay(const std::filesystem::path& file, std::ostream& out, std::ostream& err)
{
    std::string text;
    {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            err << file.string() << ": cannot open file\n";
            return kUsage;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    const std::vector<std::string> lines = splitLines(text);
    if (lines.size() < 2 || lines[0] != kTraceMagic || !lines[1].starts_with(kTraceScenarioPrefix)) {
        err << file.string() << ": not a trace file (missing \"" << kTraceMagic << "\" header)\n";
        return kUsage;
    }

    Scenario sc;
    try {
        sc = parseScenario(std::string_view(lines[1]).substr(kTraceScenarioPrefix.size()), file.string() + ":2");
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }
    const RunOutcome outcome = run(sc);

    const std::size_t recorded = lines.size() - 2;
    for (std::size_t i = 0; i < std::max(recorded, outcome.trace.size()); ++i) {
        const std::size_t lineNo = i + 3;
        if (i >= recorded) {
            err << file.string() << ":" << lineNo << ": trace ends early; replay continues with\n  " << outcome.trace[i]
                << '\n';
            return kViolation;
        }
        if (i >= outcome.trace.size()) {
            err << file.string() << ":" << lineNo << ": replay ended; trace continues with\n  " << lines[i + 2] << '\n';
            return kViolation;
        }
        if (lines[i + 2] != outcome.trace[i]) {
            err << file.string() << ":" << lineNo << ": divergence\n  trace:  " << lines[i + 2] << "\n  replay: "
                << outcome.trace[i] << '\n';
            return kViolation;
        }
    }
    out << "replay matches: " << outcome.trace.size() << " events, trace hash " << toHex(outcome.traceHash) << '\n';
    return kClean;
}

}  // namespace berger::cli
