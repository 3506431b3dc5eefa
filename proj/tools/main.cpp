#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv)
{
    using namespace berger::cli;

    CLI::App app{"BeRGeR simulator: validate instances, run scenarios, sweep and replay"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "berger 0.1.0");

    std::string file;
    RunOptions runOpts;
    SweepOptions sweepOpts;
    std::string tracePath;
    std::string jsonPath;
    std::string outPath;

    auto* validate = app.add_subcommand("validate", "check an instance file; exit 0 iff admissible");
    validate->add_option("file", file, "instance JSON")->required();

    auto* runCmd = app.add_subcommand("run", "execute a scenario; exit 0 iff no monitor fired");
    runCmd->add_option("file", file, "scenario JSON")->required();
    runCmd->add_option("--trace", tracePath, "write the event trace here");
    runCmd->add_option("--json", jsonPath, "write the outcome document here");
    runCmd->add_option("--seed", runOpts.seed, "schedule seed (overrides BERGER_SEED)");

    auto* sweepCmd = app.add_subcommand("sweep", "run a sweep spec; exit 0 iff zero violations");
    sweepCmd->add_option("file", file, "sweep spec JSON")->required();
    sweepCmd->add_option("--out", outPath, "write the table here instead of stdout");
    sweepCmd->add_option("--jobs", sweepOpts.jobs, "worker threads")->check(CLI::Range(1u, 1024u));

    auto* replay = app.add_subcommand("replay", "re-execute a trace and compare event by event");
    replay->add_option("file", file, "trace file written by run --trace")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    if (!tracePath.empty())
        runOpts.trace = tracePath;
    if (!jsonPath.empty())
        runOpts.json = jsonPath;
    if (!outPath.empty())
        sweepOpts.out = outPath;

    if (validate->parsed())
        return cmdValidate(file, std::cout, std::cerr);
    if (runCmd->parsed())
        return cmdRun(file, runOpts, std::cout, std::cerr);
    if (sweepCmd->parsed())
        return cmdSweep(file, sweepOpts, std::cout, std::cerr);
    return cmdReplay(file, std::cout, std::cerr);
}
