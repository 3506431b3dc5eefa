#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "helpers.hpp"

using namespace berger;
using namespace berger::cli;
using namespace berger::testing;
namespace fs = std::filesystem;

namespace {

struct Captured
{
    int code;
    std::string out;
    std::string err;
};

Captured validate(const std::string& file)
{
    std::ostringstream out, err;
    const int code = cmdValidate(fixturePath(file), out, err);
    return {code, out.str(), err.str()};
}

Captured run(const fs::path& file, const RunOptions& options = {})
{
    std::ostringstream out, err;
    const int code = cmdRun(file, options, out, err);
    return {code, out.str(), err.str()};
}

Captured replay(const fs::path& file)
{
    std::ostringstream out, err;
    const int code = cmdReplay(file, out, err);
    return {code, out.str(), err.str()};
}

class TempDir
{
public:
    TempDir()
    {
        path_ = fs::temp_directory_path() / ("berger-cli-" + std::to_string(std::random_device{}()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

std::vector<std::string> lines(const fs::path& file)
{
    std::ifstream in(file);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

void writeLines(const fs::path& file, const std::vector<std::string>& content)
{
    std::ofstream out(file);
    for (const auto& line : content)
        out << line << '\n';
}

class SeedEnv
{
public:
    explicit SeedEnv(const char* value) { ::setenv("BERGER_SEED", value, 1); }
    ~SeedEnv() { ::unsetenv("BERGER_SEED"); }
};

}  // namespace

TEST_CASE("validate: admissible and rejected instances")
{
    const Captured ok = validate("octahedron.json");
    CHECK(ok.code == kClean);
    CHECK(ok.out == "admissible: 6 nodes, 12 edges, s=s t=t\n");

    const Captured stranded = validate("stranded-node.json");
    CHECK(stranded.code == kViolation);
    CHECK(stranded.out.find("reduced-disconnected") != std::string::npos);
    CHECK(stranded.out.find("[witness: x]") != std::string::npos);

    const Captured pair = validate("separating-pair.json");
    CHECK(pair.code == kViolation);
    CHECK(pair.out.find("C") != std::string::npos);

    const Captured dup = validate("duplicate-coordinates.json");
    CHECK(dup.code == kViolation);
    CHECK(dup.out.find("witness: c, d") != std::string::npos);

    const Captured missing = validate("no-such-file.json");
    CHECK(missing.code == kUsage);
    CHECK_FALSE(missing.err.empty());
}

TEST_CASE("run: exit codes")
{
    CHECK(run(fixturePath("scenarios/octahedron-crash.json")).code == kClean);
    const Captured bad = run(fixturePath("scenarios/fault-at-target.json"));
    CHECK(bad.code == kUsage);
    CHECK(bad.err.find("s and t are correct") != std::string::npos);
}

TEST_CASE("run: inadmissible instance exits with a violation")
{
    TempDir dir;
    std::ofstream(dir / "sc.json") << R"({"instance": ")" << fixturePath("stranded-node.json").string()
                                   << R"(", "message": "m"})";
    const Captured r = run(dir / "sc.json");
    CHECK(r.code == kViolation);
    CHECK((r.out + r.err).find("not admissible") != std::string::npos);
}

TEST_CASE("run: outcome document")
{
    TempDir dir;
    RunOptions opts;
    opts.json = dir / "out.json";
    REQUIRE(run(fixturePath("scenarios/double-ring-forge.json"), opts).code == kClean);
    std::ifstream in(*opts.json);
    const auto doc = nlohmann::json::parse(in);
    CHECK(doc.at("delivered") == true);
    CHECK(doc.at("message_hash") == doc.at("expected_hash"));
    CHECK(doc.at("nodes") == 12);
    CHECK(doc.at("fault").at("strategy") == "FORGE-MESSAGE");
    CHECK(doc.at("violations").empty());
    CHECK(doc.at("counters").at("total_sends").get<std::size_t>() > 0);
}

TEST_CASE("seed precedence: flag, then environment, then file")
{
    TempDir dir;
    const fs::path sc = fixturePath("scenarios/gabriel-random.json");
    auto hashWith = [&](RunOptions opts) {
        opts.json = dir / "o.json";
        REQUIRE(run(sc, opts).code == kClean);
        std::ifstream in(*opts.json);
        const auto doc = nlohmann::json::parse(in);
        return std::pair{doc.at("schedule").at("seed").get<std::uint64_t>(), doc.at("trace_hash").get<std::string>()};
    };

    const auto fromFile = hashWith({});
    const auto flagged = [&] {
        RunOptions o;
        o.seed = 77;
        return hashWith(o);
    };
    CHECK(flagged().first == 77);
    {
        SeedEnv env("77");
        const auto fromEnv = hashWith({});
        CHECK(fromEnv == flagged());
        RunOptions o;
        o.seed = fromFile.first;
        CHECK(hashWith(o) == fromFile);
    }
    CHECK(hashWith({}) == fromFile);
    {
        SeedEnv env("seven");
        CHECK_THROWS_AS(seedFromEnvironment(), std::invalid_argument);
        CHECK(run(sc).code == kUsage);
    }
}

TEST_CASE("replay: matching trace, edited field, truncated trace")
{
    TempDir dir;
    RunOptions opts;
    opts.trace = dir / "t.trace";
    REQUIRE(run(fixturePath("scenarios/octahedron-crash.json"), opts).code == kClean);
    const auto original = lines(*opts.trace);
    REQUIRE(original.size() > 4);
    CHECK(original[0] == "# berger-trace 1");
    CHECK(original[1].starts_with("# scenario {"));

    const Captured same = replay(*opts.trace);
    CHECK(same.code == kClean);

    auto edited = original;
    const std::size_t at = edited.size() - 2;
    const auto bar = edited[at].find(" | ");
    REQUIRE(bar != std::string::npos);
    edited[at].insert(bar, "9");
    writeLines(dir / "edited.trace", edited);
    const Captured diverged = replay(dir / "edited.trace");
    CHECK(diverged.code == kViolation);
    CHECK((diverged.out + diverged.err).find("edited.trace:" + std::to_string(at + 1)) != std::string::npos);

    auto truncated = original;
    truncated.pop_back();
    writeLines(dir / "short.trace", truncated);
    CHECK(replay(dir / "short.trace").code == kViolation);

    writeLines(dir / "junk.trace", {"hello"});
    CHECK(replay(dir / "junk.trace").code == kUsage);
}

TEST_CASE("sweep: empty sizes is a usage error, table goes to --out")
{
    std::ostringstream out, err;
    CHECK(cmdSweep(fixturePath("sweeps/empty-sizes.json"), {}, out, err) == kUsage);
    CHECK(err.str().find("sizes list is empty") != std::string::npos);

    TempDir dir;
    std::ofstream(dir / "w.json") << R"({"instances": [")" << fixturePath("octahedron.json").string()
                                  << R"("], "strategies": ["NONE", "CRASH"], "seedsPerCell": 2})";
    SweepOptions opts;
    opts.out = dir / "table.tsv";
    std::ostringstream out2, err2;
    CHECK(cmdSweep(dir / "w.json", opts, out2, err2) == kClean);
    CHECK(out2.str().find("# status PASS") != std::string::npos);
    const auto table = lines(*opts.out);
    REQUIRE(table.size() >= 3);
    CHECK(table[0].starts_with("target\t"));
}
