#include "locsys/cli.hpp"
#include "locsys/fixtures.hpp"
#include "locsys/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace locsys;
namespace fs = std::filesystem;

namespace {

const fs::path kSource = LOCSYS_SOURCE_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Runs from inside the shipped fixtures directory so that file names in
// output are stable.
struct InFixtures {
    fs::path saved = fs::current_path();
    InFixtures() { fs::current_path(kSource / "fixtures"); }
    ~InFixtures() { fs::current_path(saved); }
};

fs::path scratch_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("locsys_cli_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string w; ss >> w;) out.push_back(w);
    return out;
}

} // namespace

TEST_CASE("exit codes") {
    InFixtures here;
    CHECK(run({"algebra", "check", "m2.alg"}).code == 0);
    CHECK(run({"algebra", "simple", "t2.alg"}).code == 0);
    CHECK(run({"algebra", "rank", "t2.alg"}).code == 0);
    CHECK(run({"algebra", "rank", "n3.alg"}).code == 3);
    CHECK(run({"algebra", "check", "missing.alg"}).code == 3);
    CHECK(run({"algebra", "bogus", "m2.alg"}).code == 3);
    CHECK(run({}).code == 3);
    CHECK(run({"tower", "check", "m_infty_prefix.twr"}).code == 0);
    CHECK(run({"tower", "check", "corrupted.twr"}).code == 1);
    CHECK(run({"tower", "is-conical", "conical_fixture.twr"}).code == 0);
    CHECK(run({"tower", "is-conical", "cond3_fail.twr"}).code == 1);
    CHECK(run({"verify", "not-residually-nilpotent", "nil_chain.twr"}).code == 1);
    CHECK(run({"verify", "not-residually-nilpotent", "m_infty_prefix.twr"}).code == 0);
    CHECK(run({"verify", "radical-avoidance", "two_node.twr"}).code == 0);
    CHECK(run({"verify", "maximal-ideal-avoidance", "adversarial.twr", "--node", "3"}).code == 2);
    CHECK(run({"verify", "maximal-ideal-avoidance", "fm2_tower.twr"}).code == 0);
    CHECK(run({"tower", "build-diagonal", "--n1", "2", "--sig", "7,0"}).code == 3);
    CHECK(run({"--max-dim", "3", "algebra", "check", "m2.alg"}).code == 3);
}

TEST_CASE("errors are reported on stderr") {
    InFixtures here;
    Run r = run({"algebra", "check", "missing.alg"});
    CHECK(r.err.rfind("error: ", 0) == 0);
    Run s = run({"--format", "structured", "algebra", "check", "missing.alg"});
    Json j = Json::parse(s.out);
    CHECK(j["exit"] == 3);
    CHECK(j.contains("error"));
}

TEST_CASE("golden outputs") {
    InFixtures here;
    const fs::path golden = kSource / "tests" / "golden";
    std::ifstream cases(golden / "cases.txt");
    REQUIRE(cases.good());
    const bool update = std::getenv("LOCSYS_UPDATE_GOLDEN") != nullptr;
    int count = 0;
    for (std::string line; std::getline(cases, line);) {
        if (line.empty() || line[0] == '#') continue;
        auto bar = line.find('|');
        REQUIRE(bar != std::string::npos);
        std::string name = split_words(line.substr(0, bar)).front();
        Run r = run(split_words(line.substr(bar + 1)));
        std::string actual = r.out + "exit: " + std::to_string(r.code) + "\n";
        fs::path expected_path = golden / (name + ".out");
        if (update) {
            write_text(expected_path, actual);
        } else {
            CHECK_MESSAGE(slurp(expected_path) == actual, name);
        }
        ++count;
    }
    CHECK(count > 10);
}

TEST_CASE("structured output is valid JSON with the exit code") {
    InFixtures here;
    for (std::vector<std::string> args :
         {std::vector<std::string>{"algebra", "components", "m2m3.alg"}, {"tower", "is-conical", "cond3_fail.twr"},
          {"verify", "maximal-ideal-avoidance", "adversarial.twr", "--node", "3"}, {"tower", "profile", "diag_2_4_12.twr"}}) {
        Run plain = run(args);
        args.insert(args.begin(), {"--format", "structured"});
        Run r = run(args);
        Json j = Json::parse(r.out);
        CHECK(j["exit"] == plain.code);
        CHECK(r.code == plain.code);
        CHECK(canonical_json(j) == r.out);
    }
}

TEST_CASE("built towers re-verify") {
    fs::path dir = scratch_dir("build");
    fs::path file = dir / "d.twr";
    Run b = run({"tower", "build-diagonal", "--n1", "2", "--sig", "2,0", "--sig", "1,2", "-o", file.string()});
    REQUIRE(b.code == 0);
    CHECK(run({"tower", "check", file.string()}).code == 0);
    Run p = run({"tower", "profile", file.string()});
    CHECK(p.out.find("rank 3: 6") != std::string::npos);
    fs::path core = dir / "core.twr";
    CHECK(run({"tower", "perfect-core", file.string(), "-o", core.string()}).code == 0);
    CHECK(run({"tower", "check", core.string()}).code == 0);
    fs::path con = dir / "con.twr";
    CHECK(run({"tower", "conical", file.string(), "--base", "2", "-o", con.string()}).code == 0);
    CHECK(run({"tower", "is-conical", con.string()}).code == 0);
    CHECK(run({"tower", "check", con.string()}).code == 0);
    fs::path sub = dir / "sub.twr";
    CHECK(run({"tower", "ideal-subsystem", file.string(), "--vec", "0,1,0,0", "-o", sub.string()}).code == 0);
    CHECK(run({"tower", "check", sub.string()}).code == 0);
    fs::remove_all(dir);
}

TEST_CASE("fixtures command writes the corpus") {
    fs::path dir = scratch_dir("fixtures");
    CHECK(run({"fixtures", dir.string()}).code == 0);
    for (const auto& [name, text] : fixtures::corpus()) CHECK(slurp(dir / name) == text);
    fs::remove_all(dir);
}

TEST_CASE("outputs do not depend on the seed") {
    InFixtures here;
    for (std::vector<std::string> args :
         {std::vector<std::string>{"algebra", "components", "m2m3.alg"}, {"algebra", "onepr", "fm2.alg"},
          {"algebra", "levi", "t4.alg"}, {"tower", "profile", "fm2_tower.twr"}}) {
        Run base = run(args);
        for (const char* seed : {"1", "17", "99"}) {
            std::vector<std::string> seeded = {"--seed", seed};
            seeded.insert(seeded.end(), args.begin(), args.end());
            Run r = run(seeded);
            CHECK(r.code == base.code);
            CHECK(r.out == base.out);
        }
    }
}
