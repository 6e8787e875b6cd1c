// Drives the installed command-line binary end to end: output formats, the
// verification subcommands, exit codes, and the internal-error repro bundle.
// The binary path arrives in LYUCALC_BIN.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string bin() {
    const char* b = std::getenv("LYUCALC_BIN");
    REQUIRE_MESSAGE(b != nullptr, "LYUCALC_BIN must point at the CLI binary");
    return std::string("\"") + b + "\"";
}

struct RunResult {
    int code = -1;
    std::string out; // stdout and stderr combined
};

RunResult run(const std::string& args) {
    RunResult res;
    std::string cmd = bin() + " " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) res.out.append(buf, n);
    int st = pclose(f);
    res.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return res;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("lyucalc-cli-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) const {
        fs::path p = path / name;
        std::ofstream(p) << content;
        return p.string();
    }
};

const char* kLine = "p=2\nvars=x0,x1\ngens=\nlabel=line\n";
const char* kSkew = "p=2\nvars=x0,x1,x2,x3\ngens=x0*x2, x0*x3, x1*x2, x1*x3\n";

} // namespace

TEST_CASE("plain table output names the nonzero cells") {
    TempDir tmp;
    RunResult r = run("table " + tmp.file("line.txt", kLine));
    CHECK(r.code == 0);
    CHECK(r.out.find("lambda(2,2) = 1") != std::string::npos);
}

TEST_CASE("json table carries the schema and the pinned entries") {
    TempDir tmp;
    RunResult r = run("table --json " + tmp.file("skew.txt", kSkew));
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["format"] == 1);
    CHECK(j["p"] == 2);
    CHECK(j["dim"] == 2);
    CHECK(j["label"] == "skew"); // file stem when no label= line is given
    CHECK(j["entries"] == json::parse("[[0,1,1],[2,2,2]]"));
    CHECK(j["table"][0][1] == 1);
    CHECK(j["table"][1][1] == 0);
    CHECK(j["vars"].size() == 4);
    CHECK(j["minimized"] == true);
}

TEST_CASE("csv table has the header and all computed cells") {
    TempDir tmp;
    RunResult r = run("table --csv " + tmp.file("line.txt", kLine));
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("i,j,lambda", 0) == 0);
    CHECK(r.out.find("2,2,1") != std::string::npos);
}

TEST_CASE("single-cell mode emits a one-entry report") {
    TempDir tmp;
    RunResult r = run("table --json --cell 2 2 " + tmp.file("skew.txt", kSkew));
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["entries"] == json::parse("[[2,2,2]]"));
}

TEST_CASE("stdin input works through the dash convention") {
    TempDir tmp;
    std::string path = tmp.file("line.txt", kLine);
    RunResult r = run("table --json - < " + path);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["entries"] == json::parse("[[2,2,1]]"));
}

TEST_CASE("thread and minimization flags do not change the numbers") {
    TempDir tmp;
    std::string path = tmp.file("skew.txt", kSkew);
    json base = json::parse(run("table --json " + path).out);
    json thr = json::parse(run("table --json --threads 2 " + path).out);
    json raw = json::parse(run("table --json --no-minimize " + path).out);
    CHECK(base["entries"] == thr["entries"]);
    CHECK(base["entries"] == raw["entries"]);
    CHECK(raw["minimized"] == false);
}

TEST_CASE("cache directory round trip reports its hits") {
    TempDir tmp;
    std::string path = tmp.file("skew.txt", kSkew);
    std::string cache = (tmp.path / "cache").string();
    json cold = json::parse(run("table --json --cache-dir " + cache + " " + path).out);
    json warm = json::parse(run("table --json --cache-dir " + cache + " " + path).out);
    CHECK(cold["cache"]["hits"] == 0);
    CHECK(warm["cache"]["hits"] > 0);
    CHECK(cold["entries"] == warm["entries"]);
}

TEST_CASE("verify-embedding accepts the line against two re-embeddings") {
    TempDir tmp;
    RunResult r =
        run("verify-embedding --veronese 2 --veronese 3 " + tmp.file("line.txt", kLine));
    CHECK(r.code == 0);
    CHECK(r.out.find("match") != std::string::npos);
}

TEST_CASE("ext-dims prints the degree window") {
    TempDir tmp;
    RunResult r = run("ext-dims --i 2 --j 2 --degrees 0..2 " + tmp.file("line.txt", kLine));
    REQUIRE(r.code == 0);
    // the corner module of the plain line is the ring: dims 1, 2, 3
    CHECK(r.out.find("1") != std::string::npos);
    RunResult rj =
        run("ext-dims --json --i 2 --j 2 --degrees 0..2 " + tmp.file("l2.txt", kLine));
    json j = json::parse(rj.out);
    REQUIRE(j["dims"].size() == 3);
    CHECK(j["dims"][0]["degree"] == 0);
    CHECK(j["dims"][0]["dim"] == 1);
    CHECK(j["dims"][1]["dim"] == 2);
    CHECK(j["dims"][2]["dim"] == 3);
}

TEST_CASE("parse errors exit 2 and point at the input") {
    TempDir tmp;
    RunResult r = run("table " + tmp.file("bad.txt", "p=2\nvars=x,y\ngens=x^2 + y@\n"));
    CHECK(r.code == 2);
    CHECK(r.out.find("line 3") != std::string::npos);
    CHECK(r.out.find("column") != std::string::npos);
    RunResult missing = run("table " + (tmp.path / "no-such-file.txt").string());
    CHECK(missing.code == 2);
}

TEST_CASE("inhomogeneous generators exit 3") {
    TempDir tmp;
    RunResult r = run("table " + tmp.file("inhom.txt", "p=2\nvars=x,y\ngens=x^2 + y\n"));
    CHECK(r.code == 3);
    CHECK(r.out.find("homog") != std::string::npos);
}

TEST_CASE("internal failures exit 4 and leave a repro bundle") {
    TempDir tmp;
    std::string path = tmp.file("line.txt", kLine);
    // run from a controlled cwd so the bundle lands in tmp and gets cleaned up
    std::string cmd = "cd " + tmp.path.string() + " && " + bin() +
                      " table --inject-internal-error " + path + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    int st = pclose(f);
    CHECK(WEXITSTATUS(st) == 4);
    auto pos = out.find("repro bundle written to: ");
    REQUIRE(pos != std::string::npos);
    std::string dir = out.substr(pos + 25);
    dir = dir.substr(0, dir.find('\n'));
    fs::path bundle = fs::path(tmp.path) / dir;
    if (!fs::exists(bundle)) bundle = dir; // absolute path case
    REQUIRE(fs::exists(bundle));
    CHECK(fs::exists(bundle / "error.txt"));
    CHECK(fs::exists(bundle / "cmdline.txt"));
    fs::remove_all(bundle);
}

TEST_CASE("version flag prints the tool version") {
    RunResult r = run("--version");
    CHECK(r.code == 0);
    CHECK(r.out.find("1.0.0") != std::string::npos);
}

TEST_CASE("bad invocations fail without computing") {
    RunResult r = run("no-such-subcommand");
    CHECK(r.code != 0);
    RunResult r2 = run("table"); // missing input
    CHECK(r2.code != 0);
    TempDir tmp;
    RunResult r3 = run("table --cell 9 9 " + tmp.file("line.txt", kLine));
    CHECK(r3.code == 2); // cell indices beyond the variable count
}
