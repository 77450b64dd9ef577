#include "tg/io.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(TG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string fixture(const std::string& body) {
    std::string path = "/tmp/tg_cli_fixture.json";
    std::ofstream(path) << body;
    return path;
}

const char* kSeedChain = R"({"version":1,
  "nodes":[{"id":"A","threshold":"-1"},{"id":"B","threshold":"1/2"},{"id":"C","threshold":"1/2"}],
  "edges":[{"src":"A","dst":"B","weight":"1"},{"src":"B","dst":"A","weight":"1"},
           {"src":"B","dst":"C","weight":"1"},{"src":"C","dst":"B","weight":"1"}]})";

}  // namespace

TEST_CASE("validate and exit codes") {
    auto path = fixture(kSeedChain);
    auto ok = run("validate --game " + path);
    CHECK(ok.status == 0);
    auto doc = tg::Json::parse(ok.out);
    CHECK(doc["agents"] == 3);

    auto missing = run("validate --game /tmp/tg_cli_no_such_file.json");
    CHECK(missing.status == 2);
    auto err = tg::Json::parse(missing.out);
    CHECK(err.contains("error"));
}

TEST_CASE("max-eq and min-eq on the seed chain") {
    auto path = fixture(kSeedChain);
    auto mx = run("max-eq --game " + path);
    REQUIRE(mx.status == 0);
    auto mxdoc = tg::Json::parse(mx.out);
    CHECK(mxdoc["active"] == tg::Json::array({"A", "B", "C"}));

    auto mn = run("min-eq --game " + path);
    REQUIRE(mn.status == 0);
    auto mndoc = tg::Json::parse(mn.out);
    CHECK(mndoc["active"] == tg::Json::array({"A", "B", "C"}));
}

TEST_CASE("dynamics from zeros with ties to zero matches min-eq") {
    auto path = fixture(kSeedChain);
    auto dyn = run("dynamics --game " + path + " --from zeros --ties 0");
    REQUIRE(dyn.status == 0);
    auto dyndoc = tg::Json::parse(dyn.out);
    auto mn = tg::Json::parse(run("min-eq --game " + path).out);
    CHECK(dyndoc["active"] == mn["active"]);
}

TEST_CASE("all-eq methods agree byte for byte") {
    auto path = fixture(R"({"version":1,
      "nodes":[{"id":"A","threshold":"2/3"},{"id":"B","threshold":"3/4"}],
      "edges":[{"src":"A","dst":"B","weight":"1"},{"src":"B","dst":"A","weight":"1"}]})");
    auto core = run("all-eq --game " + path + " --method core");
    auto brute = run("all-eq --game " + path + " --method brute");
    REQUIRE(core.status == 0);
    REQUIRE(brute.status == 0);
    auto coredoc = tg::Json::parse(core.out);
    auto brutedoc = tg::Json::parse(brute.out);
    CHECK(coredoc["equilibria"] == brutedoc["equilibria"]);
    CHECK(coredoc["count"] == 2);  // all-zeros and all-ones
}

TEST_CASE("reruns are byte identical") {
    auto path = fixture(kSeedChain);
    for (const char* sub : {"transform", "max-eq", "kcore --k 1 --on H", "peel --on G",
                            "centrality --phi 1/4 --a 1", "seeds"}) {
        auto first = run(std::string(sub) + " --game " + path);
        auto second = run(std::string(sub) + " --game " + path);
        CHECK(first.status == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("export-dot emits parseable highlight output") {
    auto path = fixture(kSeedChain);
    auto dot = run("export-dot --game " + path + " --highlight max-eq");
    REQUIRE(dot.status == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    CHECK(dot.out.find("fillcolor=yellow") != std::string::npos);
}

TEST_CASE("computation errors exit 3") {
    auto path = fixture(kSeedChain);
    auto r = run("centrality --phi 2 --a 1 --game " + path);
    CHECK(r.status == 3);
    auto err = tg::Json::parse(r.out);
    CHECK(err["error"]["code"] == "Divergent");
}
