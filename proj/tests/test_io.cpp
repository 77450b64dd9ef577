#include "tg/io.hpp"

#include "tg/error.hpp"

#include "support/random_games.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

using namespace tg;

namespace {

std::string temp_path(const std::string& name) {
    return std::string("/tmp/tg_io_test_") + name + ".json";
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("minimal valid file loads") {
    auto path = temp_path("minimal");
    write_text(path, R"({"version":1,"nodes":[{"id":"A","threshold":"1"}],"edges":[],"metadata":{}})");
    auto game = load_game(path);
    CHECK(game.size() == 1);
    CHECK(game.thresholds[0] == 1);
    std::remove(path.c_str());
}

TEST_CASE("decimal weights convert exactly") {
    auto path = temp_path("decimal");
    write_text(path, R"({"version":1,
        "nodes":[{"id":"A","threshold":"0.5"},{"id":"B","threshold":"-1"}],
        "edges":[{"src":"A","dst":"B","weight":"1.98"}],
        "metadata":{}})");
    auto game = load_game(path);
    CHECK(game.net.weight(0, 1) == Rat(99, 50));
    CHECK(game.thresholds[0] == Rat(1, 2));
    std::remove(path.c_str());
}

TEST_CASE("structured diagnostics") {
    auto check_fails = [](const char* name, const std::string& body, Errc code) {
        auto path = temp_path(name);
        write_text(path, body);
        try {
            load_game(path);
            FAIL("expected an error for ", name);
        } catch (const Error& e) {
            CHECK(e.code() == code);
        }
        std::remove(path.c_str());
    };
    check_fails("dangling",
                R"({"nodes":[{"id":"A","threshold":"1"}],
                    "edges":[{"src":"A","dst":"Z","weight":"1"}]})",
                Errc::ParseError);
    check_fails("dupid",
                R"({"nodes":[{"id":"A","threshold":"1"},{"id":"A","threshold":"2"}],
                    "edges":[{"src":"A","dst":"A","weight":"1"}]})",
                Errc::ParseError);
    check_fails("nonpositive",
                R"({"nodes":[{"id":"A","threshold":"1"},{"id":"B","threshold":"1"}],
                    "edges":[{"src":"A","dst":"B","weight":"0"}]})",
                Errc::ParseError);
    check_fails("shadow",
                R"({"nodes":[{"id":"__shadow__","threshold":"1"}],"edges":[]})",
                Errc::NameClash);
    check_fails("notjson", "{nope", Errc::ParseError);
}

TEST_CASE("save/load round trip is lossless on random games") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 100; ++t) {
        auto game = tgtest::random_game(rng, 9);
        auto path = temp_path("roundtrip");
        save_game(game, path);
        auto loaded = load_game(path);
        CHECK(loaded.net == game.net);
        CHECK(loaded.thresholds == game.thresholds);
        // canonical form is a fixed point
        CHECK(game_to_json(loaded).dump(2) == game_to_json(game).dump(2));
        std::remove(path.c_str());
    }
}

TEST_CASE("lq and profile documents") {
    Network net({"A", "B"}, {{0, 1, Rat(1)}, {1, 0, Rat(1)}});
    auto lq = lq_from_json(Json::parse(R"({"a":{"A":"1/4","B":"0"},
                                           "c":{"A":"1","B":"1"},
                                           "phi":{"A":"1/4","B":"1/2"}})"),
                           net);
    CHECK(lq.a[0] == Rat(1, 4));
    CHECK(lq.phi[1] == Rat(1, 2));

    CHECK_THROWS_AS(lq_from_json(Json::parse(R"({"a":{"A":"1"},"c":{},"phi":{}})"), net),
                    Error);

    auto x = profile_from_json(Json::parse(R"({"A":1,"B":0})"), net);
    CHECK(x == ActionProfile{1, 0});
    CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"A":2,"B":0})"), net), Error);
    CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"A":1})"), net), Error);
}

TEST_CASE("dot export shape") {
    Network net({"A", "B"}, {{0, 1, Rat(1, 2)}});
    auto dot = to_dot(net, {0});
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("\"A\" -> \"B\" [label=\"1/2\"]") != std::string::npos);
    CHECK(dot.find("fillcolor=yellow") != std::string::npos);
    CHECK(dot.rfind("}\n") == dot.size() - 2);
}
