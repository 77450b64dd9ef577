#include "tg/equilibrium.hpp"

#include "tg/error.hpp"

#include "support/oracles.hpp"
#include "support/random_games.hpp"

#include <doctest.h>

#include <random>

using namespace tg;

namespace {

ThresholdGame two_cycle_unit(Rat ka, Rat kb) {
    Network net({"A", "B"}, {{0, 1, Rat(1)}, {1, 0, Rat(1)}});
    return make_game(std::move(net), {std::move(ka), std::move(kb)});
}

ThresholdGame seed_chain() {
    // A <-> B <-> C, unit weights, k = (-1, 1/2, 1/2): A seeds, B and C
    // each need one strictly supporting neighbour
    Network net({"A", "B", "C"},
                {{0, 1, Rat(1)}, {1, 0, Rat(1)}, {1, 2, Rat(1)}, {2, 1, Rat(1)}});
    return make_game(std::move(net), {Rat(-1), Rat(1, 2), Rat(1, 2)});
}

bool leq(const ActionProfile& a, const ActionProfile& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("maximal equilibrium examples") {
    CHECK(maximal_equilibrium(two_cycle_unit(Rat(1), Rat(1))) == ActionProfile{1, 1});
    CHECK(maximal_equilibrium(two_cycle_unit(Rat(2), Rat(3, 2))) == ActionProfile{0, 0});
    CHECK(maximal_equilibrium(two_cycle_unit(Rat(-1), Rat(1))) == ActionProfile{1, 1});
}

TEST_CASE("minimal equilibrium examples") {
    CHECK(minimal_equilibrium(two_cycle_unit(Rat(1), Rat(2))) == ActionProfile{0, 0});
    CHECK(minimal_equilibrium(two_cycle_unit(Rat(0), Rat(-1))) == ActionProfile{1, 1});
    CHECK(minimal_equilibrium(seed_chain()) == ActionProfile{1, 1, 1});
}

TEST_CASE("dynamics from zeros walks the seed chain one hop per round") {
    auto trace = br_dynamics(seed_chain(), ActionProfile{0, 0, 0}, TiePolicy::TiesTo0);
    REQUIRE(trace.states.size() == 4);
    CHECK(trace.states[0] == ActionProfile{0, 0, 0});
    CHECK(trace.states[1] == ActionProfile{1, 0, 0});
    CHECK(trace.states[2] == ActionProfile{1, 1, 0});
    CHECK(trace.states[3] == ActionProfile{1, 1, 1});
    CHECK(trace.converged_at == 3);
}

TEST_CASE("dynamics with everything above threshold stays at zeros") {
    auto g = two_cycle_unit(Rat(2), Rat(2));
    auto trace = br_dynamics(g, ActionProfile{0, 0}, TiePolicy::TiesTo0);
    CHECK(trace.converged_at == 0);
    CHECK(trace.fixed_point() == ActionProfile{0, 0});
}

TEST_CASE("dynamics agreement with extremal equilibria on random games") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 120; ++t) {
        auto game = tgtest::random_game(rng, 9);
        const int n = game.size();

        auto down = br_dynamics(game, ActionProfile(n, 0), TiePolicy::TiesTo0);
        CHECK(down.fixed_point() == minimal_equilibrium(game));
        CHECK(down.converged_at <= n + 1);
        for (int s = 0; s + 1 < static_cast<int>(down.states.size()); ++s)
            CHECK(leq(down.states[s], down.states[s + 1]));  // monotone ascent

        auto up = br_dynamics(game, ActionProfile(n, 1), TiePolicy::TiesTo1);
        CHECK(up.fixed_point() == maximal_equilibrium(game));
    }
}

TEST_CASE("extremal equilibria match brute force on random games") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 120; ++t) {
        auto game = tgtest::random_game(rng, 8);
        auto all = tgtest::brute_equilibria(game);
        REQUIRE_FALSE(all.empty());
        CHECK(maximal_equilibrium(game) == tgtest::elementwise_max(all, game.size()));
        CHECK(minimal_equilibrium(game) == tgtest::elementwise_min(all, game.size()));
        // sandwich
        auto lo = minimal_equilibrium(game);
        auto hi = maximal_equilibrium(game);
        for (const auto& x : all) {
            CHECK(leq(lo, x));
            CHECK(leq(x, hi));
        }
    }
}

TEST_CASE("indifference detection") {
    SUBCASE("k equal to an edge weight is realizable") {
        CHECK(has_realizable_indifference(two_cycle_unit(Rat(1), Rat(7))));
    }
    SUBCASE("zero threshold is realized by the empty set") {
        CHECK(has_realizable_indifference(two_cycle_unit(Rat(0), Rat(7))));
    }
    SUBCASE("unreachable threshold is not realizable") {
        CHECK_FALSE(has_realizable_indifference(two_cycle_unit(Rat(1, 3), Rat(5))));
    }
}

TEST_CASE("all_equilibria_core on the 2-cycle") {
    auto g = two_cycle_unit(Rat(2, 3), Rat(3, 4));  // indifference-free analogue
    auto eqs = all_equilibria_core(g);
    REQUIRE(eqs.profiles.size() == 2);
    CHECK(eqs.profiles[0] == ActionProfile{0, 0});
    CHECK(eqs.profiles[1] == ActionProfile{1, 1});
    CHECK(eqs.method == EnumerationMethod::CoreCharacterization);
}

TEST_CASE("single agent with negative threshold has the lone equilibrium (1)") {
    Network net({"A"}, {});
    auto g = make_game(net, {Rat(-1)});
    auto eqs = all_equilibria_core(g);
    REQUIRE(eqs.profiles.size() == 1);
    CHECK(eqs.profiles[0] == ActionProfile{1});
}

TEST_CASE("all_equilibria_core raises on indifference and size") {
    auto g = two_cycle_unit(Rat(1), Rat(1));
    CHECK_THROWS_AS(all_equilibria_core(g), Error);
    CHECK_THROWS_AS(all_equilibria_core(two_cycle_unit(Rat(1, 3), Rat(5)), 1), Error);
    CHECK_THROWS_AS(all_equilibria_brute(two_cycle_unit(Rat(1, 3), Rat(5)), 1), Error);
}

TEST_CASE("brute enumeration keeps both tie resolutions") {
    auto g = two_cycle_unit(Rat(1), Rat(1));
    auto eqs = all_equilibria_brute(g);
    REQUIRE(eqs.profiles.size() == 2);
    CHECK(eqs.profiles[0] == ActionProfile{0, 0});
    CHECK(eqs.profiles[1] == ActionProfile{1, 1});
}

TEST_CASE("core and brute enumeration agree on indifference-free games") {
    std::mt19937_64 rng(55);
    int done = 0;
    while (done < 80) {
        auto game = tgtest::random_game(rng, 8);
        if (has_realizable_indifference(game)) continue;
        ++done;
        auto core_set = all_equilibria_core(game);
        auto brute_set = all_equilibria_brute(game);
        CHECK(core_set.profiles == brute_set.profiles);
        CHECK(brute_set.profiles == tgtest::brute_equilibria(game));
    }
}

TEST_CASE("every active agent in any equilibrium is in the 1-core of H") {
    std::mt19937_64 rng(57);
    for (int t = 0; t < 60; ++t) {
        auto game = tgtest::random_game(rng, 8);
        auto hi = maximal_equilibrium(game);  // 1-core of H, by construction
        for (const auto& x : tgtest::brute_equilibria(game))
            CHECK(leq(x, hi));
    }
}

TEST_CASE("verify_lattice accepts brute-forced sets and flags outsiders") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 60; ++t) {
        auto game = tgtest::random_game(rng, 7);
        auto eqs = all_equilibria_brute(game);
        auto report = verify_lattice(game, eqs);
        CHECK(report.pass);
        CHECK(report.minimum == minimal_equilibrium(game));
        CHECK(report.maximum == maximal_equilibrium(game));
    }

    auto g = two_cycle_unit(Rat(1), Rat(1));
    auto eqs = all_equilibria_brute(g);
    eqs.profiles.insert(eqs.profiles.begin() + 1, ActionProfile{0, 1});  // not Nash
    CHECK_FALSE(verify_lattice(g, eqs).pass);
}

TEST_CASE("pareto check with lq utilities") {
    Network net({"A", "B"}, {{0, 1, Rat(1)}, {1, 0, Rat(1)}});
    LinearQuadraticParams p;
    p.a = {Rat(1, 4), Rat(1, 4)};
    p.c = {Rat(1), Rat(1)};
    p.phi = {Rat(1, 2), Rat(1, 2)};
    auto game = thresholds_from_lq(p, net);  // k = 1/2 each
    auto eqs = all_equilibria_brute(game);
    REQUIRE(eqs.profiles.size() == 2);

    UtilityOracle u = [&](int i, const ActionProfile& x) {
        return lq_utility(p, net, i, x);
    };
    auto report = pareto_check(game, u, eqs, true);
    CHECK(report.pass);

    SUBCASE("single equilibrium passes vacuously") {
        EquilibriumSet lone;
        lone.profiles = {maximal_equilibrium(game)};
        CHECK(pareto_check(game, u, lone).pass);
    }
    SUBCASE("a spillover-violating utility is reported") {
        UtilityOracle bad = [&](int i, const ActionProfile& x) {
            return -lq_utility(p, net, i, x);  // decreasing in participation
        };
        CHECK_FALSE(pareto_check(game, bad, eqs).pass);
    }
}

TEST_CASE("dynamics reports a cycle as NonConvergent when one exists") {
    // on the unit 2-cycle with k = (1/2, 1/2), the synchronous map swaps
    // (1,0) <-> (0,1) forever
    auto g = two_cycle_unit(Rat(1, 2), Rat(1, 2));
    CHECK_THROWS_AS(br_dynamics(g, ActionProfile{1, 0}, TiePolicy::TiesTo0), Error);
}
