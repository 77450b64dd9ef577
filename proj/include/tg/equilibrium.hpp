#pragma once

#include "tg/game.hpp"
#include "tg/transform.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tg {

enum class TiePolicy { TiesTo0, TiesTo1 };

enum class EnumerationMethod { CoreCharacterization, BruteForce };

struct EquilibriumSet {
    std::vector<ActionProfile> profiles;  // lexicographic by agent index
    EnumerationMethod method = EnumerationMethod::BruteForce;
};

// Active iff in the 1-core of the adjusted network H(G,k) (shadow protected).
ActionProfile maximal_equilibrium(const ThresholdGame& game);

// Active iff NOT in the 1-core of the adjusted complementary network.
ActionProfile minimal_equilibrium(const ThresholdGame& game);

struct DynamicsTrace {
    std::vector<ActionProfile> states;  // initial state first
    int converged_at = 0;               // index of the fixed point

    const ActionProfile& fixed_point() const { return states.back(); }
};

// Synchronous myopic best-response dynamics with an explicit tie policy.
// From all-zeros with ties-to-0 this reaches the minimal equilibrium in at
// most n+1 rounds; from arbitrary starts a detected cycle raises
// NonConvergent.
DynamicsTrace br_dynamics(const ThresholdGame& game, const ActionProfile& initial,
                          TiePolicy ties);

// True iff some agent has a subset of out-neighbours whose weights sum to
// exactly its threshold (the empty subset included).
bool has_realizable_indifference(const ThresholdGame& game);

// All equilibria via the induced-subnetwork 1-core characterization.
// Requires an indifference-free game (IndifferencePresent otherwise).
EquilibriumSet all_equilibria_core(const ThresholdGame& game, int max_agents = 25);

// All equilibria by direct Nash check over every profile.
EquilibriumSet all_equilibria_brute(const ThresholdGame& game, int max_agents = 20);

struct LatticeReport {
    bool pass = false;
    std::string detail;
    ActionProfile minimum;
    ActionProfile maximum;
    // pairs whose raw elementwise join or meet is itself not Nash; logged
    // as data, not a failure
    int raw_join_meet_failures = 0;
};

LatticeReport verify_lattice(const ThresholdGame& game, const EquilibriumSet& eqs);

using UtilityOracle = std::function<Rat(int agent, const ActionProfile& x)>;

struct ParetoReport {
    bool pass = false;
    std::string detail;
};

// Checks that the elementwise-maximal profile in eqs weakly Pareto
// dominates every other equilibrium; with expect_strict, additionally
// requires a strictly better-off agent per dominated equilibrium.
ParetoReport pareto_check(const ThresholdGame& game, const UtilityOracle& utility,
                          const EquilibriumSet& eqs, bool expect_strict = false);

}  // namespace tg
