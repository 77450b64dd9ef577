#pragma once

#include "tg/core.hpp"
#include "tg/equilibrium.hpp"
#include "tg/game.hpp"

#include <optional>
#include <vector>

namespace tg {

// Exact solution b of (I - Phi G) b = a, Phi = diag(phi). Throws Divergent
// when the spectral radius of Phi G is not below 1 or the system is singular.
std::vector<Rat> bonacich(const Network& net, const std::vector<Rat>& phi,
                          const std::vector<Rat>& a);

// c_i = b_i^2 / M_ii with M = (I - Phi G)^{-1}.
std::vector<Rat> intercentrality(const Network& net, const std::vector<Rat>& phi,
                                 const std::vector<Rat>& a);

// Drop in the number of active agents in the maximal equilibrium when i's
// threshold is raised above its degree (the removal surrogate).
long cascade_number(const ThresholdGame& game, int i);

enum class KeyPlayerMetric { Cascade, Intercentrality };

// All argmax agents under the chosen removal-impact metric, in input order.
std::vector<int> key_players(const ThresholdGame& game, KeyPlayerMetric metric,
                             const std::optional<LinearQuadraticParams>& lq = {});

// Agents with strictly negative thresholds; they act in every equilibrium.
std::vector<int> endogenous_seeds(const ThresholdGame& game);

struct CentralityReport {
    std::vector<PeelValue> peel;       // on the adjusted network H
    std::vector<Rat> bonacich;         // on G
    std::vector<long> cascade_number;  // removal impact, binary actions
    std::vector<Rat> intercentrality;  // removal impact, continuous actions
};

CentralityReport centrality_report(const ThresholdGame& game,
                                   const LinearQuadraticParams& lq);

struct PerturbationChange {
    enum class Kind { Edge, Threshold } kind;
    int src = -1;       // edge source, or the agent for a threshold change
    int dst = -1;       // edge destination (Edge only)
    Rat delta;
};

struct PerturbationResult {
    PerturbationChange change;
    ActionProfile max_before, max_after;
    ActionProfile min_before, min_after;
    std::vector<int> affected;  // agents whose action changed in either extremal eq
    ThresholdGame perturbed;
};

// Applies a single weight or threshold change, recomputes both extremal
// equilibria, and verifies the sign-correct weak monotonicity.
PerturbationResult perturb(const ThresholdGame& game, const PerturbationChange& change);

}  // namespace tg
