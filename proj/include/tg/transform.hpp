#pragma once

#include "tg/game.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace tg {

// Reserved label for the non-strategic shadow agent; rejected in inputs.
inline constexpr const char* kShadowLabel = "__shadow__";

// The (n+1)-agent transformed network. Strategic agents keep their index
// 0..n-1; the shadow agent is index n and permanently plays 1.
struct AdjustedNetwork {
    Network net;
    int shadow = -1;
    Rat eta;

    int strategic_count() const { return net.size() - 1; }
};

// Shadow-agent transformation of (G, k): shadow -> each agent with weight
// eta; row i rescaled by |k_i| when k_i != 0; edge i -> shadow of weight 2
// (k_i < 0) or 1 (k_i = 0), none when k_i > 0.
AdjustedNetwork adjust(const ThresholdGame& game, const Rat& eta = Rat(1));

// The common-threshold-1 game on H, as played by the strategic agents with
// the shadow pinned at action 1. Strategic profile x has size n.
BestResponse adjusted_best_response(const AdjustedNetwork& adjusted, int i,
                                    const ActionProfile& strategic_x);

// Two games over the same agent set are best-response equivalent iff their
// adjusted networks coincide exactly.
bool br_equivalent(const ThresholdGame& g1, const ThresholdGame& g2);

struct EquivalenceReport {
    bool pass = false;
    long long profiles_checked = 0;
    bool exhaustive = false;
    std::optional<ActionProfile> counterexample;
    std::optional<int> disagreeing_agent;
};

// Checks equal best-response correspondences of (G,k) and (H,1) across
// profiles: exhaustively when n <= 12, otherwise `trials` random profiles.
EquivalenceReport verify_equivalence(const ThresholdGame& game,
                                     const AdjustedNetwork& adjusted,
                                     int trials, std::uint64_t seed = 0);

}  // namespace tg
