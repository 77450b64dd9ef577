#pragma once

#include "tg/network.hpp"
#include "tg/rational.hpp"

#include <vector>

namespace tg {

// Result of k-core peeling: surviving agents (original indices, ascending),
// the induced surviving sub-network, and the per-round deletion trace.
struct CoreResult {
    std::vector<int> members;
    Network subnetwork;
    std::vector<std::vector<int>> trace;

    bool contains(int i) const;
};

// Iteratively deletes every unprotected agent whose out-degree within the
// survivors is strictly below k. Protected agents are never deleted.
CoreResult k_core(const Network& net, const Rat& k,
                  const std::vector<int>& protected_agents = {});

// Peel value of an agent: the highest k for which it is in the k-core.
// Protected agents get unbounded = true.
struct PeelValue {
    Rat value;
    bool unbounded = false;
};

std::vector<PeelValue> peeling_values(const Network& net,
                                      const std::vector<int>& protected_agents = {});

// Maximal set M such that each member keeps at least proportion q of its
// out-weight inside M; computed as the 1-core of the adjusted network of
// the fractional-threshold game (G, q d).
std::vector<int> max_q_cohesive(const Network& net, const Rat& q);

}  // namespace tg
