#include "tg/core.hpp"

#include "tg/error.hpp"
#include "tg/game.hpp"
#include "tg/transform.hpp"

#include <algorithm>
#include <limits>

namespace tg {

bool CoreResult::contains(int i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

CoreResult k_core(const Network& net, const Rat& k,
                  const std::vector<int>& protected_agents) {
    const int n = net.size();
    std::vector<char> alive(n, 1), prot(n, 0);
    for (int p : protected_agents) {
        if (p < 0 || p >= n) throw Error(Errc::NotFound, "protected agent out of range");
        prot[p] = 1;
    }

    std::vector<Rat> deg(n);
    for (int i = 0; i < n; ++i) deg[i] = net.degree(i);

    CoreResult result;
    for (;;) {
        std::vector<int> doomed;
        for (int i = 0; i < n; ++i)
            if (alive[i] && !prot[i] && deg[i] < k) doomed.push_back(i);
        if (doomed.empty()) break;
        for (int d : doomed) alive[d] = 0;
        // recompute survivor degrees over survivors
        for (int i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            Rat d(0);
            for (const auto& [j, w] : net.out_edges(i))
                if (alive[j]) d += w;
            deg[i] = d;
        }
        result.trace.push_back(std::move(doomed));
    }

    for (int i = 0; i < n; ++i)
        if (alive[i]) result.members.push_back(i);
    result.subnetwork = net.induced(result.members);
    return result;
}

std::vector<PeelValue> peeling_values(const Network& net,
                                      const std::vector<int>& protected_agents) {
    const int n = net.size();
    std::vector<char> alive(n, 1), prot(n, 0);
    for (int p : protected_agents) {
        if (p < 0 || p >= n) throw Error(Errc::NotFound, "protected agent out of range");
        prot[p] = 1;
    }

    std::vector<Rat> deg(n);
    for (int i = 0; i < n; ++i) deg[i] = net.degree(i);

    std::vector<PeelValue> peel(n);
    for (int p = 0; p < n; ++p)
        if (prot[p]) peel[p].unbounded = true;

    // greedy min-degree removal; the peel value is the running maximum of
    // the minimum degree observed up to the agent's removal
    Rat running_max(0);
    bool first = true;
    for (;;) {
        int victim = -1;
        for (int i = 0; i < n; ++i) {
            if (!alive[i] || prot[i]) continue;
            if (victim < 0 || deg[i] < deg[victim]) victim = i;
        }
        if (victim < 0) break;
        if (first || deg[victim] > running_max) running_max = deg[victim];
        first = false;
        peel[victim].value = running_max;
        alive[victim] = 0;
        for (int i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            for (const auto& [j, w] : net.out_edges(i))
                if (j == victim) deg[i] -= w;
        }
    }
    return peel;
}

std::vector<int> max_q_cohesive(const Network& net, const Rat& q) {
    if (q <= 0 || q >= 1) throw Error(Errc::InvalidParams, "q must lie in (0,1)");
    const int n = net.size();
    std::vector<Rat> thresholds(n);
    for (int i = 0; i < n; ++i) thresholds[i] = q * net.degree(i);
    AdjustedNetwork h = adjust(ThresholdGame{net, std::move(thresholds)});
    CoreResult core = k_core(h.net, Rat(1), {h.shadow});
    std::vector<int> members;
    for (int m : core.members)
        if (m != h.shadow) members.push_back(m);
    return members;
}

}  // namespace tg
