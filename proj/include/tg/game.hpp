#pragma once

#include "tg/network.hpp"
#include "tg/rational.hpp"

#include <cstdint>
#include <vector>

namespace tg {

// Binary action per agent, indexed by agent index.
using ActionProfile = std::vector<std::uint8_t>;

// Three-valued best response; Either occurs exactly when the weighted
// neighbour sum equals the threshold, and callers pick the tie policy.
enum class BestResponse { Only0, Either, Only1 };

struct ThresholdGame {
    Network net;
    std::vector<Rat> thresholds;  // one per agent, any sign

    int size() const { return net.size(); }
};

ThresholdGame make_game(Network net, std::vector<Rat> thresholds);

// Weighted sum of i's active out-neighbours in x (x[i] itself ignored).
Rat neighbour_sum(const Network& net, int i, const ActionProfile& x);

BestResponse best_response(const ThresholdGame& game, int i, const ActionProfile& x);

bool action_in(BestResponse br, std::uint8_t action);

bool is_nash(const ThresholdGame& game, const ActionProfile& x);

// Same network, thresholds d_i - k_i; an involution.
ThresholdGame complementary_game(const ThresholdGame& game);

// Linear-quadratic preferences a_i x - c_i x^2 / 2 + phi_i x * (weighted
// neighbour sum), with a_i >= 0, c_i > 0, phi_i > 0.
struct LinearQuadraticParams {
    std::vector<Rat> a;
    std::vector<Rat> c;
    std::vector<Rat> phi;

    void validate(int n) const;  // sign constraints, sizes
};

// k_i = (c_i - 2 a_i) / (2 phi_i)
ThresholdGame thresholds_from_lq(const LinearQuadraticParams& params, const Network& net);

Rat lq_utility(const LinearQuadraticParams& params, const Network& net, int i,
               const ActionProfile& x);

}  // namespace tg
