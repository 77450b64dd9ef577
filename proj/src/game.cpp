#include "tg/game.hpp"

#include "tg/error.hpp"

#include <utility>

namespace tg {

ThresholdGame make_game(Network net, std::vector<Rat> thresholds) {
    if (static_cast<int>(thresholds.size()) != net.size())
        throw Error(Errc::Mismatch, "threshold count does not match agent count");
    return ThresholdGame{std::move(net), std::move(thresholds)};
}

Rat neighbour_sum(const Network& net, int i, const ActionProfile& x) {
    Rat sum(0);
    for (const auto& [j, w] : net.out_edges(i))
        if (x[j]) sum += w;
    return sum;
}

BestResponse best_response(const ThresholdGame& game, int i, const ActionProfile& x) {
    if (static_cast<int>(x.size()) != game.size())
        throw Error(Errc::Mismatch, "profile size does not match game");
    Rat sum = neighbour_sum(game.net, i, x);
    const Rat& k = game.thresholds.at(i);
    if (sum > k) return BestResponse::Only1;
    if (sum == k) return BestResponse::Either;
    return BestResponse::Only0;
}

bool action_in(BestResponse br, std::uint8_t action) {
    switch (br) {
        case BestResponse::Only0: return action == 0;
        case BestResponse::Only1: return action == 1;
        case BestResponse::Either: return true;
    }
    return false;
}

bool is_nash(const ThresholdGame& game, const ActionProfile& x) {
    for (int i = 0; i < game.size(); ++i)
        if (!action_in(best_response(game, i, x), x[i])) return false;
    return true;
}

ThresholdGame complementary_game(const ThresholdGame& game) {
    std::vector<Rat> flipped(game.size());
    for (int i = 0; i < game.size(); ++i)
        flipped[i] = game.net.degree(i) - game.thresholds[i];
    return ThresholdGame{game.net, std::move(flipped)};
}

void LinearQuadraticParams::validate(int n) const {
    if (static_cast<int>(a.size()) != n || static_cast<int>(c.size()) != n ||
        static_cast<int>(phi.size()) != n)
        throw Error(Errc::Mismatch, "lq parameter vectors must cover every agent");
    for (int i = 0; i < n; ++i) {
        if (a[i] < 0) throw Error(Errc::InvalidParams, "a_i must be >= 0");
        if (c[i] <= 0) throw Error(Errc::InvalidParams, "c_i must be > 0");
        if (phi[i] <= 0) throw Error(Errc::InvalidParams, "phi_i must be > 0");
    }
}

ThresholdGame thresholds_from_lq(const LinearQuadraticParams& params, const Network& net) {
    params.validate(net.size());
    std::vector<Rat> k(net.size());
    for (int i = 0; i < net.size(); ++i)
        k[i] = (params.c[i] - 2 * params.a[i]) / (2 * params.phi[i]);
    return ThresholdGame{net, std::move(k)};
}

Rat lq_utility(const LinearQuadraticParams& params, const Network& net, int i,
               const ActionProfile& x) {
    params.validate(net.size());
    if (!x[i]) return Rat(0);
    return params.a[i] - params.c[i] / 2 + params.phi[i] * neighbour_sum(net, i, x);
}

}  // namespace tg
