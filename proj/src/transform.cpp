#include "tg/transform.hpp"

#include "tg/error.hpp"

#include <random>

namespace tg {

AdjustedNetwork adjust(const ThresholdGame& game, const Rat& eta) {
    if (eta < 1) throw Error(Errc::InvalidParams, "eta must be >= 1");
    const int n = game.size();
    for (const auto& label : game.net.labels())
        if (label == kShadowLabel)
            throw Error(Errc::NameClash, std::string("agent label collides with reserved '") + kShadowLabel + "'");

    std::vector<std::string> labels = game.net.labels();
    labels.push_back(kShadowLabel);
    const int shadow = n;

    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        const Rat& k = game.thresholds[i];
        Rat scale = k == 0 ? Rat(1) : abs(k);
        for (const auto& [j, w] : game.net.out_edges(i))
            edges.push_back({i, j, w / scale});
        if (k < 0)
            edges.push_back({i, shadow, Rat(2)});
        else if (k == 0)
            edges.push_back({i, shadow, Rat(1)});
    }
    for (int i = 0; i < n; ++i) edges.push_back({shadow, i, eta});

    return AdjustedNetwork{Network(std::move(labels), edges), shadow, eta};
}

BestResponse adjusted_best_response(const AdjustedNetwork& adjusted, int i,
                                    const ActionProfile& strategic_x) {
    const int n = adjusted.strategic_count();
    if (static_cast<int>(strategic_x.size()) != n)
        throw Error(Errc::Mismatch, "profile size does not match adjusted network");
    if (i < 0 || i >= n) throw Error(Errc::NotFound, "agent index out of range");
    Rat sum(0);
    for (const auto& [j, w] : adjusted.net.out_edges(i)) {
        if (j == adjusted.shadow || strategic_x[j]) sum += w;
    }
    if (sum > 1) return BestResponse::Only1;
    if (sum == 1) return BestResponse::Either;
    return BestResponse::Only0;
}

bool br_equivalent(const ThresholdGame& g1, const ThresholdGame& g2) {
    if (g1.net.labels() != g2.net.labels())
        throw Error(Errc::Mismatch, "games are over different agent sets");
    return adjust(g1).net == adjust(g2).net;
}

EquivalenceReport verify_equivalence(const ThresholdGame& game,
                                     const AdjustedNetwork& adjusted,
                                     int trials, std::uint64_t seed) {
    const int n = game.size();
    EquivalenceReport report;

    auto check = [&](const ActionProfile& x) {
        for (int i = 0; i < n; ++i) {
            if (best_response(game, i, x) != adjusted_best_response(adjusted, i, x)) {
                report.counterexample = x;
                report.disagreeing_agent = i;
                return false;
            }
        }
        return true;
    };

    if (n <= 12) {
        report.exhaustive = true;
        ActionProfile x(n, 0);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
            ++report.profiles_checked;
            if (!check(x)) return report;
        }
    } else {
        std::mt19937_64 rng(seed);
        ActionProfile x(n, 0);
        for (int t = 0; t < trials; ++t) {
            for (int i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>(rng() & 1u);
            ++report.profiles_checked;
            if (!check(x)) return report;
        }
    }
    report.pass = true;
    return report;
}

}  // namespace tg
