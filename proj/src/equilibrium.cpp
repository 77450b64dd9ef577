#include "tg/equilibrium.hpp"

#include "tg/core.hpp"
#include "tg/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace tg {

namespace {

bool leq(const ActionProfile& a, const ActionProfile& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ActionProfile profile_from_mask(std::uint32_t mask, int n) {
    ActionProfile x(n, 0);
    for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
    return x;
}

// Per-agent row scaled to integers (common denominator), for fast exact
// comparisons sum-vs-threshold. Falls back to rationals when the scaled
// magnitudes would not fit comfortably in 64 bits.
struct ScaledRow {
    std::vector<std::pair<int, long long>> weights;
    long long threshold = 0;
    bool ok = false;
};

ScaledRow scale_row(const std::vector<std::pair<int, Rat>>& row, const Rat& threshold) {
    ScaledRow out;
    BigInt lcm = denominator(threshold);
    for (const auto& [j, w] : row)
        lcm = boost::multiprecision::lcm(lcm, denominator(w));
    const BigInt limit = BigInt(1) << 60;
    BigInt total = 0;
    std::vector<std::pair<int, BigInt>> scaled;
    for (const auto& [j, w] : row) {
        BigInt s = numerator(w) * (lcm / denominator(w));
        total += abs(s);
        scaled.emplace_back(j, s);
    }
    BigInt k = numerator(threshold) * (lcm / denominator(threshold));
    total += abs(k);
    if (total >= limit) return out;  // ok stays false
    for (auto& [j, s] : scaled) out.weights.emplace_back(j, s.convert_to<long long>());
    out.threshold = k.convert_to<long long>();
    out.ok = true;
    return out;
}

}  // namespace

ActionProfile maximal_equilibrium(const ThresholdGame& game) {
    AdjustedNetwork h = adjust(game);
    CoreResult core = k_core(h.net, Rat(1), {h.shadow});
    ActionProfile x(game.size(), 0);
    for (int m : core.members)
        if (m != h.shadow) x[m] = 1;
    return x;
}

ActionProfile minimal_equilibrium(const ThresholdGame& game) {
    AdjustedNetwork h = adjust(complementary_game(game));
    CoreResult core = k_core(h.net, Rat(1), {h.shadow});
    ActionProfile x(game.size(), 1);
    for (int m : core.members)
        if (m != h.shadow) x[m] = 0;
    return x;
}

DynamicsTrace br_dynamics(const ThresholdGame& game, const ActionProfile& initial,
                          TiePolicy ties) {
    if (static_cast<int>(initial.size()) != game.size())
        throw Error(Errc::Mismatch, "initial profile size does not match game");
    DynamicsTrace trace;
    trace.states.push_back(initial);
    std::map<ActionProfile, int> seen{{initial, 0}};
    for (;;) {
        const ActionProfile& cur = trace.states.back();
        ActionProfile next(game.size(), 0);
        for (int i = 0; i < game.size(); ++i) {
            switch (best_response(game, i, cur)) {
                case BestResponse::Only1: next[i] = 1; break;
                case BestResponse::Only0: next[i] = 0; break;
                case BestResponse::Either:
                    next[i] = (ties == TiePolicy::TiesTo1) ? 1 : 0;
                    break;
            }
        }
        if (next == cur) {
            trace.converged_at = static_cast<int>(trace.states.size()) - 1;
            return trace;
        }
        auto [it, inserted] = seen.emplace(next, static_cast<int>(trace.states.size()));
        if (!inserted)
            throw Error(Errc::NonConvergent, "best-response dynamics entered a cycle");
        trace.states.push_back(std::move(next));
    }
}

bool has_realizable_indifference(const ThresholdGame& game) {
    for (int i = 0; i < game.size(); ++i) {
        const auto& row = game.net.out_edges(i);
        if (static_cast<int>(row.size()) > 30)
            throw Error(Errc::IndifferencePresent,
                        "out-neighbourhood too large for exact indifference check");
        const Rat& k = game.thresholds[i];
        if (k == 0) return true;  // empty subset realizes it
        if (k < 0) continue;      // positive weights cannot sum to k
        // DFS over neighbour subsets with suffix-sum pruning
        const int m = static_cast<int>(row.size());
        std::vector<Rat> suffix(m + 1, Rat(0));
        for (int t = m - 1; t >= 0; --t) suffix[t] = suffix[t + 1] + row[t].second;
        std::vector<std::pair<int, Rat>> stack{{0, Rat(0)}};
        bool found = false;
        while (!stack.empty() && !found) {
            auto [idx, sum] = stack.back();
            stack.pop_back();
            if (sum == k) { found = true; break; }
            if (idx >= m) continue;
            if (sum > k) continue;
            if (sum + suffix[idx] < k) continue;
            stack.emplace_back(idx + 1, sum);
            stack.emplace_back(idx + 1, sum + row[idx].second);
        }
        if (found) return true;
    }
    return false;
}

namespace {

// Fast iterated deletion on H restricted to a member mask; the shadow is
// always present. Returns the surviving mask.
struct MaskedCore {
    int n = 0;
    bool fast = true;
    std::vector<std::vector<std::pair<int, long long>>> w_fast;  // strategic edges
    std::vector<long long> shadow_fast, thresh_fast;
    std::vector<std::vector<std::pair<int, Rat>>> w_slow;
    std::vector<Rat> shadow_slow;

    explicit MaskedCore(const AdjustedNetwork& h) {
        n = h.strategic_count();
        w_fast.resize(n);
        shadow_fast.assign(n, 0);
        thresh_fast.assign(n, 0);
        w_slow.resize(n);
        shadow_slow.assign(n, Rat(0));
        for (int i = 0; i < n; ++i) {
            std::vector<std::pair<int, Rat>> row;
            Rat shadow_w(0);
            for (const auto& [j, w] : h.net.out_edges(i)) {
                if (j == h.shadow)
                    shadow_w = w;
                else
                    row.emplace_back(j, w);
            }
            w_slow[i] = row;
            shadow_slow[i] = shadow_w;
            ScaledRow sr = scale_row(row, Rat(1) - shadow_w);
            if (!sr.ok) {
                fast = false;
                continue;
            }
            w_fast[i] = sr.weights;
            thresh_fast[i] = sr.threshold;  // survive iff sum >= scaled (1 - shadow)
        }
    }

    std::uint32_t run(std::uint32_t mask) const {
        std::uint32_t alive = mask;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < n; ++i) {
                if (!((alive >> i) & 1u)) continue;
                bool keep;
                if (fast) {
                    long long sum = 0;
                    for (const auto& [j, w] : w_fast[i])
                        if ((alive >> j) & 1u) sum += w;
                    keep = sum >= thresh_fast[i];
                } else {
                    Rat sum = shadow_slow[i];
                    for (const auto& [j, w] : w_slow[i])
                        if ((alive >> j) & 1u) sum += w;
                    keep = sum >= 1;
                }
                if (!keep) {
                    alive &= ~(1u << i);
                    changed = true;
                }
            }
        }
        return alive;
    }
};

}  // namespace

EquilibriumSet all_equilibria_core(const ThresholdGame& game, int max_agents) {
    const int n = game.size();
    if (n > max_agents || n > 31)
        throw Error(Errc::TooLarge, "too many agents for subset enumeration");
    if (has_realizable_indifference(game))
        throw Error(Errc::IndifferencePresent,
                    "game has a realizable indifference; use brute-force enumeration");

    AdjustedNetwork h = adjust(game);
    MaskedCore core(h);

    EquilibriumSet eqs;
    eqs.method = EnumerationMethod::CoreCharacterization;
    const std::uint32_t full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1u);
    for (std::uint32_t mask = 0;; ++mask) {
        // (i) every member survives within H[M + shadow]
        if (core.run(mask) == mask) {
            // (ii) no outsider survives once added alone
            bool blocked = false;
            for (int i = 0; i < n && !blocked; ++i) {
                if ((mask >> i) & 1u) continue;
                std::uint32_t with_i = mask | (1u << i);
                if ((core.run(with_i) >> i) & 1u) blocked = true;
            }
            if (!blocked) eqs.profiles.push_back(profile_from_mask(mask, n));
        }
        if (mask == full) break;
    }
    std::sort(eqs.profiles.begin(), eqs.profiles.end());
    return eqs;
}

EquilibriumSet all_equilibria_brute(const ThresholdGame& game, int max_agents) {
    const int n = game.size();
    if (n > max_agents || n > 31)
        throw Error(Errc::TooLarge, "too many agents for profile enumeration");

    // per-agent scaled-integer rows when they fit, exact rationals otherwise
    std::vector<ScaledRow> rows(n);
    bool fast = true;
    for (int i = 0; i < n; ++i) {
        rows[i] = scale_row(game.net.out_edges(i), game.thresholds[i]);
        if (!rows[i].ok) fast = false;
    }

    EquilibriumSet eqs;
    eqs.method = EnumerationMethod::BruteForce;
    const std::uint32_t full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1u);
    for (std::uint32_t mask = 0;; ++mask) {
        bool nash = true;
        if (fast) {
            for (int i = 0; i < n && nash; ++i) {
                long long sum = 0;
                for (const auto& [j, w] : rows[i].weights)
                    if ((mask >> j) & 1u) sum += w;
                if (sum > rows[i].threshold)
                    nash = (mask >> i) & 1u;
                else if (sum < rows[i].threshold)
                    nash = !((mask >> i) & 1u);
            }
        } else {
            ActionProfile x = profile_from_mask(mask, n);
            nash = is_nash(game, x);
        }
        if (nash) eqs.profiles.push_back(profile_from_mask(mask, n));
        if (mask == full) break;
    }
    std::sort(eqs.profiles.begin(), eqs.profiles.end());
    return eqs;
}

LatticeReport verify_lattice(const ThresholdGame& game, const EquilibriumSet& eqs) {
    LatticeReport report;
    const int n = game.size();
    if (eqs.profiles.empty()) {
        report.detail = "equilibrium set is empty";
        return report;
    }
    for (const auto& x : eqs.profiles)
        if (!is_nash(game, x)) {
            report.detail = "set contains a non-equilibrium profile";
            return report;
        }

    ActionProfile meet_all(n, 1), join_all(n, 0);
    for (const auto& x : eqs.profiles)
        for (int i = 0; i < n; ++i) {
            meet_all[i] &= x[i];
            join_all[i] |= x[i];
        }
    auto contains = [&](const ActionProfile& x) {
        return std::binary_search(eqs.profiles.begin(), eqs.profiles.end(), x);
    };
    if (!contains(meet_all)) {
        report.detail = "no unique minimum equilibrium";
        return report;
    }
    if (!contains(join_all)) {
        report.detail = "no unique maximum equilibrium";
        return report;
    }
    report.minimum = meet_all;
    report.maximum = join_all;

    // pairwise join/meet, closed under iterated tie-resolved best response,
    // must land on equilibria bounded by the pair and the extremes
    for (size_t p = 0; p < eqs.profiles.size(); ++p) {
        for (size_t q = p + 1; q < eqs.profiles.size(); ++q) {
            const auto& x = eqs.profiles[p];
            const auto& y = eqs.profiles[q];
            ActionProfile join(n), meet(n);
            for (int i = 0; i < n; ++i) {
                join[i] = x[i] | y[i];
                meet[i] = x[i] & y[i];
            }
            if (!is_nash(game, join) || !is_nash(game, meet))
                ++report.raw_join_meet_failures;
            ActionProfile up = br_dynamics(game, join, TiePolicy::TiesTo1).fixed_point();
            ActionProfile down = br_dynamics(game, meet, TiePolicy::TiesTo0).fixed_point();
            if (!is_nash(game, up) || !is_nash(game, down) ||
                !leq(x, up) || !leq(y, up) || !leq(up, join_all) ||
                !leq(down, x) || !leq(down, y) || !leq(meet_all, down)) {
                report.detail = "closure of a pairwise join/meet escaped its bounds";
                return report;
            }
        }
    }
    report.pass = true;
    return report;
}

ParetoReport pareto_check(const ThresholdGame& game, const UtilityOracle& utility,
                          const EquilibriumSet& eqs, bool expect_strict) {
    ParetoReport report;
    const int n = game.size();
    if (eqs.profiles.empty()) {
        report.detail = "equilibrium set is empty";
        return report;
    }
    ActionProfile best(n, 0);
    for (const auto& x : eqs.profiles)
        for (int i = 0; i < n; ++i) best[i] |= x[i];
    if (!std::binary_search(eqs.profiles.begin(), eqs.profiles.end(), best)) {
        report.detail = "maximal equilibrium not present in set";
        return report;
    }
    for (const auto& x : eqs.profiles) {
        if (x == best) continue;
        bool strict = false;
        for (int i = 0; i < n; ++i) {
            Rat u_max = utility(i, best);
            Rat u_x = utility(i, x);
            if (u_max < u_x) {
                report.detail = "agent " + game.net.label(i) + " strictly prefers a dominated equilibrium";
                return report;
            }
            if (u_max > u_x) strict = true;
        }
        if (expect_strict && !strict) {
            report.detail = "no strictly better-off agent in a dominated equilibrium";
            return report;
        }
    }
    report.pass = true;
    return report;
}

}  // namespace tg
