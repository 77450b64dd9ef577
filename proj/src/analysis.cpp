#include "tg/analysis.hpp"

#include "tg/error.hpp"
#include "tg/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace tg {

namespace {

// dense A = Phi G as rationals
std::vector<std::vector<Rat>> scaled_adjacency(const Network& net,
                                               const std::vector<Rat>& phi) {
    const int n = net.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (const auto& [j, w] : net.out_edges(i)) a[i][j] = phi[i] * w;
    return a;
}

// power iteration on the nonnegative matrix Phi G; the one floating-point
// computation in the library, used only as a solvability guard
double spectral_radius_estimate(const std::vector<std::vector<Rat>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 0.0;
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j].convert_to<double>();
    std::vector<double> v(n, 1.0), w(n);
    double rho = 0.0;
    for (int iter = 0; iter < 20000; ++iter) {
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += m[i][j] * v[j];
            w[i] = s;
            norm = std::max(norm, std::abs(s));
        }
        if (norm < 1e-300) return 0.0;  // (near-)nilpotent
        for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
        if (std::abs(norm - rho) <= 1e-9 * std::max(1.0, norm)) return norm;
        rho = norm;
    }
    return rho;
}

void check_solvable(const Network& net, const std::vector<Rat>& phi,
                    const std::vector<Rat>& a) {
    const int n = net.size();
    if (static_cast<int>(phi.size()) != n || static_cast<int>(a.size()) != n)
        throw Error(Errc::Mismatch, "phi/a vectors must cover every agent");
    for (int i = 0; i < n; ++i)
        if (phi[i] < 0 || a[i] < 0)
            throw Error(Errc::InvalidParams, "phi and a must be nonnegative");
    auto m = scaled_adjacency(net, phi);
    double rho = spectral_radius_estimate(m);
    if (rho >= 1.0 - 1e-9)
        throw Error(Errc::Divergent, "spectral radius of Phi G is not below 1");
}

// Gaussian elimination over exact rationals: solves (I - Phi G) X = RHS for
// several right-hand sides at once.
std::vector<std::vector<Rat>> solve_system(const Network& net, const std::vector<Rat>& phi,
                                           std::vector<std::vector<Rat>> rhs) {
    const int n = net.size();
    auto a = scaled_adjacency(net, phi);
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        m[i][i] = 1;
        for (int j = 0; j < n; ++j) m[i][j] -= a[i][j];
    }
    const int cols = static_cast<int>(rhs.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) throw Error(Errc::Divergent, "singular system (I - Phi G)");
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            for (int c = 0; c < cols; ++c) std::swap(rhs[c][pivot], rhs[c][col]);
        }
        Rat inv = 1 / m[col][col];
        for (int j = col; j < n; ++j) m[col][j] *= inv;
        for (int c = 0; c < cols; ++c) rhs[c][col] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
            for (int c = 0; c < cols; ++c) rhs[c][r] -= f * rhs[c][col];
        }
    }
    return rhs;
}

}  // namespace

std::vector<Rat> bonacich(const Network& net, const std::vector<Rat>& phi,
                          const std::vector<Rat>& a) {
    check_solvable(net, phi, a);
    auto sol = solve_system(net, phi, {a});
    for (const Rat& b : sol[0])
        if (b < 0) throw Error(Errc::Divergent, "Bonacich vector has a negative entry");
    return sol[0];
}

std::vector<Rat> intercentrality(const Network& net, const std::vector<Rat>& phi,
                                 const std::vector<Rat>& a) {
    check_solvable(net, phi, a);
    const int n = net.size();
    // solve for b and for the diagonal of M = (I - Phi G)^{-1} in one pass
    std::vector<std::vector<Rat>> rhs;
    rhs.push_back(a);
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> e(n, Rat(0));
        e[i] = 1;
        rhs.push_back(std::move(e));
    }
    auto sol = solve_system(net, phi, std::move(rhs));
    std::vector<Rat> c(n);
    for (int i = 0; i < n; ++i) {
        const Rat& m_ii = sol[i + 1][i];
        if (m_ii == 0) throw Error(Errc::Divergent, "zero diagonal in (I - Phi G)^{-1}");
        c[i] = sol[0][i] * sol[0][i] / m_ii;
    }
    return c;
}

namespace {

long active_count(const ActionProfile& x) {
    long c = 0;
    for (auto v : x) c += v;
    return c;
}

ThresholdGame raise_threshold_above_degree(const ThresholdGame& game, int i) {
    ThresholdGame g = game;
    g.thresholds[i] = game.net.degree(i) + 1;
    return g;
}

}  // namespace

long cascade_number(const ThresholdGame& game, int i) {
    if (i < 0 || i >= game.size()) throw Error(Errc::NotFound, "agent index out of range");
    long before = active_count(maximal_equilibrium(game));
    long after = active_count(maximal_equilibrium(raise_threshold_above_degree(game, i)));
    return before - after;
}

std::vector<int> key_players(const ThresholdGame& game, KeyPlayerMetric metric,
                             const std::optional<LinearQuadraticParams>& lq) {
    const int n = game.size();
    std::vector<int> best;
    if (metric == KeyPlayerMetric::Cascade) {
        long best_score = -1;
        for (int i = 0; i < n; ++i) {
            long s = cascade_number(game, i);
            if (s > best_score) {
                best_score = s;
                best = {i};
            } else if (s == best_score) {
                best.push_back(i);
            }
        }
    } else {
        if (!lq) throw Error(Errc::InvalidParams, "intercentrality metric needs lq parameters");
        lq->validate(n);
        auto c = intercentrality(game.net, lq->phi, lq->a);
        for (int i = 0; i < n; ++i) {
            if (best.empty() || c[i] > c[best.front()])
                best = {i};
            else if (c[i] == c[best.front()])
                best.push_back(i);
        }
    }
    return best;
}

std::vector<int> endogenous_seeds(const ThresholdGame& game) {
    std::vector<int> seeds;
    for (int i = 0; i < game.size(); ++i)
        if (game.thresholds[i] < 0) seeds.push_back(i);
    return seeds;
}

CentralityReport centrality_report(const ThresholdGame& game,
                                   const LinearQuadraticParams& lq) {
    lq.validate(game.size());
    CentralityReport report;
    AdjustedNetwork h = adjust(game);
    auto peel = peeling_values(h.net, {h.shadow});
    peel.pop_back();  // drop the shadow entry
    report.peel = std::move(peel);
    report.bonacich = bonacich(game.net, lq.phi, lq.a);
    report.intercentrality = intercentrality(game.net, lq.phi, lq.a);
    report.cascade_number.resize(game.size());
    for (int i = 0; i < game.size(); ++i) report.cascade_number[i] = cascade_number(game, i);
    return report;
}

PerturbationResult perturb(const ThresholdGame& game, const PerturbationChange& change) {
    const int n = game.size();
    ThresholdGame after = game;
    if (change.kind == PerturbationChange::Kind::Edge) {
        if (change.src < 0 || change.src >= n || change.dst < 0 || change.dst >= n)
            throw Error(Errc::NotFound, "edge endpoint out of range");
        if (change.src == change.dst)
            throw Error(Errc::InvalidParams, "cannot perturb a self-loop");
        Rat w = game.net.weight(change.src, change.dst) + change.delta;
        if (w < 0) throw Error(Errc::InvalidParams, "perturbation makes a weight negative");
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (const auto& [j, wt] : game.net.out_edges(i)) {
                if (i == change.src && j == change.dst) continue;
                edges.push_back({i, j, wt});
            }
        if (w > 0) edges.push_back({change.src, change.dst, w});
        after.net = Network(game.net.labels(), edges);
    } else {
        if (change.src < 0 || change.src >= n)
            throw Error(Errc::NotFound, "agent index out of range");
        after.thresholds[change.src] = game.thresholds[change.src] + change.delta;
    }

    PerturbationResult result;
    result.change = change;
    result.max_before = maximal_equilibrium(game);
    result.min_before = minimal_equilibrium(game);
    result.max_after = maximal_equilibrium(after);
    result.min_after = minimal_equilibrium(after);

    // sign-correct weak monotonicity of both extremal equilibria
    bool upward = (change.kind == PerturbationChange::Kind::Edge) ? change.delta >= 0
                                                                  : change.delta <= 0;
    for (int i = 0; i < n; ++i) {
        bool ok = upward ? (result.max_after[i] >= result.max_before[i] &&
                            result.min_after[i] >= result.min_before[i])
                         : (result.max_after[i] <= result.max_before[i] &&
                            result.min_after[i] <= result.min_before[i]);
        if (!ok)
            throw std::logic_error("comparative statics monotonicity violated");
        if (result.max_after[i] != result.max_before[i] ||
            result.min_after[i] != result.min_before[i])
            result.affected.push_back(i);
    }
    result.perturbed = std::move(after);
    return result;
}

}  // namespace tg
