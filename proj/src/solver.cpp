#include "rydwire/solver.hpp"

#include "rydwire/embedding.hpp"
#include "rydwire/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace rydwire {

namespace {

struct BranchState {
    double best = 0.0;
    bool all_optima = true;
    std::vector<std::uint64_t> optima;
    bool pruned = false;
};

void record(BranchState& st, std::uint64_t mask, double energy,
            double tol = kDegeneracyTol) {
    if (energy < st.best - tol) {
        st.best = energy;
        st.optima.clear();
        st.optima.push_back(mask);
    } else if (energy <= st.best + tol) {
        if (st.all_optima || st.optima.empty()) st.optima.push_back(mask);
    }
}

// Incremental Gray-code energies drift by ~n*2^n ulps; collect generously and
// re-filter candidates with exactly recomputed energies afterwards.
constexpr double kCollectTol = 1e-6;

std::vector<Configuration> masks_to_configs(const std::vector<std::uint64_t>& masks, int n,
                                            double energy) {
    std::vector<Configuration> out;
    out.reserve(masks.size());
    for (auto m : masks) {
        Configuration c;
        c.bits.resize(n);
        for (int i = 0; i < n; ++i) c.bits[i] = (m >> i) & 1;
        c.cost = energy;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Branch-and-bound over independent sets, maximizing selected weight.
// Vertices are visited in descending-weight order; the optimistic bound adds
// every remaining weight.
SolutionSet mwis_branch_and_bound(const std::vector<double>& weights,
                                  const std::vector<std::uint64_t>& nbr, bool all_optima) {
    const int n = static_cast<int>(weights.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return weights[a] > weights[b]; });

    std::vector<double> suffix(n + 1, 0.0);
    for (int k = n - 1; k >= 0; --k) suffix[k] = suffix[k + 1] + weights[order[k]];

    BranchState st;
    st.all_optima = all_optima;
    st.best = 0.0; // empty set
    st.optima.push_back(0);

    auto rec = [&](auto&& self, int k, std::uint64_t mask, std::uint64_t blocked,
                   double energy) -> void {
        if (k == n) {
            record(st, mask, energy);
            return;
        }
        if (energy - suffix[k] > st.best + kDegeneracyTol) {
            st.pruned = true;
            return; // even taking everything left cannot reach the optimum
        }
        const int v = order[k];
        if (!(blocked >> v & 1))
            self(self, k + 1, mask | (1ULL << v), blocked | nbr[v], energy - weights[v]);
        self(self, k + 1, mask, blocked, energy);
    };
    rec(rec, 0, 0, 0, 0.0);

    SolutionSet out;
    out.optimal_energy = st.best;
    out.configurations = masks_to_configs(st.optima, n, st.best);
    out.search_space_size = n >= 64 ? ~0ULL : (1ULL << n);
    out.pruned = st.pruned;
    return out;
}

} // namespace

SolutionSet brute_force_mwis(const MwisGraph& graph, bool enumerate_all_optima,
                             int max_vertices) {
    const int n = graph.size();
    if (n > max_vertices)
        throw size_error("MWIS instance exceeds the solver cap of " +
                         std::to_string(max_vertices) + " vertices");
    std::vector<std::uint64_t> nbr(n, 0);
    for (const auto& [i, j] : graph.edges()) {
        nbr[i] |= 1ULL << j;
        nbr[j] |= 1ULL << i;
    }
    return mwis_branch_and_bound(graph.weights(), nbr, enumerate_all_optima);
}

SolutionSet brute_force_qubo(const QuboProblem& qubo, int max_variables) {
    const int n = qubo.size();
    if (n > max_variables)
        throw size_error("QUBO instance exceeds the solver cap of " +
                         std::to_string(max_variables) + " variables");

    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const auto& [key, j] : qubo.couplings()) {
        adj[key.first].push_back({key.second, j});
        adj[key.second].push_back({key.first, j});
    }

    BranchState st;
    st.best = 0.0;
    st.optima.push_back(0);

    // Gray-code walk: one bit flips per step, energy updated incrementally.
    std::uint64_t state = 0;
    double energy = 0.0;
    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t g = 1; g < total; ++g) {
        const int bit = std::countr_zero(g);
        const std::uint64_t mask = 1ULL << bit;
        double delta = qubo.linear()[bit];
        for (const auto& [other, j] : adj[bit])
            if (state >> other & 1) delta += j;
        if (state & mask)
            energy -= delta;
        else
            energy += delta;
        state ^= mask;
        record(st, state, energy, kCollectTol);
    }

    SolutionSet out;
    out.optimal_energy = st.best;
    // Recompute exactly to avoid drift accumulated along the walk.
    {
        std::vector<std::uint64_t> exact;
        double best = 0.0;
        for (auto m : st.optima) {
            Configuration c;
            c.bits.resize(n);
            for (int i = 0; i < n; ++i) c.bits[i] = (m >> i) & 1;
            const double e = qubo_cost(qubo, c);
            if (e < best - kDegeneracyTol) {
                best = e;
                exact.clear();
                exact.push_back(m);
            } else if (e <= best + kDegeneracyTol) {
                exact.push_back(m);
            }
        }
        out.optimal_energy = best;
        out.configurations = masks_to_configs(exact, n, best);
    }
    out.search_space_size = total;
    out.pruned = false;
    return out;
}

SolutionSet solve_embedded(const EmbeddedInstance& embedding, InteractionModel model,
                           const RydbergParams& params) {
    const MwisGraph graph = embedding.to_mwis_graph();
    const int n = graph.size();

    if (model == InteractionModel::ideal) {
        if (n > 34) throw size_error("ideal-model embedded solve capped at 34 atoms");
        std::vector<std::uint64_t> nbr(n, 0);
        for (const auto& [i, j] : graph.edges()) {
            nbr[i] |= 1ULL << j;
            nbr[j] |= 1ULL << i;
        }
        return mwis_branch_and_bound(graph.weights(), nbr, true);
    }

    // vdW model: soft tails everywhere make blockade pruning unsound, so
    // enumerate all 2^n states (Gray-code, incremental updates).
    if (n > 24) throw size_error("vdw-model embedded solve capped at 24 atoms");
    const double delta0 = params.resolved_delta_scale(embedding.layout.radius,
                                                      graph.max_weight());
    std::vector<double> onsite(n);
    for (int i = 0; i < n; ++i) onsite[i] = graph.weight(i) * delta0;
    std::vector<std::vector<double>> pair(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double r = distance(embedding.layout.at(graph.ids()[i]),
                                      embedding.layout.at(graph.ids()[j]));
            pair[i][j] = pair[j][i] = params.interaction_mhz(r);
        }

    BranchState st;
    st.best = 0.0;
    st.optima.push_back(0);
    std::uint64_t state = 0;
    double energy = 0.0;
    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t g = 1; g < total; ++g) {
        const int bit = std::countr_zero(g);
        double delta = -onsite[bit];
        for (int other = 0; other < n; ++other)
            if (state >> other & 1) delta += pair[bit][other];
        if (state >> bit & 1)
            energy -= delta;
        else
            energy += delta;
        state ^= 1ULL << bit;
        record(st, state, energy, kCollectTol);
    }

    SolutionSet out;
    // Recompute candidate energies exactly.
    double best = 0.0;
    std::vector<std::uint64_t> exact;
    for (auto m : st.optima) {
        double e = 0.0;
        for (int i = 0; i < n; ++i) {
            if (!(m >> i & 1)) continue;
            e -= onsite[i];
            for (int j = i + 1; j < n; ++j)
                if (m >> j & 1) e += pair[i][j];
        }
        if (e < best - kDegeneracyTol) {
            best = e;
            exact.clear();
            exact.push_back(m);
        } else if (e <= best + kDegeneracyTol) {
            exact.push_back(m);
        }
    }
    out.optimal_energy = best;
    out.configurations = masks_to_configs(exact, n, best);
    out.search_space_size = total;
    out.pruned = false;
    return out;
}

} // namespace rydwire
