#pragma once

#include "rydwire/geometry.hpp"
#include "rydwire/graph.hpp"

#include <cstdint>
#include <vector>

namespace rydwire {

struct EmbeddedInstance;

// Exact ground-state set. Configurations achieve optimal_energy within the
// degeneracy tolerance (1e-9), deduplicated and sorted lexicographically.
struct SolutionSet {
    double optimal_energy = 0.0;
    std::vector<Configuration> configurations;
    std::uint64_t search_space_size = 0;
    bool pruned = false;
};

inline constexpr double kDegeneracyTol = 1e-9;

// Exact MWIS minima via branch-and-bound over independent sets. The optimum
// of the penalized cost (U > sum w) always lies on an independent set.
SolutionSet brute_force_mwis(const MwisGraph& graph, bool enumerate_all_optima = true,
                             int max_vertices = 30);

// Exact QUBO minima via exhaustive Gray-code enumeration of all 2^N states.
SolutionSet brute_force_qubo(const QuboProblem& qubo, int max_variables = 30);

// Minima of the diagonal classical energy of an embedded instance.
//   ideal: hard blockade inside R, zero outside; energies are dimensionless
//          (-sum of selected weights), directly comparable to logical costs.
//   vdw:   -sum w_i*Delta_0 n_i + sum V(r_ij) n_i n_j in MHz, tails included.
SolutionSet solve_embedded(const EmbeddedInstance& embedding, InteractionModel model,
                           const RydbergParams& params);

} // namespace rydwire
