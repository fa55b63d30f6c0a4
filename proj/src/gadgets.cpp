#include "rydwire/gadgets.hpp"

#include "rydwire/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace rydwire {

namespace {

void check_positive(std::initializer_list<double> ws) {
    for (double w : ws)
        if (!(w > 0.0) || !std::isfinite(w)) throw input_error("gadget weights must be positive");
}

void check_length(int length) {
    if (length < 2 || length % 2 != 0)
        throw input_error("wire length must be an even integer >= 2");
}

double mwis_bound(const WireGadget& g) {
    const auto& w = g.endpoint_weights;
    switch (g.kind) {
        case GadgetKind::wire:
            return w[0] + w[1];
        case GadgetKind::triangle:
            return std::max(w[0], w[1]) + w[2];
        case GadgetKind::square:
            return std::max(w[0], w[1]) + std::max(w[2], w[3]);
        case GadgetKind::crossing:
            return w[0] + w[1] + w[2] + w[3];
    }
    return 0.0;
}

} // namespace

bool WireGadget::satisfies_weight_rule() const {
    if (mode == GadgetMode::qubo && kind != GadgetKind::crossing) return ancilla_weight >= 0.0;
    return ancilla_weight > mwis_bound(*this);
}

WireGadget build_wire(double alpha, double beta, int length, GadgetMode mode,
                      std::optional<double> coupling, double margin) {
    check_positive({alpha, beta});
    check_length(length);
    WireGadget g{GadgetKind::wire, mode, {alpha, beta}, length, 0.0};
    if (mode == GadgetMode::qubo) {
        if (!coupling) throw input_error("QUBO wire requires a coupling J");
        if (*coupling < 0.0)
            throw unsupported_class_error("QUBO wire requires J >= 0");
        g.ancilla_weight = *coupling;
    } else {
        if (!(margin > 0.0)) throw input_error("MWIS wire requires margin > 0");
        g.ancilla_weight = (alpha + beta) * (1.0 + margin);
    }
    return g;
}

WireGadget build_triangle_gadget(double alpha, double beta, double gamma, int length,
                                 GadgetMode mode, std::optional<double> coupling, double margin) {
    check_positive({alpha, beta, gamma});
    check_length(length);
    WireGadget g{GadgetKind::triangle, mode, {alpha, beta, gamma}, length, 0.0};
    if (mode == GadgetMode::qubo) {
        if (!coupling) throw input_error("QUBO triangle requires a coupling J");
        if (*coupling < 0.0) throw unsupported_class_error("QUBO triangle requires J >= 0");
        g.ancilla_weight = *coupling;
    } else {
        if (!(margin > 0.0)) throw input_error("MWIS triangle requires margin > 0");
        g.ancilla_weight = (std::max(alpha, beta) + gamma) * (1.0 + margin);
    }
    return g;
}

WireGadget build_square_gadget(double alpha, double beta, double gamma, double delta, int length,
                               GadgetMode mode, std::optional<double> coupling, double margin) {
    check_positive({alpha, beta, gamma, delta});
    check_length(length);
    WireGadget g{GadgetKind::square, mode, {alpha, beta, gamma, delta}, length, 0.0};
    if (mode == GadgetMode::qubo) {
        if (!coupling) throw input_error("QUBO square requires a coupling J");
        if (*coupling < 0.0) throw unsupported_class_error("QUBO square requires J >= 0");
        g.ancilla_weight = *coupling;
    } else {
        if (!(margin > 0.0)) throw input_error("MWIS square requires margin > 0");
        g.ancilla_weight = (std::max(alpha, beta) + std::max(gamma, delta)) * (1.0 + margin);
    }
    return g;
}

WireGadget build_crossing_gadget(double alpha, double beta, double gamma, double delta,
                                 double margin) {
    check_positive({alpha, beta, gamma, delta});
    if (!(margin > 0.0)) throw input_error("crossing gadget requires margin > 0");
    WireGadget g{GadgetKind::crossing, GadgetMode::mwis, {alpha, beta, gamma, delta}, 4, 0.0};
    g.ancilla_weight = (alpha + beta + gamma + delta) * (1.0 + margin);
    return g;
}

double gadget_energy_offset(const WireGadget& g) {
    if (g.kind == GadgetKind::crossing) return -g.ancilla_weight;
    return -0.5 * static_cast<double>(g.length) * g.ancilla_weight;
}

GadgetGraph gadget_graph(const WireGadget& g) {
    const int n_end = static_cast<int>(g.endpoint_weights.size());
    const int n = n_end + g.length;
    std::vector<std::pair<int, double>> vertices;
    vertices.reserve(n);
    for (int i = 0; i < n_end; ++i) vertices.push_back({i, g.endpoint_weights[i]});
    for (int k = 0; k < g.length; ++k) vertices.push_back({n_end + k, g.ancilla_weight});

    std::vector<std::pair<int, int>> edges;
    auto chain = [&](int first_anc, int count) {
        for (int k = 0; k + 1 < count; ++k) edges.push_back({first_anc + k, first_anc + k + 1});
    };
    switch (g.kind) {
        case GadgetKind::wire:
            // alpha - a1 - ... - aL - beta
            edges.push_back({0, 2});
            chain(2, g.length);
            edges.push_back({2 + g.length - 1, 1});
            break;
        case GadgetKind::triangle:
            // alpha,beta (mutually blockaded) - a1 ... aL - gamma
            edges.push_back({0, 1});
            edges.push_back({0, 3});
            edges.push_back({1, 3});
            chain(3, g.length);
            edges.push_back({3 + g.length - 1, 2});
            break;
        case GadgetKind::square:
            // alpha,beta pair - a1 ... aL - gamma,delta pair
            edges.push_back({0, 1});
            edges.push_back({2, 3});
            edges.push_back({0, 4});
            edges.push_back({1, 4});
            chain(4, g.length);
            edges.push_back({4 + g.length - 1, 2});
            edges.push_back({4 + g.length - 1, 3});
            break;
        case GadgetKind::crossing: {
            // Legs in compass order alpha, gamma, beta, delta around a fully
            // blockaded four-ancilla diamond; each ancilla blockades the two
            // legs nearest it. Mediated edges: (alpha,beta) and (gamma,delta).
            const int m1 = 4, m2 = 5, m3 = 6, m4 = 7;
            for (int a = m1; a <= m4; ++a)
                for (int b = a + 1; b <= m4; ++b) edges.push_back({a, b});
            edges.push_back({m1, 0}); // m1 ~ alpha, gamma
            edges.push_back({m1, 2});
            edges.push_back({m2, 2}); // m2 ~ gamma, beta
            edges.push_back({m2, 1});
            edges.push_back({m3, 1}); // m3 ~ beta, delta
            edges.push_back({m3, 3});
            edges.push_back({m4, 3}); // m4 ~ delta, alpha
            edges.push_back({m4, 0});
            break;
        }
    }

    GadgetGraph out{MwisGraph(std::move(vertices), std::move(edges)), {}, {}};
    for (int i = 0; i < n_end; ++i) out.endpoint_indices.push_back(i);
    for (int k = 0; k < g.length; ++k) out.ancilla_indices.push_back(n_end + k);
    return out;
}

namespace {

// Enumerates every independent set of `graph` (n <= 34) and feeds it to `fn`.
template <typename Fn>
void for_each_independent_set(const MwisGraph& graph, Fn&& fn) {
    const int n = graph.size();
    if (n > 34) throw size_error("independent-set enumeration capped at 34 vertices");
    std::vector<std::uint64_t> nbr(n, 0);
    for (const auto& [i, j] : graph.edges()) {
        nbr[i] |= 1ULL << j;
        nbr[j] |= 1ULL << i;
    }
    std::vector<std::uint8_t> bits(n, 0);
    // Depth-first over vertices; `blocked` marks vertices adjacent to the set.
    auto rec = [&](auto&& self, int v, std::uint64_t blocked) -> void {
        if (v == n) {
            fn(bits);
            return;
        }
        bits[v] = 0;
        self(self, v + 1, blocked);
        if (!(blocked >> v & 1)) {
            bits[v] = 1;
            self(self, v + 1, blocked | nbr[v]);
            bits[v] = 0;
        }
    };
    rec(rec, 0, 0);
}

} // namespace

std::vector<SectorLevel> gadget_spectrum(const WireGadget& gadget) {
    constexpr double kTol = 1e-12;
    GadgetGraph gg = gadget_graph(gadget);
    const auto& graph = gg.graph;
    const int n_end = static_cast<int>(gg.endpoint_indices.size());

    std::map<std::vector<std::uint8_t>, SectorLevel> sectors;
    for_each_independent_set(graph, [&](const std::vector<std::uint8_t>& bits) {
        double e = 0.0;
        for (int i = 0; i < graph.size(); ++i)
            if (bits[i]) e -= graph.weight(i);
        std::vector<std::uint8_t> sector(bits.begin(), bits.begin() + n_end);
        auto [it, inserted] = sectors.try_emplace(sector);
        SectorLevel& lvl = it->second;
        if (inserted || e < lvl.min_energy - kTol) {
            lvl.sector = sector;
            lvl.min_energy = e;
            lvl.degeneracy = 1;
            lvl.representative = Configuration(bits);
        } else if (std::abs(e - lvl.min_energy) <= kTol) {
            lvl.degeneracy += 1;
        }
    });

    std::vector<SectorLevel> out;
    out.reserve(sectors.size());
    for (auto& [sector, lvl] : sectors) out.push_back(std::move(lvl));
    return out;
}

const SectorLevel& sector_level(const std::vector<SectorLevel>& spectrum,
                                const std::vector<std::uint8_t>& sector) {
    for (const auto& lvl : spectrum)
        if (lvl.sector == sector) return lvl;
    throw input_error("sector not present in gadget spectrum");
}

} // namespace rydwire
