#pragma once

#include "rydwire/graph.hpp"

#include <optional>
#include <vector>

namespace rydwire {

enum class GadgetKind { wire, triangle, square, crossing };
enum class GadgetMode { mwis, qubo };

// One quantum-wire gadget: endpoint weights, chain length L (ancilla count,
// crossing fixed at 4) and the uniform ancilla weight c.
//
// Weight rules (MWIS mode):
//   wire      c > alpha + beta
//   triangle  c > max(alpha, beta) + gamma
//   square    c > max(alpha, beta) + max(gamma, delta)
//   crossing  c > alpha + beta + gamma + delta
// QUBO mode uses c = J for wire/triangle/square; a crossing keeps the MWIS
// rule over the wire weights threading it.
struct WireGadget {
    GadgetKind kind = GadgetKind::wire;
    GadgetMode mode = GadgetMode::mwis;
    std::vector<double> endpoint_weights;
    int length = 2;
    double ancilla_weight = 0.0;

    // True when the strict MWIS weight inequality holds.
    bool satisfies_weight_rule() const;
};

// margin > 0 sets c = bound * (1 + margin) above the strict inequality.
WireGadget build_wire(double alpha, double beta, int length, GadgetMode mode,
                      std::optional<double> coupling = std::nullopt, double margin = 0.1);
WireGadget build_triangle_gadget(double alpha, double beta, double gamma, int length,
                                 GadgetMode mode, std::optional<double> coupling = std::nullopt,
                                 double margin = 0.1);
WireGadget build_square_gadget(double alpha, double beta, double gamma, double delta, int length,
                               GadgetMode mode, std::optional<double> coupling = std::nullopt,
                               double margin = 0.1);
WireGadget build_crossing_gadget(double alpha, double beta, double gamma, double delta,
                                 double margin = 0.1);

// Constant energy shift the gadget adds to every logical configuration:
// -L*c/2 for chain gadgets; -c for the crossing (one ancilla excited).
double gadget_energy_offset(const WireGadget& gadget);

// The gadget as an explicit blockade graph. Endpoints come first (in
// alpha..delta order), ancillas after. For the crossing, the mediated logical
// edges are (alpha,beta) and (gamma,delta).
struct GadgetGraph {
    MwisGraph graph;
    std::vector<int> endpoint_indices;
    std::vector<int> ancilla_indices;
};
GadgetGraph gadget_graph(const WireGadget& gadget);

// Per logical sector: minimal energy over blockade-respecting configurations,
// number of minimal configurations, and one representative. Sectors with no
// valid configuration (direct-edge violations) are omitted.
struct SectorLevel {
    std::vector<std::uint8_t> sector;
    double min_energy = 0.0;
    int degeneracy = 0;
    Configuration representative;
};
std::vector<SectorLevel> gadget_spectrum(const WireGadget& gadget);

// Lookup of one sector in a spectrum; throws if absent.
const SectorLevel& sector_level(const std::vector<SectorLevel>& spectrum,
                                const std::vector<std::uint8_t>& sector);

} // namespace rydwire
