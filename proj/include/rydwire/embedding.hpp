#pragma once

#include "rydwire/gadgets.hpp"
#include "rydwire/geometry.hpp"
#include "rydwire/graph.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace rydwire {

using LogicalProblem = std::variant<MwisGraph, QuboProblem>;

struct AtomRole {
    enum class Kind { logical, ancilla };
    Kind kind = Kind::logical;
    int ref = 0;   // logical: vertex id; ancilla: gadget index
    int index = 0; // ancilla: position within the gadget
};

struct Atom {
    int id = 0;
    double weight = 0.0;
    AtomRole role;
};

// One wired logical structure with explicit ancilla positions (chain order).
// Vertex role order: wire {u,v} = (alpha,beta); triangle {a,b,c} with (a,b)
// the blockaded pair at the chain head and c at the tail; square {a,b,c,d}
// with pair (a,b) at the head and (c,d) at the tail.
struct WireRoute {
    GadgetKind kind = GadgetKind::wire;
    std::vector<int> vertices;
    std::optional<double> coupling; // QUBO J
    std::vector<Vec2> chain;
};

// A crossing inserted where two wires intersect: chain slots (slot, slot+1)
// of each route become the four legs around a fully blockaded diamond.
struct CrossingBlock {
    int route_a = 0;
    int route_b = 0;
    int slot_a = 0;
    int slot_b = 0;
    std::array<Vec2, 4> diamond; // ancilla positions m1..m4
};

// Fully resolved geometric plan: logical positions, wire routes with ancilla
// waypoints, and crossing blocks. Fixtures ship these; the automatic pipeline
// synthesizes them.
struct EmbeddingPlan {
    std::map<int, Vec2> logical_positions;
    double radius_um = 8.0;
    double spacing_um = 6.4; // nominal inter-ancilla spacing used by routing
    std::vector<WireRoute> routes;
    std::vector<CrossingBlock> crossings;
    double margin = 0.1;
};

struct EmbeddedInstance {
    std::vector<Atom> atoms;
    GeometricLayout layout;
    std::vector<WireGadget> gadgets;
    std::vector<std::vector<int>> gadget_atom_ids; // ancilla ids per gadget
    std::map<int, int> logical_map;                // vertex id -> atom id
    std::vector<std::pair<int, int>> edges;        // intended UDG adjacency
    double energy_offset = 0.0;

    int atom_count() const { return static_cast<int>(atoms.size()); }
    MwisGraph to_mwis_graph() const;
    // Geometric adjacency recomputed from the layout (equals `edges` for a
    // valid embedding).
    std::vector<std::pair<int, int>> udg_edges() const;
    std::vector<int> logical_atom_ids() const; // in ascending vertex-id order
};

struct EmbedOptions {
    double margin = 0.1;
    double spacing_ratio = 0.8; // chain spacing as a fraction of R
    double radius_um = 8.0;
    std::uint64_t seed = 1;
    int layout_restarts = 12;
};

// Realizes a fully specified plan: places atoms, builds gadgets, derives the
// intended adjacency, computes the energy offset, and validates the geometry
// under the ideal model (embedding_error when inconsistent).
EmbeddedInstance assemble_embedding(const LogicalProblem& problem, const EmbeddingPlan& plan);

// Compiles a logical problem into a unit-disk embedding. With a plan, simply
// assembles it; otherwise attempts a direct UDG layout (MWIS), classifies
// long-range edges greedily and inserts gadgets, or routes QUBO couplings as
// wires (4-node all-to-all instances use the built-in crossing template).
EmbeddedInstance embed(const LogicalProblem& problem,
                       const std::optional<EmbeddingPlan>& plan = std::nullopt,
                       const EmbedOptions& options = {});

// Sub-bitstring at the logical atom positions, in logical vertex order.
Configuration extract_logical(const EmbeddedInstance& embedding, const Configuration& config);

// Built-in geometric templates (also used by the bundled fixtures).
EmbeddingPlan k4_alltoall_qubo_plan(const QuboProblem& qubo, const EmbedOptions& options = {});
EmbeddingPlan grid_qubo_plan(const QuboProblem& qubo, int columns, const EmbedOptions& options = {});

// Direct unit-disk layout search for a logical graph (spring relaxation with
// hard separation checks). Returns positions on success.
std::optional<std::map<int, Vec2>> try_udg_layout(const MwisGraph& graph, double radius_um,
                                                  std::uint64_t seed, int restarts);

} // namespace rydwire
