#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rydwire/errors.hpp"
#include "rydwire/gadgets.hpp"
#include "rydwire/rng.hpp"
#include "rydwire/solver.hpp"

#include <cmath>
#include <map>

using namespace rydwire;

namespace {

// Independent oracle: minimal cost of the direct (non-delocalized) logical
// structure for a fixed endpoint sector, or nullopt when the sector violates
// a logical edge. Structures: wire = single edge (0,1); triangle = K3;
// square = K4; crossing = edges (0,1) and (2,3).
std::optional<double> direct_sector_cost(const WireGadget& g,
                                         const std::vector<std::uint8_t>& sector) {
    std::vector<std::pair<int, int>> edges;
    switch (g.kind) {
        case GadgetKind::wire:
            edges = {{0, 1}};
            break;
        case GadgetKind::triangle:
            edges = {{0, 1}, {0, 2}, {1, 2}};
            break;
        case GadgetKind::square:
            edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
            break;
        case GadgetKind::crossing:
            edges = {{0, 1}, {2, 3}};
            break;
    }
    for (auto [a, b] : edges)
        if (sector[a] && sector[b]) return std::nullopt;
    double e = 0.0;
    for (std::size_t i = 0; i < sector.size(); ++i)
        if (sector[i]) e -= g.endpoint_weights[i];
    return e;
}

void check_spectrum_preservation(const WireGadget& g) {
    const auto spectrum = gadget_spectrum(g);
    const double offset = gadget_energy_offset(g);
    double max_is = -1e18;       // worst independent-set sector energy
    double best_violating = 1e18; // best edge-violating sector energy
    for (const auto& lvl : spectrum) {
        const auto direct = direct_sector_cost(g, lvl.sector);
        const double rel = lvl.min_energy - offset;
        if (direct) {
            CHECK(rel == doctest::Approx(*direct).epsilon(1e-12));
            max_is = std::max(max_is, rel);
        } else {
            best_violating = std::min(best_violating, rel);
        }
    }
    // Every violating sector must sit strictly above every IS sector.
    if (best_violating < 1e17) CHECK(best_violating > max_is);
}

} // namespace

TEST_CASE("wire construction and offsets") {
    WireGadget g = build_wire(0.7, 0.3, 4, GadgetMode::mwis, std::nullopt, 0.1);
    CHECK(g.ancilla_weight == doctest::Approx(1.1));
    CHECK(gadget_energy_offset(g) == doctest::Approx(-2.2));
    CHECK(g.satisfies_weight_rule());

    CHECK_THROWS_AS(build_wire(0.7, 0.3, 3, GadgetMode::mwis), input_error);
    CHECK_THROWS_AS(build_wire(0.7, 0.3, 4, GadgetMode::qubo, -0.2), unsupported_class_error);

    WireGadget q = build_wire(0.5, 0.4, 6, GadgetMode::qubo, 0.25);
    CHECK(q.ancilla_weight == doctest::Approx(0.25));
}

TEST_CASE("wire spectrum ordering (alpha > beta)") {
    // alpha=0.7, beta=0.3, c=1.1: sector order 10 < 01 < 00 < 11.
    for (int L : {2, 4, 8, 12}) {
        WireGadget g = build_wire(0.7, 0.3, L, GadgetMode::mwis, std::nullopt, 0.1);
        const auto spectrum = gadget_spectrum(g);
        const double off = gadget_energy_offset(g);
        CHECK(sector_level(spectrum, {1, 0}).min_energy - off == doctest::Approx(-0.7));
        CHECK(sector_level(spectrum, {0, 1}).min_energy - off == doctest::Approx(-0.3));
        CHECK(sector_level(spectrum, {0, 0}).min_energy - off == doctest::Approx(0.0));
        CHECK(sector_level(spectrum, {1, 1}).min_energy - off > 0.0);

        // Domain-wall degeneracies.
        CHECK(sector_level(spectrum, {0, 0}).degeneracy == L / 2 + 1);
        CHECK(sector_level(spectrum, {1, 1}).degeneracy == L / 2);
        CHECK(sector_level(spectrum, {1, 0}).degeneracy == 1);
        CHECK(sector_level(spectrum, {0, 1}).degeneracy == 1);
    }
}

TEST_CASE("QUBO wire mimics the two-bit cost exactly") {
    SplitMix64 rng(12345);
    for (int trial = 0; trial < 30; ++trial) {
        const double h1 = 0.05 + rng.next_double();
        const double h2 = 0.05 + rng.next_double();
        const double J = rng.next_double() * 1.5;
        for (int L : {2, 4, 6, 8}) {
            WireGadget g = build_wire(h1, h2, L, GadgetMode::qubo, J);
            const auto spectrum = gadget_spectrum(g);
            const double off = gadget_energy_offset(g);
            CHECK(sector_level(spectrum, {0, 0}).min_energy - off ==
                  doctest::Approx(0.0).epsilon(1e-12));
            CHECK(sector_level(spectrum, {1, 0}).min_energy - off ==
                  doctest::Approx(-h1).epsilon(1e-12));
            CHECK(sector_level(spectrum, {0, 1}).min_energy - off ==
                  doctest::Approx(-h2).epsilon(1e-12));
            CHECK(sector_level(spectrum, {1, 1}).min_energy - off ==
                  doctest::Approx(-h1 - h2 + J).epsilon(1e-12));
        }
    }
}

TEST_CASE("triangle gadget") {
    // Weights of the delocalized triangle in the bundled 10-vertex instance.
    WireGadget g = build_triangle_gadget(0.46, 0.22, 0.22, 4, GadgetMode::mwis);
    CHECK(g.ancilla_weight > 0.68);
    CHECK(g.ancilla_weight == doctest::Approx(0.68 * 1.1));
    check_spectrum_preservation(g);

    WireGadget sym = build_triangle_gadget(0.4, 0.4, 0.4, 6, GadgetMode::mwis);
    CHECK(sym.ancilla_weight > 0.8);
    check_spectrum_preservation(sym);
}

TEST_CASE("square gadget") {
    WireGadget g = build_square_gadget(0.22, 0.51, 0.48, 0.1, 6, GadgetMode::mwis);
    CHECK(g.ancilla_weight > 0.99);
    check_spectrum_preservation(g);

    WireGadget eq = build_square_gadget(0.3, 0.3, 0.3, 0.3, 4, GadgetMode::mwis);
    CHECK(eq.ancilla_weight > 0.6);
    check_spectrum_preservation(eq);
}

TEST_CASE("crossing gadget preserves two independent edges") {
    WireGadget g = build_crossing_gadget(0.4, 0.1, 0.4, 0.1);
    CHECK(g.ancilla_weight > 1.0);
    CHECK(gadget_energy_offset(g) == doctest::Approx(-g.ancilla_weight));
    check_spectrum_preservation(g);

    // Symmetric weights give degenerate minimal logical sectors.
    WireGadget sym = build_crossing_gadget(0.3, 0.3, 0.2, 0.2);
    const auto spectrum = gadget_spectrum(sym);
    const double off = gadget_energy_offset(sym);
    CHECK(sector_level(spectrum, {1, 0, 1, 0}).min_energy - off == doctest::Approx(-0.5));
    CHECK(sector_level(spectrum, {0, 1, 1, 0}).min_energy - off == doctest::Approx(-0.5));
    CHECK(sector_level(spectrum, {1, 0, 0, 1}).min_energy - off == doctest::Approx(-0.5));
    CHECK(sector_level(spectrum, {0, 1, 0, 1}).min_energy - off == doctest::Approx(-0.5));
}

TEST_CASE("crossing ground state excites exactly one ancilla") {
    WireGadget g = build_crossing_gadget(0.4, 0.2, 0.3, 0.1);
    const auto gg = gadget_graph(g);
    const auto sol = brute_force_mwis(gg.graph);
    REQUIRE(sol.configurations.size() == 1);
    int anc = 0;
    for (int idx : gg.ancilla_indices) anc += sol.configurations[0].bits[idx];
    CHECK(anc == 1);
}

TEST_CASE("random gadget spectra preserved (property)") {
    SplitMix64 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        const double a = 0.05 + 0.95 * rng.next_double();
        const double b = 0.05 + 0.95 * rng.next_double();
        const double c = 0.05 + 0.95 * rng.next_double();
        const double d = 0.05 + 0.95 * rng.next_double();
        const int L = 2 * (1 + static_cast<int>(rng.next_below(6))); // 2..12
        check_spectrum_preservation(build_wire(a, b, L, GadgetMode::mwis));
        check_spectrum_preservation(build_triangle_gadget(a, b, c, L, GadgetMode::mwis));
        check_spectrum_preservation(build_square_gadget(a, b, c, d, L, GadgetMode::mwis));
        check_spectrum_preservation(build_crossing_gadget(a, b, c, d));
    }
}
