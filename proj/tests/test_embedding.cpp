#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rydwire/embedding.hpp"
#include "rydwire/errors.hpp"
#include "rydwire/fixtures.hpp"
#include "rydwire/solver.hpp"

#include <algorithm>
#include <set>

using namespace rydwire;

namespace {

// Logical projections of every embedded optimum, deduplicated.
std::set<std::string> projected_optima(const EmbeddedInstance& emb, const SolutionSet& sol) {
    std::set<std::string> out;
    for (const auto& c : sol.configurations) out.insert(extract_logical(emb, c).to_string());
    return out;
}

std::set<std::string> logical_optima_mwis(const MwisGraph& g) {
    std::set<std::string> out;
    for (const auto& c : brute_force_mwis(g).configurations) out.insert(c.to_string());
    return out;
}

std::set<std::string> logical_optima_qubo(const QuboProblem& q) {
    std::set<std::string> out;
    for (const auto& c : brute_force_qubo(q).configurations) out.insert(c.to_string());
    return out;
}

void check_fixture_equivalence(const Fixture& fx) {
    auto emb = embed(fx.problem, fx.plan);
    auto report = validate_geometry(emb.layout, emb.to_mwis_graph(), RydbergParams{},
                                    InteractionModel::ideal);
    CHECK(report.clean());

    auto sol = solve_embedded(emb, InteractionModel::ideal, RydbergParams{});
    double logical_opt = 0.0;
    std::set<std::string> expected;
    if (std::holds_alternative<MwisGraph>(fx.problem)) {
        const auto& g = std::get<MwisGraph>(fx.problem);
        logical_opt = brute_force_mwis(g).optimal_energy;
        expected = logical_optima_mwis(g);
    } else {
        const auto& q = std::get<QuboProblem>(fx.problem);
        logical_opt = brute_force_qubo(q).optimal_energy;
        expected = logical_optima_qubo(q);
    }
    CHECK(sol.optimal_energy ==
          doctest::Approx(logical_opt + emb.energy_offset).epsilon(1e-9));
    CHECK(projected_optima(emb, sol) == expected);
}

} // namespace

TEST_CASE("already-UDG problem embeds identically with zero gadgets") {
    // A 4-cycle is a unit-disk graph.
    MwisGraph g({{0, 0.4}, {1, 0.6}, {2, 0.5}, {3, 0.3}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto emb = embed(g);
    CHECK(emb.atom_count() == 4);
    CHECK(emb.gadgets.empty());
    CHECK(emb.energy_offset == doctest::Approx(0.0));
    auto sol = solve_embedded(emb, InteractionModel::ideal, RydbergParams{});
    CHECK(projected_optima(emb, sol) == logical_optima_mwis(g));
}

TEST_CASE("ring with crossing chords classifies long-range edges") {
    // A 10-cycle folds to satisfy one chord; the second chord then needs a
    // wire (two crossing chords cannot both be geometric).
    std::vector<std::pair<int, double>> vs;
    for (int i = 0; i < 10; ++i) vs.push_back({i, 0.2 + 0.07 * i});
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 10; ++i) es.push_back({i, (i + 1) % 10});
    es.push_back({0, 5});
    es.push_back({2, 7});
    MwisGraph g(vs, es);
    auto emb = embed(g);
    CHECK(emb.gadgets.size() >= 1);
    auto sol = solve_embedded(emb, InteractionModel::ideal, RydbergParams{});
    CHECK(sol.optimal_energy == doctest::Approx(brute_force_mwis(g).optimal_energy +
                                                emb.energy_offset));
    CHECK(projected_optima(emb, sol) == logical_optima_mwis(g));
}

TEST_CASE("a degree-6 star cannot be routed") {
    // Six mutually independent blockade partners cannot surround one atom.
    std::vector<std::pair<int, double>> vs = {{0, 0.9}};
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= 6; ++i) {
        vs.push_back({i, 0.2 + 0.05 * i});
        es.push_back({0, i});
    }
    MwisGraph g(vs, es);
    CHECK_THROWS_AS(embed(g), embedding_error);
}

TEST_CASE("fig4 fixture: 20 atoms, equivalence, offsets") {
    auto fx = get_fixture("fig4");
    auto emb = embed(fx.problem, fx.plan);
    CHECK(emb.atom_count() == 20);
    CHECK(emb.gadgets.size() == 2);
    check_fixture_equivalence(fx);

    // Offset is the sum of per-gadget -L*c/2 terms.
    double expect = 0.0;
    for (const auto& g : emb.gadgets) expect += gadget_energy_offset(g);
    CHECK(emb.energy_offset == doctest::Approx(expect));
}

TEST_CASE("fig5 fixtures embed and match brute force") {
    for (const char* name : {"fig5c", "fig5d", "fig5e", "fig5cd", "fig5full"}) {
        CAPTURE(name);
        check_fixture_equivalence(get_fixture(name));
    }
}

TEST_CASE("fig6 fixture: 28 atoms, six ideal ground states, one QUBO solution") {
    auto fx = get_fixture("fig6");
    auto emb = embed(fx.problem, fx.plan);
    CHECK(emb.atom_count() == 28);

    int n_logical = 0, n_ancilla = 0;
    for (const auto& a : emb.atoms)
        (a.role.kind == AtomRole::Kind::logical ? n_logical : n_ancilla)++;
    CHECK(n_logical == 4);
    CHECK(n_ancilla == 24);

    auto sol = solve_embedded(emb, InteractionModel::ideal, RydbergParams{});
    CHECK(sol.configurations.size() == 6);
    auto projections = projected_optima(emb, sol);
    REQUIRE(projections.size() == 1);
    CHECK(*projections.begin() == "1010");
    check_fixture_equivalence(fx);
}

TEST_CASE("fig6 auto-embedding uses the crossing template") {
    auto fx = get_fixture("fig6");
    auto emb = embed(fx.problem); // no plan given
    CHECK(emb.atom_count() == 28);
}

TEST_CASE("extract_logical") {
    auto fx = get_fixture("fig5c");
    auto emb = embed(fx.problem, fx.plan);
    Configuration zeros;
    zeros.bits.assign(emb.atom_count(), 0);
    CHECK(extract_logical(emb, zeros).to_string() == "0000");
    CHECK_THROWS_AS(extract_logical(emb, Configuration::from_string("01")), input_error);
}

TEST_CASE("mediating a non-edge is rejected") {
    MwisGraph g({{0, 0.5}, {1, 0.6}}, {});
    EmbeddingPlan plan;
    plan.radius_um = 8.0;
    plan.logical_positions = {{0, {0.0, 0.0}}, {1, {19.2, 0.0}}};
    WireRoute r;
    r.kind = GadgetKind::wire;
    r.vertices = {0, 1};
    r.chain = {{6.4, 0.0}, {12.8, 0.0}};
    plan.routes.push_back(r);
    CHECK_THROWS_AS(assemble_embedding(g, plan), embedding_error);
}

TEST_CASE("routing failure reports the offending geometry") {
    // Chain atom far outside blockade range of its neighbour.
    MwisGraph g({{0, 0.5}, {1, 0.6}}, {{0, 1}});
    EmbeddingPlan plan;
    plan.radius_um = 8.0;
    plan.logical_positions = {{0, {0.0, 0.0}}, {1, {40.0, 0.0}}};
    WireRoute r;
    r.kind = GadgetKind::wire;
    r.vertices = {0, 1};
    r.chain = {{6.4, 0.0}, {33.6, 0.0}};
    plan.routes.push_back(r);
    CHECK_THROWS_AS(assemble_embedding(g, plan), embedding_error);
}
