#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rydwire/errors.hpp"
#include "rydwire/geometry.hpp"
#include "rydwire/graph.hpp"
#include "rydwire/rng.hpp"

#include <cmath>

using namespace rydwire;

namespace {

MwisGraph two_vertex_edge() {
    return MwisGraph({{0, 0.3}, {1, 0.4}}, {{0, 1}}, 1.0);
}

} // namespace

TEST_CASE("mwis_cost basics") {
    MwisGraph single({{0, 0.5}}, {});
    CHECK(mwis_cost(single, Configuration::from_string("1")) == doctest::Approx(-0.5));
    CHECK(mwis_cost(single, Configuration::from_string("0")) == doctest::Approx(0.0));

    MwisGraph g = two_vertex_edge();
    CHECK(mwis_cost(g, Configuration::from_string("11")) == doctest::Approx(0.3));
    CHECK(mwis_cost(g, Configuration::from_string("01")) == doctest::Approx(-0.4));
    CHECK_THROWS_AS(mwis_cost(g, Configuration::from_string("011")), input_error);
}

TEST_CASE("mwis invariants") {
    CHECK_THROWS_AS(MwisGraph({{0, -0.1}}, {}), input_error);
    CHECK_THROWS_AS(MwisGraph({{0, 0.5}, {1, 0.6}}, {{0, 0}}), input_error);
    CHECK_THROWS_AS(MwisGraph({{0, 0.5}}, {}, 0.4), input_error); // U <= max w
    CHECK_THROWS_AS(MwisGraph({{0, 0.5}, {1, 0.6}}, {{0, 2}}), input_error);

    MwisGraph g({{3, 0.2}, {1, 0.7}}, {{1, 3}});
    CHECK(g.penalty() == doctest::Approx(1.9)); // default 1 + sum(w)
    CHECK(g.ids() == std::vector<int>{1, 3});
    CHECK(g.weight(0) == doctest::Approx(0.7));
}

TEST_CASE("IS cost equals negative selected weight") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(8));
        std::vector<std::pair<int, double>> vs;
        for (int i = 0; i < n; ++i) vs.push_back({i, 0.05 + rng.next_double()});
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.next_double() < 0.4) es.push_back({i, j});
        MwisGraph g(vs, es);
        Configuration c;
        c.bits.assign(n, 0);
        // grow a random independent set greedily
        for (int i = 0; i < n; ++i) {
            if (rng.next_double() < 0.5) continue;
            bool free = true;
            for (int j : g.neighbors(i)) free = free && !c.bits[j];
            if (free) c.bits[i] = 1;
        }
        REQUIRE(is_independent_set(g, c));
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            if (c.bits[i]) sum += g.weight(i);
        CHECK(mwis_cost(g, c) == doctest::Approx(-sum).epsilon(1e-12));
    }
}

TEST_CASE("qubo cost and class validation") {
    QuboProblem q({{0, -0.4}, {1, -0.7}}, {{{0, 1}, 0.3}});
    CHECK(qubo_cost(q, Configuration::from_string("00")) == doctest::Approx(0.0));
    CHECK(qubo_cost(q, Configuration::from_string("11")) == doctest::Approx(-0.8));
    CHECK_THROWS_AS(QuboProblem({{0, 0.4}}, {}), unsupported_class_error);
    CHECK_THROWS_AS(QuboProblem({{0, -0.4}, {1, -0.2}}, {{{0, 1}, -0.3}}),
                    unsupported_class_error);
}

TEST_CASE("is_independent_set") {
    MwisGraph g = two_vertex_edge();
    CHECK(is_independent_set(g, Configuration::from_string("00")));
    CHECK(is_independent_set(g, Configuration::from_string("10")));
    CHECK_FALSE(is_independent_set(g, Configuration::from_string("11")));
}

TEST_CASE("blockade radius") {
    RydbergParams p; // defaults: C6 = -3376 GHz um^6, Omega = 1 MHz
    const double rb = blockade_radius(p, 0.0);
    CHECK(rb == doctest::Approx(12.1).epsilon(0.02));

    RydbergParams doubled = p;
    doubled.c6_ghz_um6 *= 2.0;
    CHECK(blockade_radius(doubled, 0.0) ==
          doctest::Approx(rb * std::pow(2.0, 1.0 / 6.0)).epsilon(1e-12));

    // Delta >> Omega limit
    const double big = 4000.0;
    CHECK(blockade_radius(p, big) ==
          doctest::Approx(std::pow(p.abs_c6_mhz_um6() / big, 1.0 / 6.0)).epsilon(1e-4));

    RydbergParams dead = p;
    dead.omega_mhz = 0.0;
    CHECK_THROWS_AS(blockade_radius(dead, 0.0), input_error);

    // monotone: decreasing in |Delta|, increasing in |C6|
    double prev = blockade_radius(p, 0.0);
    for (double d : {0.5, 1.0, 2.0, 8.0}) {
        const double r = blockade_radius(p, d);
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("validate_geometry flags") {
    MwisGraph pairg({{0, 0.5}, {1, 0.5}}, {{0, 1}});
    GeometricLayout lay;
    lay.radius = 8.0;
    lay.positions = {{0, {0.0, 0.0}}, {1, {4.0, 0.0}}}; // 0.5 R apart
    auto rep = validate_geometry(lay, pairg, RydbergParams{}, InteractionModel::ideal);
    CHECK(rep.clean());

    MwisGraph nog({{0, 0.5}, {1, 0.5}}, {});
    auto rep2 = validate_geometry(lay, nog, RydbergParams{}, InteractionModel::ideal);
    CHECK_FALSE(rep2.clean());
    REQUIRE(rep2.unintended_edges.size() == 1);
    CHECK(rep2.unintended_edges[0].separation == doctest::Approx(4.0));

    GeometricLayout missing;
    missing.radius = 8.0;
    missing.positions = {{0, {0.0, 0.0}}};
    CHECK_THROWS_AS(validate_geometry(missing, pairg, RydbergParams{}, InteractionModel::ideal),
                    input_error);
}
