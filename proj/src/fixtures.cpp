#include "rydwire/fixtures.hpp"

#include "rydwire/errors.hpp"

#include <map>

namespace rydwire {

namespace {

// 10-vertex quasi-UDG MWIS instance. The triangle {0,4,5} and the all-to-all
// cluster {0,1,8,9} need delocalization: one triangle wire (L=4) carries the
// {0,4},{0,5} edges, one square wire (L=6) carries the {0,8},{0,9},{1,8},{1,9}
// edges. 10 logical + 10 ancilla atoms.
Fixture make_fig4() {
    const std::vector<double> w = {0.22, 0.51, 0.36, 0.21, 0.46, 0.22, 0.1, 0.57, 0.48, 0.1};
    std::vector<std::pair<int, double>> vertices;
    for (int i = 0; i < 10; ++i) vertices.push_back({i, w[i]});
    const std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 4}, {0, 5}, {0, 8}, {0, 9}, {1, 8}, {1, 9}, {4, 5}, {8, 9},
        {1, 2}, {2, 3}, {5, 6}, {6, 7}};
    MwisGraph graph(vertices, edges);

    EmbeddingPlan plan;
    const double R = 8.0;
    plan.radius_um = R;
    plan.spacing_um = 0.8 * R;
    plan.margin = 0.1;
    auto P = [R](double x, double y) { return Vec2{x * R, y * R}; };
    plan.logical_positions = {
        {0, P(0.0, 0.0)},  {1, P(0.8, 0.0)},  {2, P(1.6, 0.3)},   {3, P(2.4, 0.6)},
        {4, P(-3.8, 0.8)}, {5, P(-3.8, 0.0)}, {6, P(-4.6, -0.3)}, {7, P(-5.4, -0.6)},
        {8, P(0.0, 5.3)},  {9, P(0.8, 5.3)}};

    // Triangle {0,4,5}: pair (4,5) feeds the chain head, vertex 0 the tail.
    WireRoute tri;
    tri.kind = GadgetKind::triangle;
    tri.vertices = {4, 5, 0};
    tri.chain = {P(-3.15, 0.4), P(-2.35, 0.4), P(-1.55, 0.4), P(-0.75, 0.4)};
    plan.routes.push_back(tri);

    // Square {0,1,8,9}: pair (0,1) at the head, pair (8,9) at the tail.
    WireRoute sq;
    sq.kind = GadgetKind::square;
    sq.vertices = {0, 1, 8, 9};
    sq.chain = {P(0.4, 0.65), P(0.4, 1.45), P(0.4, 2.25),
                P(0.4, 3.05), P(0.4, 3.85), P(0.4, 4.65)};
    plan.routes.push_back(sq);

    return Fixture{"fig4", graph, plan};
}

QuboProblem fig5_qubo(const std::vector<int>& nodes,
                      const std::vector<std::tuple<int, int, double>>& couplings) {
    const std::map<int, double> h = {{0, -0.3}, {1, -0.8}, {2, -0.6}, {3, -0.7},
                                     {4, -1.0}, {5, -0.7}, {6, -0.8}, {7, -0.9}};
    std::vector<std::pair<int, double>> linear;
    for (int v : nodes) linear.push_back({v, h.at(v)});
    std::map<std::pair<int, int>, double> cp;
    for (auto [a, b, j] : couplings) cp[{a, b}] = j;
    return QuboProblem(linear, cp);
}

// Square blocks of the 2x4-grid QUBO (ids row-major, top row 0..3).
Fixture make_fig5(const std::string& name) {
    if (name == "fig5c") {
        QuboProblem q = fig5_qubo({0, 1, 4, 5},
                                  {{0, 1, 0.8}, {0, 4, 0.5}, {1, 5, 0.4}, {4, 5, 0.5}});
        return Fixture{name, q, grid_qubo_plan(q, 2)};
    }
    if (name == "fig5d") {
        QuboProblem q = fig5_qubo({1, 2, 5, 6},
                                  {{1, 2, 0.1}, {1, 5, 0.4}, {2, 6, 0.3}, {5, 6, 0.6}});
        return Fixture{name, q, grid_qubo_plan(q, 2)};
    }
    if (name == "fig5e") {
        QuboProblem q = fig5_qubo({2, 3, 6, 7},
                                  {{2, 3, 0.4}, {2, 6, 0.3}, {3, 7, 0.4}, {6, 7, 1.0}});
        return Fixture{name, q, grid_qubo_plan(q, 2)};
    }
    if (name == "fig5cd") {
        QuboProblem q = fig5_qubo({0, 1, 2, 4, 5, 6},
                                  {{0, 1, 0.8}, {1, 2, 0.1}, {0, 4, 0.5}, {1, 5, 0.4},
                                   {2, 6, 0.3}, {4, 5, 0.5}, {5, 6, 0.6}});
        return Fixture{name, q, grid_qubo_plan(q, 3)};
    }
    // full three-block problem
    QuboProblem q = fig5_qubo({0, 1, 2, 3, 4, 5, 6, 7},
                              {{0, 1, 0.8}, {1, 2, 0.1}, {2, 3, 0.4}, {0, 4, 0.5},
                               {1, 5, 0.4}, {2, 6, 0.3}, {3, 7, 0.4}, {4, 5, 0.5},
                               {5, 6, 0.6}, {6, 7, 1.0}});
    return Fixture{"fig5full", q, grid_qubo_plan(q, 4)};
}

// Fully connected 4-variable QUBO mapped through the crossing template.
Fixture make_fig6() {
    QuboProblem q({{0, -0.4}, {1, -0.3}, {2, -0.375}, {3, -0.25}},
                  {{{0, 1}, 0.275}, {{0, 2}, 0.2}, {{0, 3}, 0.175},
                   {{1, 2}, 0.325}, {{1, 3}, 0.2}, {{2, 3}, 0.225}});
    return Fixture{"fig6", q, k4_alltoall_qubo_plan(q)};
}

} // namespace

std::vector<std::string> fixture_names() {
    return {"fig4", "fig5c", "fig5d", "fig5e", "fig5cd", "fig5full", "fig6"};
}

Fixture get_fixture(const std::string& name) {
    if (name == "fig4") return make_fig4();
    if (name == "fig6") return make_fig6();
    if (name.rfind("fig5", 0) == 0) return make_fig5(name);
    throw input_error("unknown fixture '" + name + "'");
}

} // namespace rydwire
