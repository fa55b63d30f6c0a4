#pragma once

#include "rydwire/embedding.hpp"

#include <string>
#include <vector>

namespace rydwire {

// Bundled problem instances with ready-made embedding plans.
//
//   fig4       10-vertex quasi-unit-disk MWIS (triangle + all-to-all cluster
//              delocalized through two wires; 20 atoms)
//   fig5c/d/e  4-variable square-block QUBOs
//   fig5cd     two-block QUBO (6 variables)
//   fig5full   three-block QUBO (8 variables, 2x4 grid)
//   fig6       fully connected 4-variable QUBO (28 atoms, crossing gadget)
struct Fixture {
    std::string name;
    LogicalProblem problem;
    EmbeddingPlan plan;
};

std::vector<std::string> fixture_names();
Fixture get_fixture(const std::string& name);

} // namespace rydwire
