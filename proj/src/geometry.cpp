#include "rydwire/geometry.hpp"

#include "rydwire/errors.hpp"

#include <cmath>

namespace rydwire {

double distance(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

void GeometricLayout::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw input_error("unit-disk radius must be positive");
    for (const auto& [id, p] : positions) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw input_error("non-finite position for atom " + std::to_string(id));
    }
}

const Vec2& GeometricLayout::at(int id) const {
    auto it = positions.find(id);
    if (it == positions.end())
        throw input_error("missing position for atom " + std::to_string(id));
    return it->second;
}

double RydbergParams::abs_c6_mhz_um6() const { return std::abs(c6_ghz_um6) * 1000.0; }

double RydbergParams::interaction_mhz(double r_um) const {
    const double r2 = r_um * r_um;
    return abs_c6_mhz_um6() / (r2 * r2 * r2);
}

double RydbergParams::detuning_cap_mhz(double radius_um) const {
    return 0.9 * interaction_mhz(radius_um);
}

double RydbergParams::resolved_delta_scale(double radius_um, double max_weight) const {
    if (delta_scale_mhz > 0.0) return delta_scale_mhz;
    if (!(max_weight > 0.0)) throw input_error("max weight must be positive");
    // Sit just inside the cap so the strict inequality holds.
    return 0.999 * detuning_cap_mhz(radius_um) / max_weight;
}

double blockade_radius(const RydbergParams& params, double detuning_mhz) {
    const double f = std::hypot(params.omega_mhz, detuning_mhz);
    if (!(f > 0.0)) throw input_error("blockade radius undefined at Omega = Delta = 0");
    if (!(std::abs(params.c6_ghz_um6) > 0.0)) throw input_error("|C6| must be nonzero");
    return std::pow(params.abs_c6_mhz_um6() / f, 1.0 / 6.0);
}

ValidationReport validate_geometry(const GeometricLayout& layout, const MwisGraph& graph,
                                   const RydbergParams& params, InteractionModel model) {
    layout.validate();
    ValidationReport report;
    const double R = layout.radius;
    const int n = graph.size();
    for (int i = 0; i < n; ++i) layout.at(graph.ids()[i]); // every vertex placed

    constexpr double kBoundaryTol = 1e-9;
    const double delta0 =
        params.resolved_delta_scale(R, graph.max_weight());
    const double min_detuning = graph.min_weight() * delta0;

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double r = distance(layout.at(graph.ids()[i]), layout.at(graph.ids()[j]));
            const bool edge = graph.has_edge(i, j);
            if (std::abs(r - R) < kBoundaryTol) {
                report.boundary_warnings.push_back({graph.ids()[i], graph.ids()[j], r});
            }
            if (edge && r >= R) {
                report.missing_edges.push_back({graph.ids()[i], graph.ids()[j], r});
            } else if (!edge && r < R) {
                report.unintended_edges.push_back({graph.ids()[i], graph.ids()[j], r});
            }
            if (model == InteractionModel::vdw && !edge) {
                if (params.interaction_mhz(r) >= min_detuning)
                    report.tail_violations.push_back({graph.ids()[i], graph.ids()[j], r});
            }
        }
    }
    report.detuning_cap_ok =
        graph.max_weight() * delta0 < params.detuning_cap_mhz(R) + kBoundaryTol;
    return report;
}

} // namespace rydwire
