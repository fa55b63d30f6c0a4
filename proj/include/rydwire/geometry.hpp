#pragma once

#include "rydwire/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace rydwire {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

double distance(const Vec2& a, const Vec2& b);

// 2-D atom positions in micrometers plus the unit-disk radius R. An edge is
// intended exactly when the separation is strictly below R.
struct GeometricLayout {
    std::map<int, Vec2> positions;
    double radius = 0.0;

    void validate() const;
    const Vec2& at(int id) const;
};

// Unit conventions, used consistently everywhere:
//   - lengths in um, times in us
//   - omega, detunings and interaction strengths in MHz (nu-style, i.e. the
//     values quoted as X/2pi); Hamiltonian evolution applies the 2*pi factor
//   - c6 in GHz*um^6 (signed); magnitude is what enters V(r) = |C6|/r^6
struct RydbergParams {
    double c6_ghz_um6 = -3376.0;
    double omega_mhz = 1.0;
    // Detuning scale Delta_0 (MHz) mapping weight w to detuning w*Delta_0.
    // 0 means "auto": pick the largest scale obeying the 0.9*|C6|/R^6 cap.
    double delta_scale_mhz = 0.0;

    double abs_c6_mhz_um6() const;
    // Van der Waals interaction V(r) in MHz.
    double interaction_mhz(double r_um) const;
    // Largest admissible detuning 0.9*|C6|/R^6 in MHz.
    double detuning_cap_mhz(double radius_um) const;
    // Resolved Delta_0 given the cap and the largest weight present.
    double resolved_delta_scale(double radius_um, double max_weight) const;
};

// r_B = (|C6| / sqrt(Omega^2 + Delta^2))^(1/6).
double blockade_radius(const RydbergParams& params, double detuning_mhz);

enum class InteractionModel { ideal, vdw };

struct PairViolation {
    int a = 0;
    int b = 0;
    double separation = 0.0;
};

struct ValidationReport {
    // Intended edges whose separation is >= R.
    std::vector<PairViolation> missing_edges;
    // Non-edges whose separation is < R.
    std::vector<PairViolation> unintended_edges;
    // Non-edge pairs whose vdW tail exceeds the smallest detuning (vdw model).
    std::vector<PairViolation> tail_violations;
    // Pairs sitting numerically at R (reported as warnings, not edges).
    std::vector<PairViolation> boundary_warnings;
    bool detuning_cap_ok = true;

    bool clean() const {
        return missing_edges.empty() && unintended_edges.empty() && detuning_cap_ok;
    }
    bool clean_vdw() const { return clean() && tail_violations.empty(); }
};

// Checks a layout against the intended adjacency of `graph` (vertex ids must
// all have positions). Under the vdw model, non-edge tails are compared to
// min_weight * Delta_0.
ValidationReport validate_geometry(const GeometricLayout& layout, const MwisGraph& graph,
                                   const RydbergParams& params, InteractionModel model);

} // namespace rydwire
