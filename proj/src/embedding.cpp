#include "rydwire/embedding.hpp"

#include "rydwire/errors.hpp"
#include "rydwire/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace rydwire {

namespace {

struct VertexTable {
    std::vector<int> ids;        // ascending
    std::vector<double> weights; // logical atom weights (|h| for QUBO)
    bool is_qubo = false;
};

VertexTable vertex_table(const LogicalProblem& problem) {
    VertexTable t;
    if (std::holds_alternative<MwisGraph>(problem)) {
        const auto& g = std::get<MwisGraph>(problem);
        t.ids = g.ids();
        t.weights = g.weights();
    } else {
        const auto& q = std::get<QuboProblem>(problem);
        t.ids = q.ids();
        for (double h : q.linear()) t.weights.push_back(-h);
        t.is_qubo = true;
    }
    return t;
}

std::pair<int, int> norm_pair(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

// Pairs a gadget route mediates (as logical vertex-id pairs).
std::vector<std::pair<int, int>> mediated_pairs(const WireRoute& r) {
    const auto& v = r.vertices;
    switch (r.kind) {
        case GadgetKind::wire:
            return {norm_pair(v[0], v[1])};
        case GadgetKind::triangle:
            return {norm_pair(v[0], v[2]), norm_pair(v[1], v[2])};
        case GadgetKind::square:
            return {norm_pair(v[0], v[2]), norm_pair(v[0], v[3]), norm_pair(v[1], v[2]),
                    norm_pair(v[1], v[3])};
        case GadgetKind::crossing:
            break;
    }
    throw input_error("crossing gadgets are attached to wire routes, not routed directly");
}

std::string pair_str(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

MwisGraph EmbeddedInstance::to_mwis_graph() const {
    std::vector<std::pair<int, double>> vertices;
    vertices.reserve(atoms.size());
    for (const auto& a : atoms) vertices.push_back({a.id, a.weight});
    return MwisGraph(vertices, edges);
}

std::vector<std::pair<int, int>> EmbeddedInstance::udg_edges() const {
    std::vector<std::pair<int, int>> out;
    const int n = atom_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (distance(layout.at(atoms[i].id), layout.at(atoms[j].id)) < layout.radius)
                out.push_back({atoms[i].id, atoms[j].id});
    return out;
}

std::vector<int> EmbeddedInstance::logical_atom_ids() const {
    std::vector<int> out;
    out.reserve(logical_map.size());
    for (const auto& [vertex, atom] : logical_map) out.push_back(atom);
    return out; // logical_map is ordered by vertex id
}

Configuration extract_logical(const EmbeddedInstance& embedding, const Configuration& config) {
    if (static_cast<int>(config.size()) != embedding.atom_count())
        throw input_error("configuration length does not match embedded atom count");
    Configuration out;
    for (const auto& [vertex, atom] : embedding.logical_map)
        out.bits.push_back(config.bits[atom]);
    return out;
}

EmbeddedInstance assemble_embedding(const LogicalProblem& problem, const EmbeddingPlan& plan) {
    const VertexTable table = vertex_table(problem);
    const int n_log = static_cast<int>(table.ids.size());

    EmbeddedInstance inst;
    inst.layout.radius = plan.radius_um;

    for (int k = 0; k < n_log; ++k) {
        auto it = plan.logical_positions.find(table.ids[k]);
        if (it == plan.logical_positions.end())
            throw embedding_error("no position for logical vertex " + std::to_string(table.ids[k]));
        inst.atoms.push_back({k, table.weights[k], {AtomRole::Kind::logical, table.ids[k], 0}});
        inst.layout.positions[k] = it->second;
        inst.logical_map[table.ids[k]] = k;
    }

    std::set<std::pair<int, int>> edge_set;
    auto add_edge = [&](int a, int b) { edge_set.insert(norm_pair(a, b)); };

    // Chain adjacencies cut by a crossing: (route index, slot).
    std::set<std::pair<int, int>> cuts;
    for (const auto& cb : plan.crossings) {
        cuts.insert({cb.route_a, cb.slot_a});
        cuts.insert({cb.route_b, cb.slot_b});
    }

    const QuboProblem* qubo =
        table.is_qubo ? &std::get<QuboProblem>(problem) : nullptr;
    const MwisGraph* mwis =
        table.is_qubo ? nullptr : &std::get<MwisGraph>(problem);

    std::map<std::pair<int, int>, double> coupling_lookup; // by vertex id
    std::set<std::pair<int, int>> couplings_covered;
    if (qubo) {
        for (const auto& [key, j] : qubo->couplings())
            coupling_lookup[norm_pair(qubo->ids()[key.first], qubo->ids()[key.second])] = j;
    }

    std::vector<std::vector<int>> route_atom_ids(plan.routes.size());
    int next_id = n_log;

    for (std::size_t ri = 0; ri < plan.routes.size(); ++ri) {
        const WireRoute& route = plan.routes[ri];
        const int L = static_cast<int>(route.chain.size());
        if (L < 2 || L % 2 != 0)
            throw embedding_error("route " + std::to_string(ri) + " needs an even chain >= 2");

        std::vector<int> vidx;
        for (int vid : route.vertices) {
            auto it = inst.logical_map.find(vid);
            if (it == inst.logical_map.end())
                throw embedding_error("route references unknown vertex " + std::to_string(vid));
            vidx.push_back(it->second);
        }

        WireGadget gadget;
        const GadgetMode mode = table.is_qubo ? GadgetMode::qubo : GadgetMode::mwis;
        auto weight_of = [&](int k) { return table.weights[vidx[k]]; };
        std::optional<double> J = route.coupling;
        if (qubo && !J) {
            // Wire couplings come from the problem itself.
            if (route.kind == GadgetKind::wire) {
                auto key = norm_pair(route.vertices[0], route.vertices[1]);
                auto it = coupling_lookup.find(key);
                if (it == coupling_lookup.end())
                    throw embedding_error("no QUBO coupling for wired pair " +
                                          pair_str(key.first, key.second));
                J = it->second;
            } else {
                throw embedding_error("QUBO triangle/square routes need an explicit uniform J");
            }
        }
        switch (route.kind) {
            case GadgetKind::wire:
                if (route.vertices.size() != 2) throw embedding_error("wire route needs 2 vertices");
                gadget = build_wire(weight_of(0), weight_of(1), L, mode, J, plan.margin);
                break;
            case GadgetKind::triangle:
                if (route.vertices.size() != 3)
                    throw embedding_error("triangle route needs 3 vertices");
                gadget = build_triangle_gadget(weight_of(0), weight_of(1), weight_of(2), L, mode, J,
                                               plan.margin);
                break;
            case GadgetKind::square:
                if (route.vertices.size() != 4)
                    throw embedding_error("square route needs 4 vertices");
                gadget = build_square_gadget(weight_of(0), weight_of(1), weight_of(2), weight_of(3),
                                             L, mode, J, plan.margin);
                break;
            case GadgetKind::crossing:
                throw embedding_error("crossing gadgets are described by crossing blocks");
        }

        const int gadget_index = static_cast<int>(inst.gadgets.size());
        std::vector<int>& chain_ids = route_atom_ids[ri];
        for (int k = 0; k < L; ++k) {
            const int id = next_id++;
            chain_ids.push_back(id);
            inst.atoms.push_back(
                {id, gadget.ancilla_weight, {AtomRole::Kind::ancilla, gadget_index, k}});
            inst.layout.positions[id] = route.chain[k];
        }
        for (int k = 0; k + 1 < L; ++k)
            if (!cuts.count({static_cast<int>(ri), k})) add_edge(chain_ids[k], chain_ids[k + 1]);

        // Endpoint attachments and (for pair gadgets) the direct pair edges.
        switch (route.kind) {
            case GadgetKind::wire:
                add_edge(vidx[0], chain_ids.front());
                add_edge(vidx[1], chain_ids.back());
                break;
            case GadgetKind::triangle:
                add_edge(vidx[0], chain_ids.front());
                add_edge(vidx[1], chain_ids.front());
                add_edge(vidx[2], chain_ids.back());
                add_edge(vidx[0], vidx[1]);
                break;
            case GadgetKind::square:
                add_edge(vidx[0], chain_ids.front());
                add_edge(vidx[1], chain_ids.front());
                add_edge(vidx[2], chain_ids.back());
                add_edge(vidx[3], chain_ids.back());
                add_edge(vidx[0], vidx[1]);
                add_edge(vidx[2], vidx[3]);
                break;
            default:
                break;
        }

        if (qubo) {
            for (auto [a, b] : mediated_pairs(route)) {
                if (!couplings_covered.insert(norm_pair(a, b)).second)
                    throw embedding_error("QUBO coupling " + pair_str(a, b) + " wired twice");
            }
        }
        inst.gadgets.push_back(gadget);
        inst.gadget_atom_ids.push_back(chain_ids);
    }

    // Crossing blocks: four-ancilla diamond, legs in compass order
    // (A1, B1, A2, B2); ancilla m_i blockades its two nearest legs.
    for (const auto& cb : plan.crossings) {
        if (cb.route_a < 0 || cb.route_a >= static_cast<int>(plan.routes.size()) ||
            cb.route_b < 0 || cb.route_b >= static_cast<int>(plan.routes.size()))
            throw embedding_error("crossing block references an unknown route");
        const auto& ids_a = route_atom_ids[cb.route_a];
        const auto& ids_b = route_atom_ids[cb.route_b];
        if (cb.slot_a + 1 >= static_cast<int>(ids_a.size()) ||
            cb.slot_b + 1 >= static_cast<int>(ids_b.size()))
            throw embedding_error("crossing block slots out of range");
        const int legA1 = ids_a[cb.slot_a], legA2 = ids_a[cb.slot_a + 1];
        const int legB1 = ids_b[cb.slot_b], legB2 = ids_b[cb.slot_b + 1];
        const double ca = inst.gadgets[cb.route_a].ancilla_weight;
        const double cbw = inst.gadgets[cb.route_b].ancilla_weight;

        WireGadget cross{GadgetKind::crossing, GadgetMode::mwis, {ca, ca, cbw, cbw}, 4, 0.0};
        cross.ancilla_weight = 2.0 * (ca + cbw) * (1.0 + plan.margin);

        const int gadget_index = static_cast<int>(inst.gadgets.size());
        std::vector<int> diamond_ids;
        for (int k = 0; k < 4; ++k) {
            const int id = next_id++;
            diamond_ids.push_back(id);
            inst.atoms.push_back(
                {id, cross.ancilla_weight, {AtomRole::Kind::ancilla, gadget_index, k}});
            inst.layout.positions[id] = cb.diamond[k];
        }
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) add_edge(diamond_ids[a], diamond_ids[b]);
        add_edge(diamond_ids[0], legA1);
        add_edge(diamond_ids[0], legB1);
        add_edge(diamond_ids[1], legB1);
        add_edge(diamond_ids[1], legA2);
        add_edge(diamond_ids[2], legA2);
        add_edge(diamond_ids[2], legB2);
        add_edge(diamond_ids[3], legB2);
        add_edge(diamond_ids[3], legA1);

        inst.gadgets.push_back(cross);
        inst.gadget_atom_ids.push_back(diamond_ids);
    }

    // Logical direct edges (MWIS): everything not mediated by a gadget.
    if (mwis) {
        std::set<std::pair<int, int>> mediated;
        for (const auto& route : plan.routes)
            for (auto p : mediated_pairs(route)) {
                if (!mwis->has_edge(mwis->index_of(p.first), mwis->index_of(p.second)))
                    throw embedding_error("route mediates non-edge " +
                                          pair_str(p.first, p.second));
                if (!mediated.insert(p).second)
                    throw embedding_error("edge " + pair_str(p.first, p.second) +
                                          " mediated twice");
            }
        for (const auto& [i, j] : mwis->edges()) {
            auto p = norm_pair(mwis->ids()[i], mwis->ids()[j]);
            if (!mediated.count(p)) add_edge(inst.logical_map[p.first], inst.logical_map[p.second]);
        }
    } else {
        for (const auto& [key, j] : qubo->couplings()) {
            auto p = norm_pair(qubo->ids()[key.first], qubo->ids()[key.second]);
            if (!couplings_covered.count(p))
                throw embedding_error("QUBO coupling " + pair_str(p.first, p.second) +
                                      " is not wired");
        }
    }

    inst.edges.assign(edge_set.begin(), edge_set.end());
    inst.energy_offset = 0.0;
    for (const auto& g : inst.gadgets) inst.energy_offset += gadget_energy_offset(g);

    const auto report = validate_geometry(inst.layout, inst.to_mwis_graph(), RydbergParams{},
                                          InteractionModel::ideal);
    if (!report.clean()) {
        std::ostringstream msg;
        msg << "embedding violates unit-disk constraints:";
        for (const auto& v : report.missing_edges)
            msg << " missing-edge " << pair_str(v.a, v.b) << " r=" << v.separation;
        for (const auto& v : report.unintended_edges)
            msg << " unintended-edge " << pair_str(v.a, v.b) << " r=" << v.separation;
        throw embedding_error(msg.str());
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Layout search
// ---------------------------------------------------------------------------

namespace {

constexpr double kEdgeTarget = 0.80;  // fraction of R
constexpr double kEdgeMax = 0.95;
constexpr double kNonEdgeMin = 1.08;

bool layout_valid(const std::vector<Vec2>& pos, const MwisGraph& g, double R) {
    const int n = g.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double r = distance(pos[i], pos[j]);
            if (g.has_edge(i, j)) {
                if (r > kEdgeMax * R) return false;
            } else if (r < kNonEdgeMin * R) {
                return false;
            }
        }
    return true;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    double t = len2 > 0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

// Spring relaxation. Direct edges pull toward 0.8 R, everything else repels
// below the clearance band. `wire_pairs` are kept at wire-able separation and
// their connecting corridors are swept free of other vertices.
std::vector<Vec2> spring_relax(const MwisGraph& g, double R, SplitMix64& rng, int iterations,
                               const std::vector<std::pair<int, int>>& wire_pairs = {}) {
    const int n = g.size();
    std::vector<Vec2> pos(n);
    const double box = std::sqrt(static_cast<double>(n)) * 1.4 * R;
    for (auto& p : pos) p = {rng.next_double() * box, rng.next_double() * box};

    for (int it = 0; it < iterations; ++it) {
        const double step = 0.25 * (1.0 - 0.8 * it / iterations);
        std::vector<Vec2> delta(n, {0.0, 0.0});
        std::set<std::pair<int, int>> wires(wire_pairs.begin(), wire_pairs.end());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double dx = pos[j].x - pos[i].x;
                double dy = pos[j].y - pos[i].y;
                double r = std::hypot(dx, dy);
                if (r < 1e-9) {
                    dx = 1e-3 * (1 + i);
                    dy = 1e-3 * (1 + j);
                    r = std::hypot(dx, dy);
                }
                double move = 0.0;
                if (g.has_edge(i, j)) {
                    move = (r - kEdgeTarget * R); // pull toward the target length
                } else if (wires.count({i, j})) {
                    if (r < 2.3 * R)
                        move = (r - 2.3 * R);
                    else if (r > 4.5 * R)
                        move = (r - 4.5 * R);
                } else if (r < kNonEdgeMin * 1.1 * R) {
                    move = (r - kNonEdgeMin * 1.1 * R); // push apart
                }
                const double f = 0.5 * move / r;
                delta[i].x += f * dx;
                delta[i].y += f * dy;
                delta[j].x -= f * dx;
                delta[j].y -= f * dy;
            }
        // Sweep wire corridors clear.
        for (auto [a, b] : wire_pairs) {
            for (int v = 0; v < n; ++v) {
                if (v == a || v == b) continue;
                const double d = point_segment_distance(pos[v], pos[a], pos[b]);
                if (d < 1.35 * R && d > 1e-9) {
                    // push v directly away from the segment midpoint
                    const Vec2 mid{0.5 * (pos[a].x + pos[b].x), 0.5 * (pos[a].y + pos[b].y)};
                    double dx = pos[v].x - mid.x, dy = pos[v].y - mid.y;
                    const double rr = std::max(std::hypot(dx, dy), 1e-6);
                    const double f = 0.4 * (1.35 * R - d) / rr;
                    delta[v].x += f * dx;
                    delta[v].y += f * dy;
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            pos[i].x += step * delta[i].x;
            pos[i].y += step * delta[i].y;
        }
    }
    return pos;
}

} // namespace

std::optional<std::map<int, Vec2>> try_udg_layout(const MwisGraph& graph, double radius_um,
                                                  std::uint64_t seed, int restarts) {
    for (int attempt = 0; attempt < restarts; ++attempt) {
        SplitMix64 rng = substream(seed, attempt);
        auto pos = spring_relax(graph, radius_um, rng, 600);
        if (layout_valid(pos, graph, radius_um)) {
            std::map<int, Vec2> out;
            for (int i = 0; i < graph.size(); ++i) out[graph.ids()[i]] = pos[i];
            return out;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Automatic pipelines
// ---------------------------------------------------------------------------

namespace {

// Even chain length whose uniform hop over `hops = L + extra` segments lands
// nearest the preferred spacing while staying inside (0.55R, 0.95R).
int pick_even_chain(double span, double R, double preferred, int extra_hops) {
    int best = -1;
    double best_score = 1e18;
    for (int L = 2; L <= 64; L += 2) {
        const double hop = span / (L + extra_hops);
        if (hop <= 0.55 * R || hop >= 0.95 * R) continue;
        const double score = std::abs(hop - preferred);
        if (score < best_score) {
            best_score = score;
            best = L;
        }
    }
    if (best < 0)
        throw embedding_error("no even chain length fits a span of " + std::to_string(span));
    return best;
}

std::vector<Vec2> points_between(const Vec2& a, const Vec2& b, int count) {
    std::vector<Vec2> out;
    for (int k = 1; k <= count; ++k) {
        const double t = static_cast<double>(k) / (count + 1);
        out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
    return out;
}

// Chain positions for a route, searching straight and bent corridors.
// `attachments` lists (position, chain index) pairs exempt from clearance
// (index -1 = last atom). Throws embedding_error when no corridor fits.
std::vector<Vec2> route_polyline(const Vec2& head, const Vec2& tail, int extra_hops, double R,
                                 double spacing, const std::vector<Vec2>& obstacles,
                                 const std::vector<std::vector<Vec2>>& placed_chains,
                                 std::vector<std::pair<Vec2, int>> attachments) {
    const double dx = tail.x - head.x, dy = tail.y - head.y;
    const double span = std::hypot(dx, dy);
    const Vec2 mid{0.5 * (head.x + tail.x), 0.5 * (head.y + tail.y)};
    const Vec2 nrm{-dy / std::max(span, 1e-9), dx / std::max(span, 1e-9)};

    for (double off : {0.0, 1.2, -1.2, 1.8, -1.8, 2.4, -2.4, 3.0, -3.0, 3.6, -3.6}) {
        std::vector<Vec2> way = {head};
        if (off != 0.0) way.push_back({mid.x + off * R * nrm.x, mid.y + off * R * nrm.y});
        way.push_back(tail);
        double len = 0.0;
        for (std::size_t s = 0; s + 1 < way.size(); ++s) len += distance(way[s], way[s + 1]);

        int L = 0;
        try {
            L = pick_even_chain(len, R, spacing, extra_hops);
        } catch (const embedding_error&) {
            continue;
        }

        // Sample the chain along the polyline by arclength. Which parameter
        // grid applies depends on whether the anchors are chain atoms.
        std::vector<Vec2> chain;
        const int hops = L + extra_hops;
        auto at_arclength = [&](double target) {
            double acc = 0.0;
            for (std::size_t s = 0; s + 1 < way.size(); ++s) {
                const double seg = distance(way[s], way[s + 1]);
                if (acc + seg >= target - 1e-12) {
                    const double t = (target - acc) / seg;
                    return Vec2{way[s].x + t * (way[s + 1].x - way[s].x),
                                way[s].y + t * (way[s + 1].y - way[s].y)};
                }
                acc += seg;
            }
            return way.back();
        };
        for (int k = 0; k < L; ++k) {
            const int step = (extra_hops == 1) ? k + 1 : k; // head is an atom unless extra==1
            chain.push_back(at_arclength(len * step / hops));
        }

        auto exempt = [&](const Vec2& o, int k) {
            for (const auto& [p, idx] : attachments) {
                const int ai = idx < 0 ? L - 1 : idx;
                if (ai == k && distance(p, o) < 1e-9) return true;
            }
            return false;
        };
        bool ok = true;
        for (int k = 0; k < L && ok; ++k) {
            for (const auto& o : obstacles) {
                if (exempt(o, k)) continue;
                if (distance(chain[k], o) < 1.12 * R) {
                    ok = false;
                    break;
                }
            }
            for (int m = k + 2; m < L && ok; ++m)
                if (distance(chain[k], chain[m]) < 1.05 * R) ok = false;
            for (const auto& other : placed_chains)
                for (const auto& q : other)
                    if (distance(chain[k], q) < 1.15 * R) {
                        ok = false;
                        break;
                    }
        }
        if (ok) return chain;
    }
    throw embedding_error("could not route a clear corridor for a wire gadget");
}

// Anchor adjacent to both members of a blockaded pair, biased toward `toward`.
Vec2 pair_anchor(const Vec2& a, const Vec2& b, const Vec2& toward, double R) {
    const Vec2 mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    const double half = 0.5 * distance(a, b);
    const double reach = 0.80 * R;
    const double h = std::sqrt(std::max(reach * reach - half * half, 0.01 * R * R));
    double nx = -(b.y - a.y), ny = b.x - a.x;
    const double nn = std::hypot(nx, ny);
    nx /= nn;
    ny /= nn;
    Vec2 c1{mid.x + h * nx, mid.y + h * ny};
    Vec2 c2{mid.x - h * nx, mid.y - h * ny};
    return distance(c1, toward) < distance(c2, toward) ? c1 : c2;
}

// Moves chain atoms until intended adjacency matches geometry; logical atoms
// stay pinned. The final assembly call reports any remaining violations.
void repair_chains(EmbeddingPlan& plan, const LogicalProblem& problem) {
    const VertexTable table = vertex_table(problem);
    const int n_log = static_cast<int>(table.ids.size());
    const double R = plan.radius_um;

    for (int pass = 0; pass < 600; ++pass) {
        try {
            assemble_embedding(problem, plan);
            return; // clean
        } catch (const embedding_error&) {
        }

        // Global atom index: logical atoms first, then chains route by route.
        std::vector<Vec2> all;
        std::vector<Vec2*> slots; // movable chain atoms, global index n_log+...
        std::map<int, int> vid_to_idx;
        for (int k = 0; k < n_log; ++k) {
            vid_to_idx[table.ids[k]] = k;
            all.push_back(plan.logical_positions.at(table.ids[k]));
        }
        std::set<std::pair<int, int>> intended;
        auto link = [&](int a, int b) { intended.insert(norm_pair(a, b)); };
        for (auto& route : plan.routes) {
            const int first = static_cast<int>(all.size());
            for (auto& p : route.chain) {
                slots.push_back(&p);
                all.push_back(p);
            }
            const int last = static_cast<int>(all.size()) - 1;
            for (int k = first; k < last; ++k) link(k, k + 1);
            switch (route.kind) {
                case GadgetKind::wire:
                    link(vid_to_idx[route.vertices[0]], first);
                    link(vid_to_idx[route.vertices[1]], last);
                    break;
                case GadgetKind::triangle:
                    link(vid_to_idx[route.vertices[0]], first);
                    link(vid_to_idx[route.vertices[1]], first);
                    link(vid_to_idx[route.vertices[2]], last);
                    break;
                case GadgetKind::square:
                    link(vid_to_idx[route.vertices[0]], first);
                    link(vid_to_idx[route.vertices[1]], first);
                    link(vid_to_idx[route.vertices[2]], last);
                    link(vid_to_idx[route.vertices[3]], last);
                    break;
                default:
                    break;
            }
        }
        // Direct logical edges participate as fixed obstacles only.

        for (std::size_t s = 0; s < slots.size(); ++s) {
            const int gi = n_log + static_cast<int>(s);
            Vec2& p = *slots[s];
            Vec2 shift{0, 0};
            for (std::size_t t = 0; t < all.size(); ++t) {
                if (static_cast<int>(t) == gi) continue;
                const double r = distance(p, all[t]);
                if (r < 1e-9) {
                    shift.x += 0.01 * R;
                    continue;
                }
                const bool linked = intended.count(norm_pair(gi, static_cast<int>(t))) > 0;
                double f = 0.0;
                if (linked && r > 0.90 * R)
                    f = -0.30 * (r - 0.90 * R) / r; // pull back inside
                else if (!linked && r < 1.10 * R)
                    f = 0.30 * (1.10 * R - r) / r; // push out
                shift.x += f * (p.x - all[t].x);
                shift.y += f * (p.y - all[t].y);
            }
            p.x += shift.x;
            p.y += shift.y;
        }
    }
    assemble_embedding(problem, plan); // propagate diagnostics
}

EmbeddedInstance embed_mwis_auto(const MwisGraph& graph, const EmbedOptions& opt) {
    const double R = opt.radius_um;

    if (auto pos = try_udg_layout(graph, R, opt.seed, opt.layout_restarts)) {
        EmbeddingPlan plan;
        plan.logical_positions = *pos;
        plan.radius_um = R;
        plan.margin = opt.margin;
        return assemble_embedding(graph, plan);
    }

    // Greedy long-range classification: repeatedly relax, then declare the
    // most stretched required edge long-range until the rest embeds.
    std::set<std::pair<int, int>> longrange; // internal index pairs
    std::vector<Vec2> pos;
    const int n = graph.size();
    bool ok = false;
    for (int round = 0; round <= static_cast<int>(graph.edges().size()); ++round) {
        std::vector<std::pair<int, double>> vertices;
        for (int i = 0; i < n; ++i) vertices.push_back({graph.ids()[i], graph.weight(i)});
        std::vector<std::pair<int, int>> direct;
        for (const auto& [i, j] : graph.edges())
            if (!longrange.count({i, j})) direct.push_back({graph.ids()[i], graph.ids()[j]});
        MwisGraph reduced(vertices, direct);

        std::vector<std::pair<int, int>> wire_pairs(longrange.begin(), longrange.end());
        bool valid = false;
        for (int attempt = 0; attempt < opt.layout_restarts && !valid; ++attempt) {
            SplitMix64 rng = substream(opt.seed + 1000 + round, attempt);
            pos = spring_relax(reduced, R, rng, 800, wire_pairs);
            // Long-range pairs must separate into wire-able spans; corridors
            // are found later by the router (straight or bent).
            valid = layout_valid(pos, reduced, R);
            for (auto [i, j] : longrange) {
                const double r = distance(pos[i], pos[j]);
                valid = valid && r >= 2.0 * R && r <= 5.0 * R;
            }
        }
        if (valid) {
            ok = true;
            break;
        }
        // Mark the most stretched still-direct edge as long-range.
        double worst = -1.0;
        std::pair<int, int> worst_edge{-1, -1};
        for (const auto& [i, j] : graph.edges()) {
            if (longrange.count({i, j})) continue;
            const double r = distance(pos[i], pos[j]);
            if (r > worst) {
                worst = r;
                worst_edge = {i, j};
            }
        }
        if (worst_edge.first < 0) break;
        longrange.insert(worst_edge);
    }
    if (!ok || longrange.empty())
        throw embedding_error("could not find a unit-disk layout for the logical graph");

    EmbeddingPlan plan;
    plan.radius_um = R;
    plan.margin = opt.margin;
    plan.spacing_um = opt.spacing_ratio * R;
    for (int i = 0; i < n; ++i) plan.logical_positions[graph.ids()[i]] = pos[i];

    // Group long-range edges into gadgets: K4 splits, then triangles, then
    // plain wires.
    std::set<std::pair<int, int>> remaining = longrange;
    auto is_direct = [&](int i, int j) {
        return graph.has_edge(i, j) && !longrange.count(norm_pair(i, j));
    };
    auto take = [&](int i, int j) { remaining.erase(norm_pair(i, j)); };

    // Square gadgets: direct pairs (a,b) and (c,d) with all four cross pairs
    // long-range.
    for (const auto& [a, b] : graph.edges()) {
        if (!is_direct(a, b)) continue;
        for (const auto& [c, d] : graph.edges()) {
            if (std::max(a, b) >= std::min(c, d)) continue; // ordered, disjoint
            if (!is_direct(c, d)) continue;
            const bool all_lr = remaining.count(norm_pair(a, c)) &&
                                remaining.count(norm_pair(a, d)) &&
                                remaining.count(norm_pair(b, c)) && remaining.count(norm_pair(b, d));
            if (!all_lr) continue;
            take(a, c);
            take(a, d);
            take(b, c);
            take(b, d);
            WireRoute route;
            route.kind = GadgetKind::square;
            route.vertices = {graph.ids()[a], graph.ids()[b], graph.ids()[c], graph.ids()[d]};
            plan.routes.push_back(route);
        }
    }
    // Triangle gadgets: direct pair (a,b) with (a,c) and (b,c) long-range.
    for (const auto& [a, b] : graph.edges()) {
        if (!is_direct(a, b)) continue;
        for (int c = 0; c < n; ++c) {
            if (c == a || c == b) continue;
            if (remaining.count(norm_pair(a, c)) && remaining.count(norm_pair(b, c))) {
                take(a, c);
                take(b, c);
                WireRoute route;
                route.kind = GadgetKind::triangle;
                route.vertices = {graph.ids()[a], graph.ids()[b], graph.ids()[c]};
                plan.routes.push_back(route);
            }
        }
    }
    for (auto [i, j] : remaining) {
        WireRoute route;
        route.kind = GadgetKind::wire;
        route.vertices = {graph.ids()[i], graph.ids()[j]};
        plan.routes.push_back(route);
    }

    // Route chains between anchors: straight when the corridor is clear,
    // otherwise bent around obstacles via a perpendicular waypoint.
    std::vector<Vec2> obstacles = pos; // logical atoms
    std::vector<std::vector<Vec2>> placed_chains;
    for (auto& route : plan.routes) {
        const auto vpos = [&](int k) { return plan.logical_positions.at(route.vertices[k]); };
        Vec2 head, tail;
        int extra_hops = 0;
        std::vector<std::pair<Vec2, int>> attachments;
        switch (route.kind) {
            case GadgetKind::wire:
                head = vpos(0);
                tail = vpos(1);
                extra_hops = 1; // u -> c1 ... cL -> v spans L+1 hops
                attachments = {{vpos(0), 0}, {vpos(1), -1}};
                break;
            case GadgetKind::triangle:
                head = pair_anchor(vpos(0), vpos(1), vpos(2), R);
                tail = vpos(2);
                extra_hops = 0; // c1 sits at the anchor itself
                attachments = {{vpos(0), 0}, {vpos(1), 0}, {vpos(2), -1}};
                break;
            case GadgetKind::square:
                head = pair_anchor(vpos(0), vpos(1), vpos(2), R);
                tail = pair_anchor(vpos(2), vpos(3), vpos(0), R);
                extra_hops = -1; // both anchors are chain atoms
                attachments = {{vpos(0), 0}, {vpos(1), 0}, {vpos(2), -1}, {vpos(3), -1}};
                break;
            default:
                continue;
        }
        route.chain = route_polyline(head, tail, extra_hops, R, plan.spacing_um, obstacles,
                                     placed_chains, attachments);
        placed_chains.push_back(route.chain);
    }

    repair_chains(plan, graph);
    return assemble_embedding(graph, plan);
}

bool segments_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    auto orient = [](const Vec2& p, const Vec2& q, const Vec2& r) {
        const double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    };
    return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

EmbeddedInstance embed_qubo_auto(const QuboProblem& qubo, const EmbedOptions& opt) {
    const int n = qubo.size();
    // Fully connected four-variable instances use the crossing template.
    if (n == 4 && qubo.couplings().size() == 6)
        return assemble_embedding(qubo, k4_alltoall_qubo_plan(qubo, opt));

    const double R = opt.radius_um;
    // Logical nodes never blockade each other; couplings become wires, so
    // coupled pairs aim for a comfortable wire span.
    std::vector<std::pair<int, double>> vertices;
    for (int i = 0; i < n; ++i) vertices.push_back({qubo.ids()[i], 1.0});
    std::vector<std::pair<int, int>> coupling_edges;
    for (const auto& [key, j] : qubo.couplings())
        coupling_edges.push_back({qubo.ids()[key.first], qubo.ids()[key.second]});
    MwisGraph shape(vertices, coupling_edges);

    std::vector<Vec2> pos;
    bool valid = false;
    for (int attempt = 0; attempt < opt.layout_restarts && !valid; ++attempt) {
        SplitMix64 rng = substream(opt.seed + 7777, attempt);
        pos = spring_relax(shape, 3.0 * R, rng, 800); // scaled: edges ~2.4R apart
        valid = true;
        for (int i = 0; i < n && valid; ++i)
            for (int j = i + 1; j < n && valid; ++j) {
                const double r = distance(pos[i], pos[j]);
                if (shape.has_edge(i, j))
                    valid = r > 1.9 * R && r < 2.85 * R;
                else
                    valid = r > 1.9 * R;
            }
    }
    if (!valid) throw embedding_error("could not place QUBO variables for wire routing");

    // Straight wires; crossings are not synthesized outside the K4 template.
    for (std::size_t e = 0; e < coupling_edges.size(); ++e)
        for (std::size_t f = e + 1; f < coupling_edges.size(); ++f) {
            const auto [a, b] = coupling_edges[e];
            const auto [c, d] = coupling_edges[f];
            if (segments_cross(pos[shape.index_of(a)], pos[shape.index_of(b)],
                               pos[shape.index_of(c)], pos[shape.index_of(d)]))
                throw embedding_error(
                    "QUBO wires would cross; only 4-node all-to-all instances are routed "
                    "through crossing gadgets automatically");
        }

    EmbeddingPlan plan;
    plan.radius_um = R;
    plan.margin = opt.margin;
    plan.spacing_um = opt.spacing_ratio * R;
    for (int i = 0; i < n; ++i) plan.logical_positions[qubo.ids()[i]] = pos[i];
    for (auto [a, b] : coupling_edges) {
        WireRoute route;
        route.kind = GadgetKind::wire;
        route.vertices = {a, b};
        const Vec2 pa = plan.logical_positions[a];
        const Vec2 pb = plan.logical_positions[b];
        const int L = pick_even_chain(distance(pa, pb), R, plan.spacing_um, 1);
        route.chain = points_between(pa, pb, L);
        plan.routes.push_back(route);
    }
    repair_chains(plan, qubo);
    return assemble_embedding(qubo, plan);
}

} // namespace

// Tall-rectangle template for a fully connected 4-variable QUBO: short wires
// on top/bottom, length-4 wires on the sides, and the two diagonals threaded
// through a central crossing diamond. 28 atoms for any weight values.
EmbeddingPlan k4_alltoall_qubo_plan(const QuboProblem& qubo, const EmbedOptions& options) {
    if (qubo.size() != 4 || qubo.couplings().size() != 6)
        throw input_error("k4 template needs 4 variables with all 6 couplings");
    const double R = options.radius_um;
    const auto& ids = qubo.ids();

    EmbeddingPlan plan;
    plan.radius_um = R;
    plan.margin = options.margin;
    plan.spacing_um = options.spacing_ratio * R;

    auto P = [R](double x, double y) { return Vec2{x * R, y * R}; };
    plan.logical_positions[ids[0]] = P(-1.2, 2.2);
    plan.logical_positions[ids[1]] = P(1.2, 2.2);
    plan.logical_positions[ids[2]] = P(-1.2, -2.2);
    plan.logical_positions[ids[3]] = P(1.2, -2.2);

    auto route = [&](int u, int v, std::vector<Vec2> chain) {
        WireRoute r;
        r.kind = GadgetKind::wire;
        r.vertices = {ids[u], ids[v]};
        r.chain = std::move(chain);
        plan.routes.push_back(r);
    };
    // top, bottom (L = 2)
    route(0, 1, {P(-0.437, 2.677), P(0.38, 2.75)});
    route(2, 3, {P(-0.38, -2.75), P(0.437, -2.677)});
    // left, right (L = 4)
    route(0, 2, {P(-1.65, 1.35), P(-1.537, 0.456), P(-1.424, -0.438), P(-1.62, -1.3)});
    route(1, 3, {P(1.62, 1.3), P(1.424, 0.438), P(1.537, -0.456), P(1.65, -1.35)});
    // diagonals through the crossing (L = 4, legs at slots 1 and 2)
    route(0, 3, {P(-0.62, 1.55), P(-0.517, 0.948), P(0.517, -0.948), P(0.62, -1.55)});
    route(1, 2, {P(0.62, 1.55), P(0.517, 0.948), P(-0.517, -0.948), P(-0.62, -1.55)});

    CrossingBlock cb;
    cb.route_a = 4;
    cb.route_b = 5;
    cb.slot_a = 1;
    cb.slot_b = 1;
    cb.diamond = {P(0.0, 0.45), P(0.45, 0.0), P(0.0, -0.45), P(-0.45, 0.0)};
    plan.crossings.push_back(cb);
    return plan;
}

// Rectangular-grid QUBO template: variables on a grid with pitch 2.4 R (in
// ascending id order, row-major), each coupling a straight L = 2 wire.
EmbeddingPlan grid_qubo_plan(const QuboProblem& qubo, int columns, const EmbedOptions& options) {
    if (columns < 1) throw input_error("grid template needs at least one column");
    const double R = options.radius_um;
    const double pitch = 2.4 * R;

    EmbeddingPlan plan;
    plan.radius_um = R;
    plan.margin = options.margin;
    plan.spacing_um = options.spacing_ratio * R;

    const auto& ids = qubo.ids();
    for (std::size_t k = 0; k < ids.size(); ++k) {
        const int row = static_cast<int>(k) / columns;
        const int col = static_cast<int>(k) % columns;
        plan.logical_positions[ids[k]] = {col * pitch, -row * pitch};
    }
    for (const auto& [key, j] : qubo.couplings()) {
        const Vec2 a = plan.logical_positions.at(ids[key.first]);
        const Vec2 b = plan.logical_positions.at(ids[key.second]);
        if (std::abs(distance(a, b) - pitch) > 1e-6)
            throw input_error("grid template requires nearest-neighbour couplings only");
        WireRoute route;
        route.kind = GadgetKind::wire;
        route.vertices = {ids[key.first], ids[key.second]};
        route.chain = points_between(a, b, 2);
        plan.routes.push_back(route);
    }
    return plan;
}

EmbeddedInstance embed(const LogicalProblem& problem, const std::optional<EmbeddingPlan>& plan,
                       const EmbedOptions& options) {
    if (plan) return assemble_embedding(problem, *plan);
    if (std::holds_alternative<MwisGraph>(problem))
        return embed_mwis_auto(std::get<MwisGraph>(problem), options);
    return embed_qubo_auto(std::get<QuboProblem>(problem), options);
}

} // namespace rydwire
