#include "rydwire/graph.hpp"

#include "rydwire/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace rydwire {

int Configuration::count_ones() const {
    int n = 0;
    for (auto b : bits) n += (b != 0);
    return n;
}

std::string Configuration::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

Configuration Configuration::from_string(const std::string& s) {
    Configuration c;
    c.bits.reserve(s.size());
    for (char ch : s) {
        if (ch == '0')
            c.bits.push_back(0);
        else if (ch == '1')
            c.bits.push_back(1);
        else
            throw input_error("configuration string must contain only '0'/'1'");
    }
    return c;
}

MwisGraph::MwisGraph(std::vector<std::pair<int, double>> vertices,
                     std::vector<std::pair<int, int>> edges,
                     std::optional<double> penalty) {
    if (vertices.empty()) throw input_error("graph needs at least one vertex");
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
        if (vertices[k].first == vertices[k + 1].first)
            throw input_error("duplicate vertex id " + std::to_string(vertices[k].first));
    }
    ids_.reserve(vertices.size());
    weights_.reserve(vertices.size());
    for (const auto& [id, w] : vertices) {
        if (!(w > 0.0) || !std::isfinite(w))
            throw input_error("vertex weight must be strictly positive");
        ids_.push_back(id);
        weights_.push_back(w);
        total_weight_ += w;
    }
    max_weight_ = *std::max_element(weights_.begin(), weights_.end());
    min_weight_ = *std::min_element(weights_.begin(), weights_.end());

    adjacency_.assign(ids_.size(), {});
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        int i = index_of(a);
        int j = index_of(b);
        if (i == j) throw input_error("self-loop on vertex " + std::to_string(a));
        if (i > j) std::swap(i, j);
        if (!seen.insert({i, j}).second) continue;
        edges_.emplace_back(i, j);
        adjacency_[i].push_back(j);
        adjacency_[j].push_back(i);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    penalty_ = penalty.value_or(1.0 + total_weight_);
    if (!(penalty_ > max_weight_))
        throw input_error("penalty U must exceed the largest vertex weight");
}

bool MwisGraph::has_edge(int i, int j) const {
    const auto& nbrs = adjacency_.at(i);
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

int MwisGraph::index_of(int id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        throw input_error("unknown vertex id " + std::to_string(id));
    return static_cast<int>(it - ids_.begin());
}

QuboProblem::QuboProblem(std::vector<std::pair<int, double>> linear,
                         std::map<std::pair<int, int>, double> couplings) {
    if (linear.empty()) throw input_error("QUBO needs at least one variable");
    std::sort(linear.begin(), linear.end());
    for (std::size_t k = 0; k + 1 < linear.size(); ++k) {
        if (linear[k].first == linear[k + 1].first)
            throw input_error("duplicate QUBO variable id");
    }
    for (const auto& [id, h] : linear) {
        if (!(h < 0.0) || !std::isfinite(h))
            throw unsupported_class_error("encodable QUBO requires every h_i < 0");
        ids_.push_back(id);
        linear_.push_back(h);
    }
    for (const auto& [key, j] : couplings) {
        if (!(j >= 0.0) || !std::isfinite(j))
            throw unsupported_class_error("encodable QUBO requires every J_ij >= 0");
        int a = index_of(key.first);
        int b = index_of(key.second);
        if (a == b) throw input_error("QUBO coupling on a single variable");
        if (a > b) std::swap(a, b);
        couplings_.push_back({{a, b}, j});
    }
    std::sort(couplings_.begin(), couplings_.end());
    for (std::size_t k = 0; k + 1 < couplings_.size(); ++k) {
        if (couplings_[k].first == couplings_[k + 1].first)
            throw input_error("duplicate QUBO coupling");
    }
}

int QuboProblem::index_of(int id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        throw input_error("unknown QUBO variable id " + std::to_string(id));
    return static_cast<int>(it - ids_.begin());
}

double mwis_cost(const MwisGraph& graph, const Configuration& config) {
    if (static_cast<int>(config.size()) != graph.size())
        throw input_error("configuration length does not match vertex count");
    double e = 0.0;
    for (int i = 0; i < graph.size(); ++i)
        if (config.bits[i]) e -= graph.weight(i);
    for (const auto& [i, j] : graph.edges())
        if (config.bits[i] && config.bits[j]) e += graph.penalty();
    return e;
}

double qubo_cost(const QuboProblem& qubo, const Configuration& config) {
    if (static_cast<int>(config.size()) != qubo.size())
        throw input_error("configuration length does not match variable count");
    double e = 0.0;
    for (int i = 0; i < qubo.size(); ++i)
        if (config.bits[i]) e += qubo.linear()[i];
    for (const auto& [key, j] : qubo.couplings())
        if (config.bits[key.first] && config.bits[key.second]) e += j;
    return e;
}

bool is_independent_set(const MwisGraph& graph, const Configuration& config) {
    if (static_cast<int>(config.size()) != graph.size())
        throw input_error("configuration length does not match vertex count");
    for (const auto& [i, j] : graph.edges())
        if (config.bits[i] && config.bits[j]) return false;
    return true;
}

} // namespace rydwire
