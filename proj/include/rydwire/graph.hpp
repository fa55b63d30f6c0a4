#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rydwire {

// Bit vector over a declared vertex/atom index set. bits[i] follows the
// graph's vertex order (ascending external id).
struct Configuration {
    std::vector<std::uint8_t> bits;
    std::optional<double> cost;

    Configuration() = default;
    explicit Configuration(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

    std::size_t size() const { return bits.size(); }
    int count_ones() const;
    std::string to_string() const;
    static Configuration from_string(const std::string& s);

    bool operator==(const Configuration& o) const { return bits == o.bits; }
    bool operator<(const Configuration& o) const { return bits < o.bits; }
};

// Weighted graph for maximum weighted independent set problems. Vertices are
// stored in ascending id order; edges are unordered pairs of existing ids.
// A single uniform penalty U is used for every edge; default 1 + sum(w).
class MwisGraph {
public:
    MwisGraph(std::vector<std::pair<int, double>> vertices,
              std::vector<std::pair<int, int>> edges,
              std::optional<double> penalty = std::nullopt);

    int size() const { return static_cast<int>(ids_.size()); }
    const std::vector<int>& ids() const { return ids_; }
    const std::vector<double>& weights() const { return weights_; }
    double weight(int index) const { return weights_.at(index); }
    double penalty() const { return penalty_; }
    double total_weight() const { return total_weight_; }
    double max_weight() const { return max_weight_; }
    double min_weight() const { return min_weight_; }

    // Edges as pairs of internal indices (i < j).
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int index) const { return adjacency_.at(index); }
    bool has_edge(int i, int j) const;
    int index_of(int id) const;

private:
    std::vector<int> ids_;
    std::vector<double> weights_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    double penalty_ = 0.0;
    double total_weight_ = 0.0;
    double max_weight_ = 0.0;
    double min_weight_ = 0.0;
};

// QUBO instance restricted to the encodable class: every linear coefficient
// strictly negative, every coupling non-negative.
class QuboProblem {
public:
    QuboProblem(std::vector<std::pair<int, double>> linear,
                std::map<std::pair<int, int>, double> couplings);

    int size() const { return static_cast<int>(ids_.size()); }
    const std::vector<int>& ids() const { return ids_; }
    const std::vector<double>& linear() const { return linear_; }
    // Couplings keyed by internal index pairs (i < j).
    const std::vector<std::pair<std::pair<int, int>, double>>& couplings() const {
        return couplings_;
    }
    int index_of(int id) const;

private:
    std::vector<int> ids_;
    std::vector<double> linear_;
    std::vector<std::pair<std::pair<int, int>, double>> couplings_;
};

// Eq.-style MWIS cost: -sum_i w_i n_i + sum_{(i,j) in E} U n_i n_j.
double mwis_cost(const MwisGraph& graph, const Configuration& config);

// QUBO cost: sum_i h_i n_i + sum_{i<j} J_ij n_i n_j.
double qubo_cost(const QuboProblem& qubo, const Configuration& config);

// True iff no edge has both endpoints selected.
bool is_independent_set(const MwisGraph& graph, const Configuration& config);

} // namespace rydwire
