#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphscan {

/// Raised on malformed user input (bad graph files, out-of-range flags,
/// non-finite data). The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Undirected simple graph on nodes 1..n. Nodes are identified with the time
/// order of the observations. Edges are stored as (i, j) with i < j, sorted
/// lexicographically, so construction is bit-reproducible.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& edge(int idx) const { return edges_[idx]; }

    int degree(int node) const { return degree_[node]; }
    const std::vector<int>& degrees() const { return degree_; }
    /// Sorted neighbor list of a node.
    const std::vector<int>& neighbors(int node) const { return adj_[node]; }
    bool has_edge(int i, int j) const;

    std::string to_json() const;
    static Graph from_json(const std::string& text);

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degree_;            // 1-based, degree_[0] unused
    std::vector<std::vector<int>> adj_;  // 1-based sorted neighbor lists
};

/// Degree power sums and the per-edge shared-neighbor table.
struct NeighborhoodStats {
    long long sum_deg2 = 0;
    long long sum_deg3 = 0;
    long long sum_deg4 = 0;
    /// shared[e] = number of common neighbors of the endpoints of edge e,
    /// aligned with Graph::edges().
    std::vector<int> shared;
};

NeighborhoodStats neighborhood_stats(const Graph& g);

/// Number of common neighbors of two nodes (not required to be adjacent).
int common_neighbors(const Graph& g, int i, int j);

}  // namespace graphscan
