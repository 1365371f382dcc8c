#include "graphscan/graph.hpp"

#include <algorithm>

#include <json.hpp>

namespace graphscan {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1) throw InputError("graph needs at least one node");
    edges_.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i == j) throw InputError("self-loop at node " + std::to_string(i));
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n) throw InputError("edge endpoint out of 1..n");
        edges_.emplace_back(i, j);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("duplicate edge");

    degree_.assign(n + 1, 0);
    adj_.assign(n + 1, {});
    for (auto [i, j] : edges_) {
        ++degree_[i];
        ++degree_[j];
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) return false;
    const auto& nb = adj_[i];
    return std::binary_search(nb.begin(), nb.end(), j);
}

std::string Graph::to_json() const {
    nlohmann::json doc;
    doc["n"] = n_;
    auto arr = nlohmann::json::array();
    for (auto [i, j] : edges_) arr.push_back({i, j});
    doc["edges"] = arr;
    return doc.dump();
}

Graph Graph::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed graph JSON: ") + e.what());
    }
    if (!doc.contains("n") || !doc.contains("edges"))
        throw InputError("graph JSON must contain 'n' and 'edges'");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("graph JSON edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(doc["n"].get<int>(), std::move(edges));
}

NeighborhoodStats neighborhood_stats(const Graph& g) {
    NeighborhoodStats st;
    for (int v = 1; v <= g.node_count(); ++v) {
        long long d = g.degree(v);
        st.sum_deg2 += d * d;
        st.sum_deg3 += d * d * d;
        st.sum_deg4 += d * d * d * d;
    }
    st.shared.reserve(g.edge_count());
    for (const auto& [i, j] : g.edges()) st.shared.push_back(common_neighbors(g, i, j));
    return st;
}

int common_neighbors(const Graph& g, int i, int j) {
    const auto& a = g.neighbors(i);
    const auto& b = g.neighbors(j);
    int count = 0;
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (*it < *jt) ++it;
        else if (*jt < *it) ++jt;
        else { ++count; ++it; ++jt; }
    }
    return count;
}

}  // namespace graphscan
