#include "graphscan/builders.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace graphscan {
namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n + 1), rank_(n + 1, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

void check_finite(const DataMatrix& data) {
    for (const auto& row : data.rows)
        for (double v : row)
            if (!std::isfinite(v)) throw InputError("non-finite value in input data");
}

char detect_delimiter(const std::string& line) {
    if (line.find('\t') != std::string::npos) return '\t';
    if (line.find(',') != std::string::npos) return ',';
    return ' ';
}

}  // namespace

Metric metric_from_name(const std::string& name) {
    if (name == "euclidean") return Metric::kEuclidean;
    if (name == "manhattan") return Metric::kManhattan;
    throw InputError("unknown metric '" + name + "' (expected euclidean|manhattan)");
}

double distance(const std::vector<double>& a, const std::vector<double>& b, Metric metric) {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        double d = a[k] - b[k];
        acc += metric == Metric::kEuclidean ? d * d : std::abs(d);
    }
    return metric == Metric::kEuclidean ? std::sqrt(acc) : acc;
}

DataMatrix read_delimited(std::istream& in, char delimiter) {
    DataMatrix data;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        char delim = delimiter ? delimiter : detect_delimiter(line);
        std::vector<double> row;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, delim)) {
            if (tok.empty()) continue;
            std::size_t used = 0;
            double v;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                throw InputError("non-numeric token '" + tok + "'");
            }
            if (used != tok.size()) throw InputError("non-numeric token '" + tok + "'");
            row.push_back(v);
        }
        if (row.empty()) continue;
        if (!data.rows.empty() && row.size() != data.rows.front().size())
            throw InputError("ragged rows in input data");
        data.rows.push_back(std::move(row));
    }
    check_finite(data);
    return data;
}

DataMatrix read_delimited_file(const std::string& path, char delimiter) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    return read_delimited(in, delimiter);
}

Graph build_mst(const DataMatrix& data, Metric metric) {
    const int n = data.n();
    if (n < 2) throw InputError("MST needs at least two observations");
    check_finite(data);

    struct WeightedEdge {
        double w;
        int i, j;
    };
    std::vector<WeightedEdge> all;
    all.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            all.push_back({distance(data.rows[i - 1], data.rows[j - 1], metric), i, j});
    std::sort(all.begin(), all.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    UnionFind uf(n);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (const auto& e : all) {
        if (uf.unite(e.i, e.j)) {
            edges.emplace_back(e.i, e.j);
            if (static_cast<int>(edges.size()) == n - 1) break;
        }
    }
    return Graph(n, std::move(edges));
}

Graph build_knn(const DataMatrix& data, int kk, Metric metric) {
    const int n = data.n();
    if (n < 2) throw InputError("k-NN graph needs at least two observations");
    if (kk < 1 || kk > n - 1) throw InputError("kk must be in 1..n-1");
    check_finite(data);

    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<double, int>> cand;
    for (int i = 1; i <= n; ++i) {
        cand.clear();
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            cand.emplace_back(distance(data.rows[i - 1], data.rows[j - 1], metric), j);
        }
        std::sort(cand.begin(), cand.end());  // distance, then smaller index
        for (int r = 0; r < kk; ++r) {
            int j = cand[r].second;
            edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
}

}  // namespace graphscan
