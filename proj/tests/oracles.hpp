#pragma once

// Test-only oracles. Everything here recomputes quantities by exhaustive
// enumeration, independent of the library's engine and census paths.

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "graphscan/builders.hpp"
#include "graphscan/graph.hpp"
#include "graphscan/moments.hpp"
#include "graphscan/rational.hpp"
#include "graphscan/rng.hpp"
#include "graphscan/tightness.hpp"

namespace oracle {

using graphscan::DataMatrix;
using graphscan::Graph;
using graphscan::Integer;
using graphscan::MomentSpec;
using graphscan::Rational;

/// Calls f(positions) for every permutation; positions[node] is 1-based.
template <class F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> pos(n + 1);
    do {
        for (int i = 0; i < n; ++i) pos[perm[i]] = i + 1;
        f(pos);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline long factorial(int n) {
    long acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

/// R-side count of one factor under fixed positions.
inline long factor_count(const Graph& g, const std::vector<int>& pos, int threshold,
                         int side) {
    long count = 0;
    for (const auto& [i, j] : g.edges()) {
        bool in = side == 1 ? pos[i] <= threshold && pos[j] <= threshold
                            : pos[i] > threshold && pos[j] > threshold;
        if (in) ++count;
    }
    return count;
}

/// E(prod R_side(t)) over all n! permutations.
inline Rational product_moment(const Graph& g, const MomentSpec& spec) {
    const int n = g.node_count();
    Integer sum = 0;
    for_each_permutation(n, [&](const std::vector<int>& pos) {
        long prod = 1;
        for (const auto& f : spec) prod *= factor_count(g, pos, f.threshold, f.side);
        sum += prod;
    });
    Rational p(sum, Integer(factorial(n)));
    p.canonicalize();
    return p;
}

struct WeightedProcessOracle {
    // raw sums of W(r)^a W(s)^b W(t)^c over all permutations, where
    // W = w1 * R1 + w2 * R2 with per-threshold rational weights.
    std::array<int, 3> thresholds;
    std::array<Rational, 3> w1, w2;
    std::array<Rational, 3> mean, var;

    Rational raw(const Graph& g, std::array<int, 3> e) const {
        const int n = g.node_count();
        Rational sum(0);
        for_each_permutation(n, [&](const std::vector<int>& pos) {
            Rational prod(1);
            for (int i = 0; i < 3; ++i) {
                if (e[i] == 0) continue;
                Rational w = w1[i] * Rational(factor_count(g, pos, thresholds[i], 1)) +
                             w2[i] * Rational(factor_count(g, pos, thresholds[i], 2));
                for (int k = 0; k < e[i]; ++k) prod *= w;
            }
            sum += prod;
        });
        return sum / Rational(Integer(factorial(n)));
    }
};

/// Exhaustive-permutation KC moment in the same radical representation as
/// graphscan::KcExact, built from independently enumerated moments.
inline graphscan::KcExact kc_moment(const Graph& g, graphscan::BasicProcess X,
                                    const Rational& u, const Rational& v, const Rational& w) {
    using graphscan::BasicProcess;
    const int n = g.node_count();
    auto floor_of = [&](const Rational& x) {
        Integer num = x.get_num() * n;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
        return static_cast<int>(q.get_si());
    };

    graphscan::KcExact out;
    out.r = floor_of(u);
    out.s = floor_of(v);
    out.t = floor_of(w);
    out.var_r = out.var_s = out.var_t = Rational(1);
    if (out.r == out.s || out.s == out.t) {
        out.collapsed = true;
        return out;
    }

    WeightedProcessOracle wp;
    wp.thresholds = {out.r, out.s, out.t};
    for (int i = 0; i < 3; ++i) {
        if (X == BasicProcess::kZdiff) {
            wp.w1[i] = Rational(1);
            wp.w2[i] = Rational(-1);
        } else {
            wp.w1[i] = graphscan::make_rational(n - wp.thresholds[i] - 1, n - 2);
            wp.w2[i] = graphscan::make_rational(wp.thresholds[i] - 1, n - 2);
        }
    }
    std::array<Rational, 3> mu;
    for (int i = 0; i < 3; ++i) {
        std::array<int, 3> e{};
        e[i] = 1;
        mu[i] = wp.raw(g, e);
    }
    std::array<Rational, 3> var;
    for (int i = 0; i < 3; ++i) {
        std::array<int, 3> e{};
        e[i] = 2;
        var[i] = wp.raw(g, e) - mu[i] * mu[i];
    }
    out.var_r = var[0];
    out.var_s = var[1];
    out.var_t = var[2];

    auto centered = [&](std::array<int, 3> e) {
        Rational total(0);
        for (int a = 0; a <= e[0]; ++a)
            for (int b = 0; b <= e[1]; ++b)
                for (int c = 0; c <= e[2]; ++c) {
                    Rational term = Rational(graphscan::binomial_exact(e[0], a)) *
                                    Rational(graphscan::binomial_exact(e[1], b)) *
                                    Rational(graphscan::binomial_exact(e[2], c)) *
                                    wp.raw(g, {a, b, c});
                    for (int i = 0; i < e[0] - a; ++i) term *= -mu[0];
                    for (int i = 0; i < e[1] - b; ++i) term *= -mu[1];
                    for (int i = 0; i < e[2] - c; ++i) term *= -mu[2];
                    total += term;
                }
        return total;
    };

    const std::array<std::pair<std::array<int, 3>, int>, 9> expansion{{
        {{2, 2, 0}, 1},
        {{2, 1, 1}, -2},
        {{2, 0, 2}, 1},
        {{1, 3, 0}, -2},
        {{0, 2, 2}, 1},
        {{1, 1, 2}, -2},
        {{0, 4, 0}, 1},
        {{0, 3, 1}, -2},
        {{1, 2, 1}, 4},
    }};
    for (const auto& [e, mult] : expansion) {
        Rational c = Rational(mult) * centered(e);
        c /= graphscan::rational_pow(var[0], e[0] / 2) *
             graphscan::rational_pow(var[1], e[1] / 2) *
             graphscan::rational_pow(var[2], e[2] / 2);
        int parity = (e[0] % 2) + 2 * (e[1] % 2) + 4 * (e[2] % 2);
        out.coeff[parity] += c;
    }
    return out;
}

/// Total weight of the minimum spanning tree by enumerating all labeled
/// trees through their Pruefer sequences (n <= 8).
inline double mst_weight_bruteforce(const DataMatrix& data, graphscan::Metric metric) {
    const int n = data.n();
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dist[i][j] = graphscan::distance(data.rows[i], data.rows[j], metric);

    double best = 1e300;
    std::vector<int> seq(n - 2, 0);
    auto tree_weight = [&]() {
        std::vector<int> degree(n, 1);
        for (int v : seq) ++degree[v];
        std::vector<int> deg = degree;
        std::vector<bool> used(n, false);
        double weight = 0;
        for (int v : seq) {
            int leaf = -1;
            for (int i = 0; i < n; ++i)
                if (deg[i] == 1 && !used[i]) { leaf = i; break; }
            used[leaf] = true;
            weight += dist[leaf][v];
            --deg[v];
        }
        int a = -1, b = -1;
        for (int i = 0; i < n; ++i)
            if (!used[i]) (a < 0 ? a : b) = i;
        return weight + dist[a][b];
    };
    for (;;) {
        best = std::min(best, tree_weight());
        int k = n - 3;
        while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
        if (k < 0) break;
        ++seq[k];
    }
    return best;
}

/// Shared test corpus (spec acceptance corpus plus triangle-rich extras).
struct NamedGraph {
    std::string name;
    Graph g;
};

inline std::vector<NamedGraph> census_corpus() {
    using graphscan::build_knn;
    using graphscan::build_mst;
    std::vector<NamedGraph> out;
    out.push_back({"K3", graphscan::complete_graph(3)});
    out.push_back({"P3", graphscan::path_graph(3)});
    out.push_back({"P4", graphscan::path_graph(4)});
    out.push_back({"P5", graphscan::path_graph(5)});
    out.push_back({"P6", graphscan::path_graph(6)});
    out.push_back({"S4", graphscan::star_graph(3)});
    out.push_back({"S5", graphscan::star_graph(4)});
    out.push_back({"S6", graphscan::star_graph(5)});
    out.push_back({"C6", graphscan::cycle_graph(6)});
    out.push_back({"knn2-9", build_knn(graphscan::sample_gauss2d(9, 71), 2)});
    out.push_back({"knn3-10", build_knn(graphscan::sample_gauss2d(10, 72), 3)});
    out.push_back({"mst-10", build_mst(graphscan::sample_gauss2d(10, 73))});
    return out;
}

inline std::vector<NamedGraph> triangle_rich_extras() {
    std::vector<NamedGraph> out;
    out.push_back({"K4", graphscan::complete_graph(4)});
    out.push_back({"K5", graphscan::complete_graph(5)});
    out.push_back({"paw", Graph(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}})});
    out.push_back({"paw+K2", Graph(6, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {5, 6}})});
    out.push_back({"K3+K2", Graph(5, {{1, 2}, {2, 3}, {1, 3}, {4, 5}})});
    out.push_back({"chair", Graph(5, {{1, 2}, {1, 3}, {1, 4}, {2, 5}})});
    out.push_back({"K3+P3", Graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}})});
    out.push_back({"two-tri", Graph(7, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {6, 7}})});
    out.push_back({"diamond", Graph(4, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 4}})});
    out.push_back({"knn3-8", graphscan::build_knn(graphscan::sample_gauss2d(8, 74), 3)});
    return out;
}

/// Small graphs (n <= 7) for exhaustive permutation checks.
inline std::vector<NamedGraph> oracle_corpus() {
    std::vector<NamedGraph> out;
    out.push_back({"K3", graphscan::complete_graph(3)});
    out.push_back({"P4", graphscan::path_graph(4)});
    out.push_back({"P5", graphscan::path_graph(5)});
    out.push_back({"P6", graphscan::path_graph(6)});
    out.push_back({"S5", graphscan::star_graph(4)});
    out.push_back({"C6", graphscan::cycle_graph(6)});
    out.push_back({"paw", Graph(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}})});
    out.push_back({"knn2-7", graphscan::build_knn(graphscan::sample_gauss2d(7, 75), 2)});
    out.push_back({"mst-7", graphscan::build_mst(graphscan::sample_gauss2d(7, 76))});
    return out;
}

}  // namespace oracle
