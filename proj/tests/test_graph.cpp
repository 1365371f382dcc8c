#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "graphscan/builders.hpp"
#include "graphscan/graph.hpp"
#include "graphscan/tightness.hpp"
#include "oracles.hpp"

using namespace graphscan;

namespace {

DataMatrix points1d(std::initializer_list<double> xs) {
    DataMatrix d;
    for (double x : xs) d.rows.push_back({x});
    return d;
}

bool connected(const Graph& g) {
    std::vector<int> parent(g.node_count() + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [i, j] : g.edges()) parent[find(i)] = find(j);
    for (int v = 2; v <= g.node_count(); ++v)
        if (find(v) != find(1)) return false;
    return true;
}

}  // namespace

TEST_CASE("graph invariants and validation") {
    Graph g(4, {{3, 4}, {1, 2}, {2, 3}});
    CHECK(g.edge_count() == 3);
    // edges are normalized and sorted
    CHECK(g.edge(0) == std::pair<int, int>{1, 2});
    CHECK(g.edge(2) == std::pair<int, int>{3, 4});

    // degree array consistent with edge list
    std::vector<int> recount(g.node_count() + 1, 0);
    for (auto [i, j] : g.edges()) {
        ++recount[i];
        ++recount[j];
    }
    int degsum = 0;
    for (int v = 1; v <= g.node_count(); ++v) {
        CHECK(recount[v] == g.degree(v));
        degsum += g.degree(v);
    }
    CHECK(degsum == 2 * g.edge_count());

    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), InputError);
}

TEST_CASE("graph JSON round trip") {
    Graph g = build_knn(sample_gauss2d(8, 3), 2);
    Graph back = Graph::from_json(g.to_json());
    CHECK(back.node_count() == g.node_count());
    CHECK(back.edges() == g.edges());
    CHECK_THROWS_AS(Graph::from_json("{"), InputError);
    CHECK_THROWS_AS(Graph::from_json("{\"n\": 3}"), InputError);
}

TEST_CASE("mst on 1-d points connects consecutive sorted points") {
    Graph g = build_mst(points1d({0, 1, 3}));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
}

TEST_CASE("mst on two identical points is the single edge") {
    Graph g = build_mst(points1d({5, 5}));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("mst weight matches exhaustive spanning-tree search") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        DataMatrix data = sample_gauss2d(8, seed);
        Graph g = build_mst(data);
        CHECK(g.edge_count() == 7);
        CHECK(connected(g));
        double total = 0;
        for (auto [i, j] : g.edges())
            total += distance(data.rows[i - 1], data.rows[j - 1], Metric::kEuclidean);
        double best = oracle::mst_weight_bruteforce(data, Metric::kEuclidean);
        CHECK(total == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("mst rejects non-finite data and tiny inputs") {
    DataMatrix bad;
    bad.rows = {{0.0}, {std::nan("")}};
    CHECK_THROWS_AS(build_mst(bad), InputError);
    CHECK_THROWS_AS(build_mst(points1d({1})), InputError);
}

TEST_CASE("knn on 1-d points, kk=1") {
    Graph g = build_knn(points1d({0, 1, 10}), 1);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
}

TEST_CASE("knn with kk=n-1 is complete") {
    Graph g = build_knn(sample_gauss2d(6, 4), 5);
    CHECK(g.edge_count() == 15);
}

TEST_CASE("knn matches direct pairwise-distance computation") {
    DataMatrix data = sample_gauss2d(6, 21);
    Graph g = build_knn(data, 2);
    std::set<std::pair<int, int>> expected;
    for (int i = 1; i <= 6; ++i) {
        std::vector<std::pair<double, int>> cand;
        for (int j = 1; j <= 6; ++j)
            if (j != i)
                cand.emplace_back(
                    distance(data.rows[i - 1], data.rows[j - 1], Metric::kEuclidean), j);
        std::sort(cand.begin(), cand.end());
        for (int r = 0; r < 2; ++r)
            expected.insert({std::min(i, cand[r].second), std::max(i, cand[r].second)});
    }
    CHECK(std::set<std::pair<int, int>>(g.edges().begin(), g.edges().end()) == expected);
}

TEST_CASE("knn incident-degree lower bound when distances distinct") {
    DataMatrix data = sample_gauss2d(9, 31);
    for (int kk = 1; kk <= 3; ++kk) {
        Graph g = build_knn(data, kk);
        for (int v = 1; v <= 9; ++v) CHECK(g.degree(v) >= kk);
    }
    CHECK_THROWS_AS(build_knn(data, 0), InputError);
    CHECK_THROWS_AS(build_knn(data, 9), InputError);
}

TEST_CASE("neighborhood stats on named graphs") {
    NeighborhoodStats tri = neighborhood_stats(complete_graph(3));
    CHECK(tri.sum_deg2 == 12);

    NeighborhoodStats p3 = neighborhood_stats(path_graph(3));
    CHECK(p3.sum_deg2 == 6);
    CHECK(p3.sum_deg3 == 10);

    Graph star = star_graph(4);
    NeighborhoodStats st = neighborhood_stats(star);
    CHECK(st.sum_deg2 == 20);
    // any leaf pair shares exactly the hub
    CHECK(common_neighbors(star, 2, 3) == 1);
    // per-edge shared-neighbor table: star edges have none
    for (int c : st.shared) CHECK(c == 0);
}

TEST_CASE("neighborhood power sums equal naive recomputation on the corpus") {
    for (const auto& [name, g] : oracle::census_corpus()) {
        CAPTURE(name);
        NeighborhoodStats st = neighborhood_stats(g);
        long long s2 = 0, s3 = 0, s4 = 0;
        for (int v = 1; v <= g.node_count(); ++v) {
            long long d = 0;
            for (auto [i, j] : g.edges()) d += (i == v || j == v) ? 1 : 0;
            s2 += d * d;
            s3 += d * d * d;
            s4 += d * d * d * d;
        }
        CHECK(st.sum_deg2 == s2);
        CHECK(st.sum_deg3 == s3);
        CHECK(st.sum_deg4 == s4);
    }
}

TEST_CASE("delimited reader auto-detects tab and comma") {
    std::stringstream tsv("1\t2\n3\t4\n");
    DataMatrix a = read_delimited(tsv);
    CHECK(a.n() == 2);
    CHECK(a.dims() == 2);

    std::stringstream csv("1.5,2\n-3,4e-1\n");
    DataMatrix b = read_delimited(csv);
    CHECK(b.rows[1][1] == doctest::Approx(0.4));

    std::stringstream bad("1,2\nx,4\n");
    CHECK_THROWS_AS(read_delimited(bad), InputError);

    std::stringstream ragged("1,2\n3\n");
    CHECK_THROWS_AS(read_delimited(ragged), InputError);
}

TEST_CASE("manhattan metric changes distances as expected") {
    DataMatrix data;
    data.rows = {{0, 0}, {3, 0}, {2, 2}};
    CHECK(distance(data.rows[0], data.rows[2], Metric::kManhattan) == doctest::Approx(4));
    CHECK(distance(data.rows[0], data.rows[2], Metric::kEuclidean) ==
          doctest::Approx(std::sqrt(8.0)));
    Graph gm = build_mst(data, Metric::kManhattan);
    CHECK(gm.edge_count() == 2);
    CHECK(metric_from_name("manhattan") == Metric::kManhattan);
    CHECK_THROWS_AS(metric_from_name("cosine"), InputError);
}
