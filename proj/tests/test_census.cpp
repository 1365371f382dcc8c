#include <doctest.h>

#include <set>

#include "graphscan/census.hpp"
#include "graphscan/tightness.hpp"
#include "oracles.hpp"

using namespace graphscan;

TEST_CASE("classify_tuple on the worked cases") {
    Graph k3 = complete_graph(3);
    // four copies of the same edge
    CHECK(classify_tuple(k3, std::array<int, 4>{0, 0, 0, 0}) == 1);
    // doubled edge completing a triangle
    CHECK(classify_tuple(k3, std::array<int, 4>{0, 0, 1, 2}) == 6);

    Graph m4 = Graph(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    CHECK(classify_tuple(m4, std::array<int, 4>{0, 1, 2, 3}) == 19);

    CHECK_THROWS_AS(classify_tuple(k3, std::array<int, 4>{0, 1, 2, 3}), InputError);
}

TEST_CASE("classify_tuple accepts node pairs and validates membership") {
    Graph p3 = path_graph(3);
    CHECK(classify_tuple(p3, std::array<std::pair<int, int>, 4>{
                                 {{1, 2}, {2, 1}, {2, 3}, {2, 3}}}) == 2);
    CHECK_THROWS_AS(classify_tuple(p3, std::array<std::pair<int, int>, 4>{
                                           {{1, 3}, {1, 2}, {2, 3}, {2, 3}}}),
                    InputError);
}

TEST_CASE("single-edge graph: only configuration 1") {
    ConfigCensus c = census_bruteforce(Graph(2, {{1, 2}}));
    CHECK(c.counts[0] == 1);
    for (int j = 2; j <= 19; ++j) CHECK(c.counts[j - 1] == 0);
    ConfigCensus cf = census_closed_form(Graph(2, {{1, 2}}));
    CHECK(cf.counts == c.counts);
    // x1 = (1+1) - 2 = 0, so the configuration-2 count 7*x1 vanishes
    CHECK(cf.x[0] == 0);
}

TEST_CASE("path P3: total 16 and x1 = 2") {
    ConfigCensus c = census_bruteforce(path_graph(3));
    CHECK(c.total == 16);
    CHECK(c.counts_sum() == 16);
    CHECK(c.x[0] == 2);  // sum deg^2 - 2|G| = 6 - 4
}

TEST_CASE("K3: x5 counts one shared neighbor per edge") {
    ConfigCensus c = census_closed_form(complete_graph(3));
    CHECK(c.x[4] == 3);
    CHECK(c.counts[5] == 36);  // doubled-edge triangles: 12 * x5
}

TEST_CASE("closed form equals brute force on the acceptance corpus") {
    for (const auto& [name, g] : oracle::census_corpus()) {
        CAPTURE(name);
        ConfigCensus brute = census_bruteforce(g);
        ConfigCensus closed = census_closed_form(g);
        for (int j = 0; j < 19; ++j) {
            CAPTURE(j + 1);
            CHECK(brute.counts[j] == closed.counts[j]);
        }
        CHECK(brute.counts_sum() == brute.total);
        CHECK(closed.counts_sum() == closed.total);
    }
}

TEST_CASE("closed form equals brute force on triangle-rich extras") {
    for (const auto& [name, g] : oracle::triangle_rich_extras()) {
        CAPTURE(name);
        ConfigCensus brute = census_bruteforce(g);
        ConfigCensus closed = census_closed_form(g);
        for (int j = 0; j < 19; ++j) {
            CAPTURE(j + 1);
            CHECK(brute.counts[j] == closed.counts[j]);
        }
        CHECK(closed.counts_sum() == closed.total);
    }
}

TEST_CASE("printed count formulas are flagged where they disagree") {
    // Triangle-free graphs: the printed linear combinations all hold.
    ConfigCensus p6 = census_closed_form(path_graph(6));
    CHECK(p6.printed_mismatches.empty());

    ConfigCensus c6 = census_closed_form(cycle_graph(6));
    CHECK(c6.printed_mismatches.empty());

    // With triangles the printed forms for some configurations break; the
    // used counts stay gated by brute force, the discrepancy is surfaced.
    ConfigCensus paw = census_closed_form(Graph(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}}));
    CHECK(!paw.printed_mismatches.empty());
    std::set<int> flagged;
    for (const auto& f : paw.printed_mismatches) {
        flagged.insert(f.config);
        CHECK(f.printed != f.used);
    }
    CHECK(flagged.count(5) == 1);  // 36*x3 misses the triangle correction
}

TEST_CASE("classification is invariant under node relabeling") {
    // relabel the paw graph three ways and compare censuses
    Graph a(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    Graph b(4, {{4, 3}, {3, 2}, {4, 2}, {2, 1}});  // reverse labels
    Graph c(4, {{2, 4}, {4, 1}, {2, 1}, {1, 3}});  // 1->2, 2->4, 3->1, 4->3
    ConfigCensus ca = census_bruteforce(a);
    ConfigCensus cb = census_bruteforce(b);
    ConfigCensus cc = census_bruteforce(c);
    CHECK(ca.counts == cb.counts);
    CHECK(ca.counts == cc.counts);
}

TEST_CASE("budget refusal points to the closed form") {
    DataMatrix big = sample_gauss2d(40, 5);
    Graph g = build_knn(big, 2);
    CHECK_THROWS_AS(census_bruteforce(g, 10), InputError);
    // closed form has no budget
    ConfigCensus closed = census_closed_form(g);
    CHECK(closed.counts_sum() == closed.total);
}

TEST_CASE("subgraph counts stay consistent on a larger random graph") {
    Graph g = build_knn(sample_gauss2d(28, 8), 2);
    ConfigCensus closed = census_closed_form(g);
    CHECK(closed.counts_sum() == closed.total);
    for (const auto& cnt : closed.counts) CHECK(cnt >= 0);
    ConfigCensus brute = census_bruteforce(g, 60);
    CHECK(brute.counts == closed.counts);
}
