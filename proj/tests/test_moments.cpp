#include <doctest.h>

#include <vector>

#include "graphscan/census.hpp"
#include "graphscan/moments.hpp"
#include "graphscan/permnull.hpp"
#include "graphscan/tightness.hpp"
#include "oracles.hpp"

using namespace graphscan;

namespace {

/// Every spec of the given order over thresholds x sides (with repetition,
/// unordered since the product is symmetric).
std::vector<MomentSpec> all_specs(const std::vector<int>& thresholds, int order) {
    std::vector<MomentFactor> factors;
    for (int t : thresholds) {
        factors.push_back({t, 1});
        factors.push_back({t, 2});
    }
    std::vector<MomentSpec> out;
    std::vector<int> pick(order, 0);
    for (;;) {
        MomentSpec spec;
        for (int idx : pick) spec.push_back(factors[idx]);
        out.push_back(spec);
        int k = order - 1;
        while (k >= 0 && pick[k] == static_cast<int>(factors.size()) - 1) --k;
        if (k < 0) break;
        int v = ++pick[k];
        for (int i = k + 1; i < order; ++i) pick[i] = v;  // nondecreasing
    }
    return out;
}

std::vector<int> spec_thresholds(int n) {
    std::vector<int> out{n / 4, n / 2, 3 * n / 4};
    for (int& t : out) t = std::max(1, std::min(n - 1, t));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_CASE("worked single-factor moments on the 3-node path") {
    Graph p3 = path_graph(3);
    // E(R1(2)) = 2 * 2*1/(3*2) = 2/3
    CHECK(product_moment(p3, {{2, 1}}) == make_rational(2, 3));
    CHECK(oracle::product_moment(p3, {{2, 1}}) == make_rational(2, 3));
    // R1(2) is an indicator here, so its square has the same mean
    CHECK(product_moment(p3, {{2, 1}, {2, 1}}) == make_rational(2, 3));
}

TEST_CASE("spec validation") {
    Graph p4 = path_graph(4);
    CHECK_THROWS_AS(product_moment(p4, {}), InputError);
    CHECK_THROWS_AS(product_moment(p4, {{0, 1}}), InputError);
    CHECK_THROWS_AS(product_moment(p4, {{4, 1}}), InputError);
    CHECK_THROWS_AS(product_moment(p4, {{2, 3}}), InputError);
    CHECK_THROWS_AS(product_moment(p4, MomentSpec(5, MomentFactor{2, 1})), InputError);
}

TEST_CASE("enumeration and census routes agree") {
    for (const auto& [name, g] : oracle::oracle_corpus()) {
        CAPTURE(name);
        MomentEngine engine(g);
        const int n = g.node_count();
        for (const auto& spec : all_specs(spec_thresholds(n), 3)) {
            CHECK(engine.product_moment(spec, MomentRoute::kEnumerate) ==
                  engine.product_moment(spec, MomentRoute::kCensus));
        }
        for (const auto& spec : all_specs({n / 2, std::max(1, n / 4)}, 4)) {
            CHECK(engine.product_moment(spec, MomentRoute::kEnumerate) ==
                  engine.product_moment(spec, MomentRoute::kCensus));
        }
    }
}

TEST_CASE("product moments match the exhaustive permutation oracle") {
    for (const auto& [name, g] : oracle::oracle_corpus()) {
        if (g.node_count() > 6) continue;  // full battery lives in acceptance
        CAPTURE(name);
        MomentEngine engine(g);
        for (int order = 1; order <= 4; ++order)
            for (const auto& spec : all_specs(spec_thresholds(g.node_count()), order)) {
                CHECK(engine.product_moment(spec) == oracle::product_moment(g, spec));
            }
    }
}

TEST_CASE("r0 moments") {
    // K3 at t=1: R0 deterministic
    R0Moments k3 = r0_moments(complete_graph(3), 1);
    CHECK(k3.mean == Rational(2));
    CHECK(k3.var == Rational(0));

    // P3 at t=1: mean 4/3 by enumeration
    R0Moments p3 = r0_moments(path_graph(3), 1);
    CHECK(p3.mean == make_rational(4, 3));

    for (const auto& [name, g] : oracle::oracle_corpus()) {
        CAPTURE(name);
        for (int t = 1; t < g.node_count(); ++t) CHECK(r0_moments(g, t).var >= 0);
    }
}

TEST_CASE("moment summary equals exhaustive sample moments on P5 at t=2") {
    Graph p5 = path_graph(5);
    MomentSummary ms = moment_summary(p5, 2);

    const int n = 5;
    Rational nf(Integer(oracle::factorial(n)));
    Rational s1(0), s2(0), s11(0), s22(0), s12(0);
    oracle::for_each_permutation(n, [&](const std::vector<int>& pos) {
        long r1 = oracle::factor_count(p5, pos, 2, 1);
        long r2 = oracle::factor_count(p5, pos, 2, 2);
        s1 += Rational(r1);
        s2 += Rational(r2);
        s11 += Rational(r1 * r1);
        s22 += Rational(r2 * r2);
        s12 += Rational(r1 * r2);
    });
    Rational e1 = s1 / nf, e2 = s2 / nf;
    CHECK(ms.e_r1 == e1);
    CHECK(ms.e_r2 == e2);
    CHECK(ms.var_r1 == s11 / nf - e1 * e1);
    CHECK(ms.var_r2 == s22 / nf - e2 * e2);
    CHECK(ms.cov_r1r2 == s12 / nf - e1 * e2);
    // weights at t=2, n=5: p = 2/3, q = 1/3
    CHECK(ms.p == make_rational(2, 3));
    CHECK(ms.q == make_rational(1, 3));
}

TEST_CASE("weight boundary values") {
    Graph g = path_graph(10);
    MomentSummary mid = moment_summary(g, 5);
    CHECK(mid.p == make_rational(1, 2));
    CHECK(mid.q == make_rational(1, 2));
    MomentSummary edge = moment_summary(g, 1);
    CHECK(edge.p == Rational(1));
    CHECK(edge.q == Rational(0));
}

TEST_CASE("reversal symmetry: E R1(t) equals E R2(n-t)") {
    for (const auto& [name, g] : oracle::census_corpus()) {
        CAPTURE(name);
        MomentEngine engine(g);
        const int n = g.node_count();
        for (int t = 1; t < n; ++t) {
            CHECK(engine.product_moment({{t, 1}}) ==
                  engine.product_moment({{n - t, 2}}));
        }
    }
}

TEST_CASE("variances nonnegative and covariance matrix PSD on the corpus") {
    for (const auto& [name, g] : oracle::census_corpus()) {
        CAPTURE(name);
        MomentEngine engine(g);
        for (int t = 1; t < g.node_count(); ++t) {
            MomentSummary ms = moment_summary(engine, t);
            CHECK(ms.var_r1 >= 0);
            CHECK(ms.var_r2 >= 0);
            CHECK(ms.var_r0 >= 0);
            CHECK(ms.var_rw >= 0);
            CHECK(ms.var_rdiff >= 0);
            CHECK(ms.sigma_det >= 0);  // 2x2 PSD given nonnegative diagonals
        }
    }
}

TEST_CASE("example 1 closed form equals the engine on the corpus") {
    for (const auto& [name, g] : oracle::census_corpus()) {
        CAPTURE(name);
        ConfigCensus census = census_closed_form(g);
        MomentEngine engine(g);
        const int n = g.node_count();
        for (int r = 1; r < n; ++r)
            for (int s = r; s < n; ++s)
                for (int t = s; t < n; ++t) {
                    CAPTURE(r);
                    CAPTURE(s);
                    CAPTURE(t);
                    Rational closed = example1_closed_form(n, r, s, t, census);
                    Rational engine_val = engine.product_moment(
                        {{r, 1}, {r, 1}, {s, 1}, {t, 1}});
                    CHECK(closed == engine_val);
                }
    }
}

TEST_CASE("example 1 on triangle-rich extras") {
    for (const auto& [name, g] : oracle::triangle_rich_extras()) {
        CAPTURE(name);
        ConfigCensus census = census_closed_form(g);
        MomentEngine engine(g);
        const int n = g.node_count();
        for (int r = 1; r < n; ++r)
            for (int s = r; s < n; ++s)
                for (int t = s; t < n; ++t) {
                    CAPTURE(r);
                    CAPTURE(s);
                    CAPTURE(t);
                    CHECK(example1_closed_form(n, r, s, t, census) ==
                          engine.product_moment({{r, 1}, {r, 1}, {s, 1}, {t, 1}}));
                }
    }
}

TEST_CASE("example 2 closed form equals the engine, including degenerate s=r") {
    for (const auto& [name, g] : oracle::census_corpus()) {
        CAPTURE(name);
        ConfigCensus census = census_closed_form(g);
        MomentEngine engine(g);
        const int n = g.node_count();
        for (int r = 1; r < n; ++r)
            for (int s = r; s < n; ++s)
                for (int t = s; t < n; ++t) {
                    CAPTURE(r);
                    CAPTURE(s);
                    CAPTURE(t);
                    Rational closed = example2_closed_form(n, r, s, t, census);
                    Rational engine_val = engine.product_moment(
                        {{r, 2}, {s, 1}, {s, 2}, {t, 1}});
                    CHECK(closed == engine_val);
                }
    }
}

TEST_CASE("example closed forms validate threshold ordering") {
    Graph g = path_graph(6);
    ConfigCensus census = census_closed_form(g);
    CHECK_THROWS_AS(example1_closed_form(6, 3, 2, 4, census), InputError);
    CHECK_THROWS_AS(example2_closed_form(6, 1, 2, 6, census), InputError);
}

TEST_CASE("falling factorials vanish for early thresholds") {
    // r=1 forces r(r-1) = 0, so the whole example-1 moment collapses to 0
    Graph g = cycle_graph(6);
    ConfigCensus census = census_closed_form(g);
    CHECK(example1_closed_form(6, 1, 2, 3, census) == Rational(0));
}
