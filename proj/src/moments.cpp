#include "graphscan/moments.hpp"

#include <algorithm>
#include <string>

#include "graphscan/permnull.hpp"

namespace graphscan {
namespace {

void validate_spec(const Graph& g, const MomentSpec& spec) {
    if (spec.empty() || spec.size() > 4)
        throw InputError("moment spec must have 1..4 factors");
    for (const auto& f : spec) {
        if (f.side != 1 && f.side != 2) throw InputError("moment factor side must be 1 or 2");
        if (f.threshold < 1 || f.threshold >= g.node_count())
            throw InputError("moment threshold outside 1..n-1");
    }
}

/// Interval implied by one factor for both endpoints of an edge.
inline std::pair<int, int> factor_interval(const MomentFactor& f, int n) {
    return f.side == 1 ? std::pair<int, int>{1, f.threshold}
                       : std::pair<int, int>{f.threshold + 1, n};
}

/// Abstract tuple pattern: a list of distinct abstract edges on small node
/// ids, the slot multiset over those edges, and how many embeddings the
/// graph admits. Summing event probabilities over all distinct slot
/// permutations and scaling by the embedding count reproduces the sum over
/// ordered edge tuples of that shape.
struct TuplePattern {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> slots;  // sorted multiset of edge indices
    Integer count;
};

std::vector<TuplePattern> patterns_for_order(const SubgraphCounts& sc, int order) {
    const Integer& m = sc.m;
    const Integer& q = sc.adj_pairs;
    Integer disj_pairs = m * (m - 1) / 2 - q;

    std::vector<TuplePattern> out;
    auto add = [&out](std::vector<std::pair<int, int>> edges, std::vector<int> slots,
                      Integer count) {
        if (count == 0) return;
        std::sort(slots.begin(), slots.end());
        out.push_back({std::move(edges), std::move(slots), std::move(count)});
    };

    const std::vector<std::pair<int, int>> kAdj{{0, 1}, {1, 2}};
    const std::vector<std::pair<int, int>> kDisj{{0, 1}, {2, 3}};
    const std::vector<std::pair<int, int>> kStar3{{0, 1}, {0, 2}, {0, 3}};
    const std::vector<std::pair<int, int>> kPath3{{0, 1}, {1, 2}, {2, 3}};
    const std::vector<std::pair<int, int>> kTri{{0, 1}, {1, 2}, {0, 2}};
    const std::vector<std::pair<int, int>> kPairIso{{0, 1}, {1, 2}, {3, 4}};
    const std::vector<std::pair<int, int>> kMatch3{{0, 1}, {2, 3}, {4, 5}};

    switch (order) {
        case 1:
            add({{0, 1}}, {0}, m);
            break;
        case 2:
            add({{0, 1}}, {0, 0}, m);
            add(kAdj, {0, 1}, q);
            add(kDisj, {0, 1}, disj_pairs);
            break;
        case 3:
            add({{0, 1}}, {0, 0, 0}, m);
            add(kAdj, {0, 0, 1}, 2 * q);
            add(kDisj, {0, 0, 1}, 2 * disj_pairs);
            add(kStar3, {0, 1, 2}, sc.s3);
            add(kPath3, {0, 1, 2}, sc.path3);
            add(kTri, {0, 1, 2}, sc.tri);
            add(kPairIso, {0, 1, 2}, sc.pair_iso);
            add(kMatch3, {0, 1, 2}, sc.match3);
            break;
        case 4:
            add({{0, 1}}, {0, 0, 0, 0}, m);
            add(kAdj, {0, 0, 0, 1}, 2 * q);
            add(kAdj, {0, 0, 1, 1}, q);
            add(kDisj, {0, 0, 0, 1}, 2 * disj_pairs);
            add(kDisj, {0, 0, 1, 1}, disj_pairs);
            add(kStar3, {0, 0, 1, 2}, 3 * sc.s3);
            // 3-edge path: doubled middle edge, then doubled end edge
            add({{1, 2}, {0, 1}, {2, 3}}, {0, 0, 1, 2}, sc.path3);
            add({{0, 1}, {1, 2}, {2, 3}}, {0, 0, 1, 2}, 2 * sc.path3);
            add(kTri, {0, 0, 1, 2}, 3 * sc.tri);
            add(kPairIso, {0, 0, 1, 2}, 2 * sc.pair_iso);          // doubled pair edge
            add({{3, 4}, {0, 1}, {1, 2}}, {0, 0, 1, 2}, sc.pair_iso);  // doubled lone edge
            add(kMatch3, {0, 0, 1, 2}, 3 * sc.match3);
            add({{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {0, 1, 2, 3}, sc.s4);
            add({{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {0, 1, 2, 3}, sc.path4);
            add({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {0, 1, 2, 3}, sc.c4);
            add({{0, 1}, {1, 2}, {0, 2}, {0, 3}}, {0, 1, 2, 3}, sc.paw);
            add({{0, 1}, {0, 2}, {0, 3}, {1, 4}}, {0, 1, 2, 3}, sc.chair);
            add({{0, 1}, {0, 2}, {0, 3}, {4, 5}}, {0, 1, 2, 3}, sc.star_e);
            add({{0, 1}, {1, 2}, {2, 3}, {4, 5}}, {0, 1, 2, 3}, sc.path3_e);
            add({{0, 1}, {1, 2}, {0, 2}, {3, 4}}, {0, 1, 2, 3}, sc.tri_e);
            add({{0, 1}, {1, 2}, {3, 4}, {4, 5}}, {0, 1, 2, 3}, sc.cherry2);
            add({{0, 1}, {1, 2}, {3, 4}, {5, 6}}, {0, 1, 2, 3}, sc.cherry_e2);
            add({{0, 1}, {2, 3}, {4, 5}, {6, 7}}, {0, 1, 2, 3}, sc.match4);
            break;
        default:
            throw InputError("moment order must be 1..4");
    }
    return out;
}

/// Sum of event probabilities over all distinct assignments of the slot
/// multiset to the abstract edges; graph-free (abstract nodes only). The
/// callable maps a sorted interval multiset to its event probability.
template <class EventFn>
Rational pattern_probability_sum(int n, const std::vector<std::pair<int, int>>& edges,
                                 std::vector<int> slots,
                                 const std::vector<std::pair<int, int>>& bounds,
                                 EventFn&& event) {
    std::sort(slots.begin(), slots.end());
    const int order = static_cast<int>(slots.size());
    Rational total(0);
    do {
        std::array<std::pair<int, int>, 8> iv;
        iv.fill({1, n});
        int max_node = -1;
        bool dead = false;
        for (int k = 0; k < order && !dead; ++k) {
            const auto& e = edges[slots[k]];
            for (int node : {e.first, e.second}) {
                iv[node].first = std::max(iv[node].first, bounds[k].first);
                iv[node].second = std::min(iv[node].second, bounds[k].second);
                max_node = std::max(max_node, node);
                if (iv[node].first > iv[node].second) { dead = true; break; }
            }
        }
        if (dead) continue;
        std::vector<std::pair<int, int>> intervals(iv.begin(), iv.begin() + max_node + 1);
        std::sort(intervals.begin(), intervals.end());
        total += event(intervals);
    } while (std::next_permutation(slots.begin(), slots.end()));
    return total;
}

Rational plain_event(int n, const std::vector<std::pair<int, int>>& intervals) {
    std::vector<NodeConstraint> cs;
    int id = 1;
    for (const auto& [lo, hi] : intervals) cs.push_back({id++, lo, hi});
    return event_probability(n, cs);
}

std::string spec_key(const MomentSpec& spec) {
    MomentSpec s = spec;
    std::sort(s.begin(), s.end(), [](const MomentFactor& a, const MomentFactor& b) {
        return a.threshold != b.threshold ? a.threshold < b.threshold : a.side < b.side;
    });
    std::string key;
    for (const auto& f : s) {
        key += std::to_string(f.threshold);
        key += f.side == 1 ? 'a' : 'b';
    }
    return key;
}

}  // namespace

MomentEngine::MomentEngine(const Graph& g) : g_(g), sub_(subgraph_counts(g)) {}

Rational MomentEngine::cached_event(const std::vector<std::pair<int, int>>& intervals) {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& [lo, hi] : intervals) {
        h = (h ^ static_cast<std::uint64_t>(lo)) * 1099511628211ull;
        h = (h ^ static_cast<std::uint64_t>(hi)) * 1099511628211ull;
    }
    auto& bucket = event_cache_[h];
    for (const auto& [k, v] : bucket)
        if (k == intervals) return v;

    std::vector<NodeConstraint> cs;
    cs.reserve(intervals.size());
    int id = 1;
    for (const auto& [lo, hi] : intervals) cs.push_back({id++, lo, hi});
    Rational p = event_probability(g_.node_count(), cs);
    bucket.emplace_back(intervals, p);
    return p;
}

Rational MomentEngine::product_moment(const MomentSpec& spec, MomentRoute route) {
    validate_spec(g_, spec);
    const int order = static_cast<int>(spec.size());
    long long tuples = 1;
    for (int i = 0; i < order; ++i) {
        tuples *= g_.edge_count();
        if (tuples > kEnumerationBudget) break;
    }

    if (route == MomentRoute::kEnumerate && tuples > kEnumerationBudget)
        throw InputError("product_moment enumeration budget exceeded; use the census route");
    if (route == MomentRoute::kAuto)
        route = tuples <= kEnumerationBudget && g_.edge_count() <= 60
                    ? MomentRoute::kEnumerate
                    : MomentRoute::kCensus;

    std::string key = spec_key(spec) + (route == MomentRoute::kEnumerate ? "#e" : "#c");
    auto it = spec_cache_.find(key);
    if (it != spec_cache_.end()) return it->second;
    Rational value =
        route == MomentRoute::kEnumerate ? enumerate_route(spec) : census_route(spec);
    spec_cache_.emplace(std::move(key), value);
    return value;
}

Rational MomentEngine::enumerate_route(const MomentSpec& spec) {
    const int order = static_cast<int>(spec.size());
    const int m = g_.edge_count();
    const int n = g_.node_count();
    std::vector<std::pair<int, int>> bounds(order);
    for (int k = 0; k < order; ++k) bounds[k] = factor_interval(spec[k], n);

    Rational total(0);
    std::array<int, 4> idx{};
    // nodes touched by the current tuple: (node, lo, hi), at most 8 entries
    std::array<std::array<int, 3>, 8> acc{};

    auto process = [&](int depth_total) {
        int used = 0;
        for (int k = 0; k < depth_total; ++k) {
            const auto& [lo, hi] = bounds[k];
            const auto& e = g_.edge(idx[k]);
            for (int node : {e.first, e.second}) {
                int found = -1;
                for (int a = 0; a < used; ++a)
                    if (acc[a][0] == node) { found = a; break; }
                if (found < 0) {
                    acc[used] = {node, lo, hi};
                    ++used;
                } else {
                    acc[found][1] = std::max(acc[found][1], lo);
                    acc[found][2] = std::min(acc[found][2], hi);
                }
            }
        }
        std::vector<std::pair<int, int>> intervals;
        intervals.reserve(used);
        for (int a = 0; a < used; ++a) {
            if (acc[a][1] > acc[a][2]) return;  // conflicting constraints
            intervals.emplace_back(acc[a][1], acc[a][2]);
        }
        std::sort(intervals.begin(), intervals.end());
        total += cached_event(intervals);
    };

    // order <= 4 nested enumeration over ordered edge tuples
    for (idx[0] = 0; idx[0] < m; ++idx[0]) {
        if (order == 1) { process(1); continue; }
        for (idx[1] = 0; idx[1] < m; ++idx[1]) {
            if (order == 2) { process(2); continue; }
            for (idx[2] = 0; idx[2] < m; ++idx[2]) {
                if (order == 3) { process(3); continue; }
                for (idx[3] = 0; idx[3] < m; ++idx[3]) process(4);
            }
        }
    }
    return total;
}

Rational MomentEngine::census_route(const MomentSpec& spec) {
    const int order = static_cast<int>(spec.size());
    const int n = g_.node_count();
    std::vector<std::pair<int, int>> bounds(order);
    for (int k = 0; k < order; ++k) bounds[k] = factor_interval(spec[k], n);

    Rational total(0);
    for (const auto& pat : patterns_for_order(sub_, order))
        total += Rational(pat.count) *
                 pattern_probability_sum(
                     n, pat.edges, pat.slots, bounds,
                     [this](const std::vector<std::pair<int, int>>& iv) {
                         return cached_event(iv);
                     });
    return total;
}

Rational product_moment(const Graph& g, const MomentSpec& spec, MomentRoute route) {
    MomentEngine engine(g);
    return engine.product_moment(spec, route);
}

R0Moments r0_moments(const Graph& g, int t) {
    MomentSummary ms = moment_summary(g, t);
    R0Moments out;
    out.mean = ms.e_r0;
    out.var = ms.var_r0;
    return out;
}

MomentSummary moment_summary(MomentEngine& engine, int t) {
    const Graph& g = engine.graph();
    const int n = g.node_count();
    if (t < 1 || t >= n) throw InputError("t outside 1..n-1");

    MomentSummary ms;
    ms.t = t;
    Rational m(static_cast<long>(g.edge_count()));
    Rational e1 = engine.product_moment({{t, 1}});
    Rational e2 = engine.product_moment({{t, 2}});
    Rational e11 = engine.product_moment({{t, 1}, {t, 1}});
    Rational e22 = engine.product_moment({{t, 2}, {t, 2}});
    Rational e12 = engine.product_moment({{t, 1}, {t, 2}});

    ms.e_r1 = e1;
    ms.e_r2 = e2;
    ms.e_r0 = m - e1 - e2;
    ms.var_r1 = e11 - e1 * e1;
    ms.var_r2 = e22 - e2 * e2;
    ms.cov_r1r2 = e12 - e1 * e2;
    ms.var_r0 = ms.var_r1 + ms.var_r2 + 2 * ms.cov_r1r2;
    ms.var_rdiff = ms.var_r1 + ms.var_r2 - 2 * ms.cov_r1r2;
    if (n > 2) {
        ms.p = make_rational(n - t - 1, n - 2);
        ms.q = make_rational(t - 1, n - 2);
        ms.var_rw = ms.p * ms.p * ms.var_r1 + ms.q * ms.q * ms.var_r2 +
                    2 * ms.p * ms.q * ms.cov_r1r2;
    } else {
        ms.p = Rational(0);
        ms.q = Rational(0);
        ms.var_rw = Rational(0);
    }
    ms.sigma_det = ms.var_r1 * ms.var_r2 - ms.cov_r1r2 * ms.cov_r1r2;

    ms.z_defined = ms.var_r0 > 0;
    ms.zw_defined = n > 2 && ms.var_rw > 0;
    ms.zdiff_defined = ms.var_rdiff > 0;
    double det = to_double(ms.sigma_det);
    double scale = std::max(to_double(ms.var_r1) * to_double(ms.var_r2),
                            to_double(ms.cov_r1r2) * to_double(ms.cov_r1r2));
    ms.s_defined = ms.sigma_det != 0 && std::abs(det) >= 1e-14 * scale;
    return ms;
}

MomentSummary moment_summary(const Graph& g, int t) {
    MomentEngine engine(g);
    return moment_summary(engine, t);
}

// ---------------------------------------------------------------------------
// Printed per-configuration probabilities for the two worked product moments.
// ---------------------------------------------------------------------------

namespace {

using I = Integer;

Rational frac(const I& num, const I& den) {
    // a vanishing falling factorial means the graph has too few nodes for
    // the configuration, whose base count is then 0 as well
    if (den == 0) return Rational(0);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// P1 for configuration `cfg`: the event that all four chosen edges lie
/// before their thresholds, for the factor pattern (r,1)(r,1)(s,1)(t,1).
Rational ex1_prob(int cfg, long n_, long r_, long s_, long t_) {
    I n(n_), r(r_), s(s_), t(t_);
    I rr = r * (r - 1);
    switch (cfg) {
        case 1: return frac(rr, falling_factorial(n_, 2));
        case 2:
            return frac(rr * ((t - 2) + 2 * (s - 2) + 4 * (r - 2)), falling_factorial(n_, 3));
        case 3:
            return frac(rr * ((t - 2) * (t - 3) + 2 * (s - 2) * (s - 3) +
                              4 * (r - 2) * (r - 3)),
                        falling_factorial(n_, 4));
        case 4:
            return frac(rr * ((s - 2) * (t - 3) + 2 * (r - 2) * (t - 3) +
                              3 * (r - 2) * (s - 3)),
                        falling_factorial(n_, 4));
        case 5:
            return frac(rr * ((r - 2) * (5 * (r - 3) + 4 * (t - 3) + 6 * (s - 3)) +
                              (s - 2) * ((s - 3) + 2 * (t - 3))),
                        falling_factorial(n_, 4));
        case 6:
            return frac(rr * ((s - 2) + 5 * (r - 2)), falling_factorial(n_, 3));
        case 7:
            return frac(rr * (r - 2) *
                                (2 * (t - 4) * ((t - 3) + 2 * (r - 3)) +
                                 3 * (s - 4) * ((s - 3) + 2 * (r - 3))) +
                            rr * (s - 2) * (t - 4) * ((t - 3) + 2 * (s - 3)),
                        falling_factorial(n_, 5));
        case 8:
            return frac(rr * (r - 2) * (r - 3) *
                                (2 * (t - 4) * (t - 5) + 3 * (s - 4) * (s - 5)) +
                            rr * (s - 2) * (s - 3) * (t - 4) * (t - 5),
                        falling_factorial(n_, 6));
        case 9:
            return frac(rr * (r - 2) * (s - 3) * (t - 4), falling_factorial(n_, 5));
        case 10:
            return frac(rr * (r - 2) *
                            ((r - 3) * ((t - 4) + 2 * (s - 4)) +
                             (s - 3) * (2 * (t - 4) + (s - 4))),
                        falling_factorial(n_, 5));
        case 11:
            return frac(rr * (r - 2) * (2 * (s - 3) + (r - 3)), falling_factorial(n_, 4));
        case 12:
            return frac(rr * (r - 2) * (7 * (s - 3) + 2 * (r - 3) + 3 * (t - 3)),
                        falling_factorial(n_, 4));
        case 13:
            return frac(rr * (r - 2) *
                            ((s - 3) * ((s - 4) + 7 * (t - 4)) +
                             2 * (r - 3) * ((s - 4) + (t - 4))),
                        falling_factorial(n_, 5));
        case 14:
            return frac(rr * (r - 2) *
                            ((s - 3) * (t - 5) * ((s - 4) + (t - 4)) +
                             2 * (r - 3) * (s - 4) * (t - 5)),
                        falling_factorial(n_, 6));
        case 15:
            return frac(rr * (r - 2) * (r - 3) *
                                (3 * (s - 4) * (s - 5) + 4 * (s - 4) * (t - 5) +
                                 (t - 4) * (t - 5)) +
                            2 * rr * (r - 2) * (s - 3) *
                                ((s - 4) * (t - 5) + (t - 4) * (t - 5)),
                        falling_factorial(n_, 6));
        case 16:
            return frac(rr * (r - 2) *
                            ((t - 3) * (t - 4) + (s - 3) * (s - 4) + 2 * (r - 3) * (s - 4)),
                        falling_factorial(n_, 5));
        case 17:
            return frac(rr * (r - 2) * (s - 4) * (t - 5) * ((s - 3) + 2 * (r - 3)),
                        falling_factorial(n_, 6));
        case 18:
            return frac(rr * (r - 2) * (r - 3) * (s - 4) * (t - 6) *
                                (2 * (t - 5) + 3 * (s - 5)) +
                            rr * (r - 2) * (s - 3) * (s - 4) * (t - 5) * (t - 6),
                        falling_factorial(n_, 7));
        case 19:
            return frac(rr * (r - 2) * (r - 3) * (s - 4) * (s - 5) * (t - 6) * (t - 7),
                        falling_factorial(n_, 8));
        default:
            throw InputError("configuration id outside 1..19");
    }
}

/// P2 for configuration `cfg`, factor pattern (r,2)(s,1)(s,2)(t,1).
Rational ex2_prob(int cfg, long n_, long r_, long s_, long t_) {
    I n(n_), r(r_), s(s_), t(t_);
    switch (cfg) {
        case 1:
        case 2:
        case 4:
        case 6:
        case 9:
            return Rational(0);
        case 3:
            return frac((s * (s - 1) + (s - r) * (s - r - 1)) *
                            ((n - s) * (n - s - 1) + (t - s) * (t - s - 1)),
                        falling_factorial(n_, 4));
        case 5:
            return frac((t - s) * (n - s - 1) *
                                ((s - r) * (s - r - 1) + s * (s - 1) + (s - r) * (s - 1)) +
                            (s - r) * (n - s - 1) *
                                ((t - s) * (s - 1) + (s - 1) * (n - s)),
                        falling_factorial(n_, 4));
        case 7: {
            I f7a = (s - r) * (s - r - 1) * (t - s) *
                        ((s - 2) * (n - s - 1) + (t - s - 1) * (n - s - 2) +
                         (n - s - 1) * (n - s - 2)) +
                    (s - r) * (n - s - 1) *
                        (2 * (s - r - 1) * (s - 2) * (n - s) +
                         (t - s) * (s - 1) * (n - s - 2));
            I f7b = (t - s) * ((s - r) * (s - 1) * (s - 2) * (n - s - 1) +
                               (t - s - 1) * s * (s - 1) * (n - s - 2)) +
                    s * (s - 1) *
                        ((s - 2) * (n - s) * (n - s - 1) +
                         (t - s) * (n - s - 1) * (n - s - 2)) +
                    (t - s) * s * (s - 1) *
                        ((s - 2) * (n - s - 1) + (t - s - 1) * (n - s - 2));
            I f7c = r * (n - s) * (n - s - 1) *
                        ((r - 1) * (n - r - 2) + 2 * (s - r) * (n - r - 3)) +
                    (s - r) * (n - s) * (n - s - 1) *
                        (2 * (s - r - 1) * (n - r - 4) + r * (n - r - 3)) +
                    (t - s) * (t - s - 1) * (s - r) *
                        (3 * r * (n - r - 3) + 2 * (s - r - 1) * (n - r - 4)) +
                    (t - s) * (t - s - 1) * r * (r - 1) * (n - r - 2);
            return frac(f7a + f7b + f7c, falling_factorial(n_, 5));
        }
        case 8: {
            I f8a = (s - r) * (s - r - 1) * (s - 2) * (n - s - 1) *
                        (2 * (s - 3) * (n - s) + 2 * (t - s) * (n - s - 2)) +
                    (t - s) * (t - s - 1) * (n - s - 2) * (n - s - 3) *
                        ((s - r) * (s - r - 1) + 2 * s * (s - 1)) +
                    s * (s - 1) * (s - 2) * (n - s - 1) *
                        ((s - 3) * (n - s) + 2 * (t - s) * (n - s - 2)) +
                    2 * (s - r) * (t - s) * (s - 1) * (s - 2) * (n - s - 1) * (n - s - 2);
            I f8b = r * (n - s) * (n - s - 1) * (n - r - 3) *
                        ((r - 1) * (n - r - 2) + 2 * (s - r) * (n - r - 4)) +
                    (s - r) * (s - r - 1) * (n - s) * (n - s - 1) * (n - r - 4) *
                        (n - r - 5) +
                    (t - s) * (t - s - 1) *
                        (r * (r - 1) * (n - r - 2) * (n - r - 3) +
                         2 * r * (s - r) * (n - r - 3) * (n - r - 4) +
                         (s - r) * (s - r - 1) * (n - r - 4) * (n - r - 5));
            return frac(f8a + f8b, falling_factorial(n_, 6));
        }
        case 10: {
            I f10a = (t - s) * (s - 1) *
                     ((s - r) * (s - 2) * (n - s - 1) + (s - r) * (t - s - 1) * (n - s - 2) +
                      (n - s - 1) * (s - r) * (s - 2) + s * (n - s - 1) * (n - s - 2));
            I f10b = (s - r) * (n - s) * (n - s - 1) *
                         (r * (s - 2) + (s - r - 1) * (s - 2)) +
                     (s - r) * (t - s) * (s - 1) *
                         ((n - s - 1) * (n - s - 2) + (t - s - 1) * (n - s - 2)) +
                     (s - r) * (t - s) * (n - s - 1) *
                         (r * (n - r - 3) + (s - r - 1) * (n - r - 4) +
                          (s - r - 1) * (s - 2));
            I f10c = (s - 1) * (n - s - 1) *
                     ((s - r) * (s - 2) * (n - s) + (t - s) * s * (n - s - 2));
            return frac(f10a + f10b + f10c, falling_factorial(n_, 5));
        }
        case 11:
        case 12:
            return frac((s - r) * (t - s) * (s - 1) * (n - s - 1), falling_factorial(n_, 4));
        case 13: {
            I acc = (s - r) * (t - s) * (s - 1) *
                        ((s - 2) * (n - s - 1) + (t - s - 1) * (n - s - 2)) +
                    (s - r) * (t - s) * (n - s - 1) *
                        (3 * r * (n - r - 3) + 2 * (s - r - 1) * (n - r - 4)) +
                    (t - s) * r * (r - 1) * (n - s - 1) * (n - r - 2) +
                    (s - r) * (s - 1) * (n - s - 1) *
                        ((s - 2) * (n - s) + (t - s) * (n - s - 2));
            return frac(acc, falling_factorial(n_, 5));
        }
        case 14: {
            I f14a = (s - r) * (t - s) * (s - 1) * (s - 2) *
                         ((s - 3) * (n - s - 1) + (t - s - 1) * (n - s - 2)) +
                     (t - s) * s * (s - 1) * (n - s - 2) *
                         ((n - s - 1) * (s - 2) + (t - s - 1) * (n - s - 3));
            I f14b = (s - r) * (s - r - 1) * (s - 2) * (n - s - 1) *
                         ((t - s) * (n - s - 2) + (s - 3) * (n - s)) +
                     (s - r) * (s - 1) * (n - s - 1) * (n - s - 2) *
                         ((n - s) * (s - 2) + (t - s) * (n - s - 3));
            return frac(f14a + f14b, falling_factorial(n_, 6));
        }
        case 15: {
            I f15a = (t - s) *
                     ((n - s - 1) * (r * (r - 1) * (n - r - 2) * (n - r - 3) +
                                     2 * r * (s - r) * (n - r - 3) * (n - r - 4) +
                                     (s - r) * (s - r - 1) * (n - r - 4) * (n - r - 5)) +
                      (s - r) * (s - 1) * (s - 2) *
                          ((s - 3) * (n - s - 1) + (t - s - 1) * (n - s - 2)) +
                      s * (s - 1) * (n - s - 2) *
                          ((n - s - 1) * (s - 2) + (t - s - 1) * (n - s - 3)));
            I f15b = (s - r) * (s - 1) * (s - 2) * (n - s - 1) *
                         ((s - 3) * (n - s) + (t - s) * (n - s - 2)) +
                     (t - s) * s * (s - 1) * (n - s - 2) *
                         ((s - 2) * (n - s - 1) + (t - s - 1) * (n - s - 3));
            I f15c = (t - s) * ((s - r) * (s - 2) *
                                    ((s - r - 1) * (s - 3) * (n - s - 1) +
                                     (t - s - 1) * (s - 1) * (n - s - 2)) +
                                (s - 1) * (n - s - 2) *
                                    ((n - s - 1) * (s - r) * (s - 2) +
                                     (t - s - 1) * s * (n - s - 3)));
            I f15d = (s - r) *
                     ((s - r - 1) * (s - 2) *
                          ((s - 3) * (n - s) * (n - s - 1) +
                           (t - s) * (n - s - 1) * (n - s - 2)) +
                      (t - s) * (s - 1) *
                          ((s - 2) * (n - s - 1) * (n - s - 2) +
                           (t - s - 1) * (n - s - 2) * (n - s - 3)) +
                      r * (n - s - 1) *
                          ((r - 1) * (n - s) * (n - r - 3) +
                           2 * (s - r - 1) * (n - s) * (n - r - 4) +
                           (t - s) * (n - s - 2) * (n - r - 4)) +
                      (s - r - 1) * (n - s - 1) * (n - r - 5) *
                          ((s - r - 2) * (n - s) + (t - s) * (n - s - 2)));
            I f15e = (s - r) * ((n - s) * (n - s - 1) *
                                    (r * (r - 1) * (n - r - 3) +
                                     2 * r * (s - r - 1) * (n - r - 4) +
                                     (s - r - 1) * (s - r - 2) * (n - r - 5) +
                                     (s - 1) * (s - 2) * (s - 3)) +
                                (s - 1) * (t - s) * (n - s - 2) *
                                    (2 * (s - 2) * (n - s - 1) +
                                     (t - s - 1) * (n - s - 3))) +
                     (t - s) * (n - s - 2) * (n - s - 1) *
                         (r * (r - 1) * (n - r - 3) + 2 * r * (s - r) * (n - r - 4) +
                          (s - r) * (s - r - 1) * (n - r - 5));
            return frac(f15a + f15b + f15c + f15d + f15e, falling_factorial(n_, 6));
        }
        case 16: {
            I acc = (t - s) * (s - 1) *
                        ((s - r) * (s - 2) * (n - s - 1) + (t - s - 1) * s * (n - s - 2)) +
                    (s - r) * (n - s - 1) *
                        ((s - r - 1) * (s - 2) * (n - s) + (t - s) * (s - 1) * (n - s - 2));
            return frac(acc, falling_factorial(n_, 5));
        }
        case 17: {
            I acc = (s - r) * (t - s) * (s - r - 1) * (s - 2) *
                        ((s - 3) * (n - s - 1) + (t - s - 1) * (n - s - 2)) +
                    (s - r) * (t - s) * (s - 1) * (n - s - 2) *
                        ((n - s - 1) * (s - 2) + (t - s - 1) * (n - s - 3)) +
                    (s - r) * (s - 1) * (s - 2) * (n - s - 1) *
                        ((s - 3) * (n - s) + (t - s) * (n - s - 2)) +
                    s * (s - 1) * (n - s - 1) * (n - s - 2) *
                        ((s - 2) * (n - s) + (t - s) * (n - s - 3));
            return frac(acc, falling_factorial(n_, 6));
        }
        case 18: {
            I f18a = (s - r) *
                     ((s - r - 1) * (s - 2) *
                          ((s - 3) * (s - 4) * (n - s) * (n - s - 1) +
                           2 * (t - s) * (s - 3) * (n - s - 1) * (n - s - 2) +
                           (t - s) * (t - s - 1) * (n - s - 2) * (n - s - 3)) +
                      (s - 1) * (n - s - 2) *
                          ((s - 2) * (s - 3) * (n - s) * (n - s - 1) +
                           2 * (t - s) * (s - 2) * (n - s - 1) * (n - s - 3) +
                           (t - s) * (t - s - 1) * (n - s - 3) * (n - s - 4)));
            I f18b = (s - r) * (s - 1) * (s - 2) *
                         ((s - 3) * (s - 4) * (n - s) * (n - s - 1) +
                          2 * (t - s) * (s - 3) * (n - s - 1) * (n - s - 2) +
                          (t - s) * (t - s - 1) * (n - s - 2) * (n - s - 3)) +
                     s * (s - 1) * (n - s - 2) *
                         ((s - 2) * (s - 3) * (n - s) * (n - s - 1) +
                          2 * (t - s) * (s - 2) * (n - s - 1) * (n - s - 3) +
                          (t - s) * (t - s - 1) * (n - s - 3) * (n - s - 4));
            I f18c = (s - r) * (s - 2) *
                         ((s - r - 1) * (s - 3) * (n - s - 1) *
                              ((s - 4) * (n - s) + (t - s) * (n - s - 2)) +
                          (n - s - 2) * (n - s - 1) * (s - 1) *
                              ((t - s) * (n - s - 3) + (s - 3) * (n - s))) +
                     (t - s) * (s - 1) *
                         ((s - r) * (s - 2) * (n - s - 2) *
                              ((s - 3) * (n - s - 1) + (t - s - 1) * (n - s - 3)) +
                          (n - s - 2) * (n - s - 3) *
                              (s * (n - s - 1) * (s - 2) +
                               s * (t - s - 1) * (n - s - 4)));
            I f18d = (s - r) * (s - r - 1) * (s - 2) * (s - 3) * (n - s - 1) *
                         ((s - 4) * (n - s) + (t - s) * (n - s - 2)) +
                     2 * (s - r) * (s - 1) * (s - 2) * (n - s - 1) * (n - s - 2) *
                         ((n - s) * (s - 3) + 2 * (t - s) * (n - s - 3)) +
                     s * (s - 1) * (n - s - 1) * (n - s - 2) * (n - s - 3) *
                         ((n - s) * (s - 2) + (t - s) * (n - s - 4));
            I f18e = (t - s) *
                     ((s - r) * (s - r - 1) * (s - 2) * (s - 3) *
                          ((s - 4) * (n - s - 1) + (t - s - 1) * (n - s - 2)) +
                      2 * (s - r) * (s - 1) * (s - 2) * (n - s - 2) *
                          ((n - s - 1) * (s - 3) + (t - s - 1) * (n - s - 3)) +
                      s * (s - 1) * (n - s - 1) * (n - s - 3) *
                          ((n - s - 1) * (s - 2) + (t - s - 1) * (n - s - 4)));
            return frac(f18a + f18b + f18c + f18d + f18e, falling_factorial(n_, 7));
        }
        case 19: {
            I f19a = (s - r) * (s - r - 1) * (s - 2) * (s - 3) *
                     ((s - 4) * (s - 5) * (n - s) * (n - s - 1) +
                      2 * (t - s) * (s - 4) * (n - s - 1) * (n - s - 2) +
                      (t - s) * (t - s - 1) * (n - s - 2) * (n - s - 3));
            I f19b = 2 * (s - r) * (s - 1) * (s - 2) * (n - s - 2) *
                     ((n - s) * (s - 3) * (s - 4) * (n - s - 1) +
                      2 * (n - s - 1) * (t - s) * (s - 3) * (n - s - 3) +
                      (t - s) * (t - s - 1) * (n - s - 3) * (n - s - 4));
            I f19c = s * (s - 1) * (n - s - 2) * (n - s - 3) *
                     ((n - s) * (n - s - 1) * (s - 2) * (s - 3) +
                      2 * (n - s - 1) * (t - s) * (s - 2) * (n - s - 4) +
                      (t - s) * (t - s - 1) * (n - s - 4) * (n - s - 5));
            return frac(f19a + f19b + f19c, falling_factorial(n_, 8));
        }
        default:
            throw InputError("configuration id outside 1..19");
    }
}

/// Per-configuration multiplier pairing with the printed probabilities: the
/// exact sum over a configuration's tuples equals base * P, where P already
/// carries the slot-arrangement bookkeeping.
std::array<Integer, 19> config_bases(const ConfigCensus& census) {
    const SubgraphCounts& sc = census.sub;
    const Integer& m = sc.m;
    Integer x1 = sc.p2 - 2 * m;
    return {
        m,                    // 1
        x1,                   // 2
        m * (m - 1) - x1,     // 3
        6 * sc.s3,            // 4
        2 * sc.path3,         // 5
        6 * sc.tri,           // 6
        2 * sc.pair_iso,      // 7
        6 * sc.match3,        // 8
        24 * sc.s4,           // 9
        4 * sc.path4,         // 10
        8 * sc.c4,            // 11
        2 * sc.paw,           // 12
        2 * sc.chair,         // 13
        6 * sc.star_e,        // 14
        2 * sc.path3_e,       // 15
        6 * sc.tri_e,         // 16
        8 * sc.cherry2,       // 17
        4 * sc.cherry_e2,     // 18
        24 * sc.match4,       // 19
    };
}

void validate_example_args(int n, int r, int s, int t) {
    if (!(1 <= r && r <= s && s <= t && t <= n - 1))
        throw InputError("thresholds must satisfy 1 <= r <= s <= t <= n-1");
}

}  // namespace

Rational example1_closed_form(int n, int r, int s, int t, const ConfigCensus& census) {
    validate_example_args(n, r, s, t);
    auto bases = config_bases(census);
    Rational total(0);
    for (int cfg = 1; cfg <= 19; ++cfg)
        total += Rational(bases[cfg - 1]) * ex1_prob(cfg, n, r, s, t);
    return total;
}

Rational example2_closed_form(int n, int r, int s, int t, const ConfigCensus& census) {
    validate_example_args(n, r, s, t);
    auto bases = config_bases(census);
    const SubgraphCounts& sc = census.sub;
    Rational total(0);
    for (int cfg = 1; cfg <= 19; ++cfg) {
        if (cfg == 5 || cfg == 18) continue;
        Rational base(bases[cfg - 1]);
        // The printed P2 bundles slot arrangements against a different
        // multiplier than Example 1 for these two configurations; the
        // factors are fixed by the engine-equality gate.
        if (cfg == 10) base = Rational(2 * sc.path4);
        if (cfg == 12) base = Rational(4 * sc.paw);
        total += base * ex2_prob(cfg, n, r, s, t);
    }
    // Configurations 5 and 18: no multiple of the printed probability
    // matches the exact tuple sum, so these terms use the arrangement sums
    // over the abstract edge patterns instead.
    std::vector<std::pair<int, int>> bounds{{r + 1, n}, {1, s}, {s + 1, n}, {1, t}};
    auto ev = [n](const std::vector<std::pair<int, int>>& iv) { return plain_event(n, iv); };
    Rational mid =
        pattern_probability_sum(n, {{1, 2}, {0, 1}, {2, 3}}, {0, 0, 1, 2}, bounds, ev);
    Rational end =
        pattern_probability_sum(n, {{0, 1}, {1, 2}, {2, 3}}, {0, 0, 1, 2}, bounds, ev);
    total += Rational(sc.path3) * (mid + 2 * end);
    Rational cherry_e2 = pattern_probability_sum(
        n, {{0, 1}, {1, 2}, {3, 4}, {5, 6}}, {0, 1, 2, 3}, bounds, ev);
    total += Rational(sc.cherry_e2) * cherry_e2;
    return total;
}

Rational example1_config_probability(int cfg, int n, int r, int s, int t) {
    return ex1_prob(cfg, n, r, s, t);
}

Rational example2_config_probability(int cfg, int n, int r, int s, int t) {
    return ex2_prob(cfg, n, r, s, t);
}

std::array<Integer, 19> example_config_bases(const ConfigCensus& census) {
    return config_bases(census);
}

}  // namespace graphscan
