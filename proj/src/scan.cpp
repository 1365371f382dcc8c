#include "graphscan/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "graphscan/rng.hpp"

namespace graphscan {

StatName stat_from_name(const std::string& name) {
    if (name == "z") return StatName::kZ;
    if (name == "zw") return StatName::kZw;
    if (name == "zdiff") return StatName::kZdiff;
    if (name == "s") return StatName::kS;
    if (name == "m") return StatName::kM;
    throw InputError("unknown statistic '" + name + "' (expected z|zw|zdiff|s|m)");
}

std::string stat_name(StatName stat) {
    switch (stat) {
        case StatName::kZ: return "z";
        case StatName::kZw: return "zw";
        case StatName::kZdiff: return "zdiff";
        case StatName::kS: return "s";
        case StatName::kM: return "m";
    }
    return "?";
}

std::vector<int> identity_positions(int n) {
    std::vector<int> pos(n + 1);
    std::iota(pos.begin(), pos.end(), 0);
    return pos;
}

CountsAtT compute_counts(const Graph& g, const std::vector<int>& positions, int t) {
    if (t < 1 || t >= g.node_count()) throw InputError("t outside 1..n-1");
    CountsAtT c;
    for (const auto& [i, j] : g.edges()) {
        int pi = positions[i], pj = positions[j];
        if (pi <= t && pj <= t) ++c.r1;
        else if (pi > t && pj > t) ++c.r2;
        else ++c.r0;
    }
    return c;
}

double StatValues::get(StatName stat, bool& defined) const {
    switch (stat) {
        case StatName::kZ: defined = z_defined; return z;
        case StatName::kZw: defined = zw_defined; return zw;
        case StatName::kZdiff: defined = zdiff_defined; return zdiff;
        case StatName::kS: defined = s_defined; return s;
        case StatName::kM: defined = m_defined; return m;
    }
    defined = false;
    return 0;
}

StatValues statistics_at(const Graph& g, const CountsAtT& counts, const MomentSummary& ms) {
    StatValues out;
    Rational d1 = Rational(counts.r1) - ms.e_r1;
    Rational d2 = Rational(counts.r2) - ms.e_r2;

    if (ms.z_defined) {
        Rational d0 = Rational(counts.r0) - ms.e_r0;
        out.z = -to_double(d0) / std::sqrt(to_double(ms.var_r0));
        out.z_defined = true;
    }
    if (ms.zw_defined) {
        Rational dw = ms.p * d1 + ms.q * d2;
        out.zw = to_double(dw) / std::sqrt(to_double(ms.var_rw));
        out.zw_defined = true;
    }
    if (ms.zdiff_defined) {
        out.zdiff = to_double(d1 - d2) / std::sqrt(to_double(ms.var_rdiff));
        out.zdiff_defined = true;
    }
    if (ms.s_defined) {
        // exact 2x2 inverse: S = (d1 d2) Sigma^{-1} (d1 d2)^T
        Rational s_exact = (d1 * d1 * ms.var_r2 - 2 * d1 * d2 * ms.cov_r1r2 +
                            d2 * d2 * ms.var_r1) /
                           ms.sigma_det;
        out.s = to_double(s_exact);
        out.s_defined = true;
    }
    if (out.zw_defined && out.zdiff_defined) {
        out.m = std::max(std::abs(out.zdiff), out.zw);
        out.m_defined = true;
    }
    (void)g;
    return out;
}

ScanContext::ScanContext(const Graph& g, int n0, int n1) : g_(g), n0_(n0), n1_(n1) {
    const int n = g.node_count();
    if (!(1 <= n0 && n0 <= n1 && n1 <= n - 1))
        throw InputError("scan range must satisfy 1 <= n0 <= n1 <= n-1");
    MomentEngine engine(g);
    summaries_.reserve(n1 - n0 + 1);
    for (int t = n0; t <= n1; ++t) summaries_.push_back(moment_summary(engine, t));
}

StatSeries ScanContext::run(StatName stat, const std::vector<int>& positions) const {
    const int n = g_.node_count();
    const int m = g_.edge_count();

    // R1(t) = #edges with max position <= t, R2(t) = #edges with min > t;
    // one histogram pass serves every t.
    std::vector<int> max_hist(n + 1, 0), min_hist(n + 1, 0);
    for (const auto& [i, j] : g_.edges()) {
        auto [lo, hi] = std::minmax(positions[i], positions[j]);
        ++min_hist[lo];
        ++max_hist[hi];
    }

    StatSeries series;
    series.stat = stat;
    series.n0 = n0_;
    series.n1 = n1_;
    series.rows.reserve(n1_ - n0_ + 1);

    int cum_max = 0, cum_min = 0;
    int t_cursor = 0;
    auto advance_to = [&](int t) {
        while (t_cursor < t) {
            ++t_cursor;
            cum_max += max_hist[t_cursor];
            cum_min += min_hist[t_cursor];
        }
    };

    for (int t = n0_; t <= n1_; ++t) {
        advance_to(t);
        StatSeriesRow row;
        row.t = t;
        row.counts.r1 = cum_max;
        row.counts.r2 = m - cum_min;
        row.counts.r0 = m - row.counts.r1 - row.counts.r2;
        row.stats = statistics_at(g_, row.counts, summaries_[t - n0_]);

        bool defined = false;
        double value = row.stats.get(stat, defined);
        if (defined && (!series.any_defined || value > series.max_value)) {
            series.any_defined = true;
            series.max_value = value;
            series.argmax = t;
        }
        series.rows.push_back(row);
    }
    return series;
}

StatSeries scan(const Graph& g, StatName stat, int n0, int n1,
                const std::vector<int>* positions) {
    ScanContext ctx(g, n0, n1);
    StatSeries series =
        ctx.run(stat, positions ? *positions : identity_positions(g.node_count()));
    if (!series.any_defined) throw InputError("statistic undefined over the entire scan range");
    return series;
}

namespace {

int worker_count() {
    if (const char* env = std::getenv("GRAPHSCAN_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace

ScanResult permutation_pvalue(const Graph& g, StatName stat, int n0, int n1, int replicates,
                              std::uint64_t seed) {
    if (replicates < 1) throw InputError("replicates must be >= 1");
    ScanContext ctx(g, n0, n1);
    const int n = g.node_count();

    ScanResult result;
    result.stat = stat;
    result.replicates = replicates;
    result.seed = seed;
    result.observed = ctx.run(stat, identity_positions(n));
    if (!result.observed.any_defined)
        throw InputError("statistic undefined over the entire scan range");
    result.max_value = result.observed.max_value;
    result.argmax = result.observed.argmax;

    const int threads = std::min(worker_count(), replicates);
    std::vector<long long> counts(threads, 0);
    std::vector<std::thread> pool;
    std::atomic<int> next{1};
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            long long local = 0;
            for (;;) {
                int rep = next.fetch_add(1);
                if (rep > replicates) break;
                auto positions = random_positions(n, seed, static_cast<std::uint64_t>(rep));
                StatSeries s = ctx.run(stat, positions);
                if (s.any_defined && s.max_value >= result.max_value) ++local;
            }
            counts[w] = local;
        });
    }
    for (auto& th : pool) th.join();
    long long ge = std::accumulate(counts.begin(), counts.end(), 0ll);
    result.p_value = static_cast<double>(1 + ge) / (replicates + 1);
    return result;
}

DecompositionReport decomposition_check(const Graph& g, int t,
                                        const std::vector<int>* positions) {
    MomentEngine engine(g);
    MomentSummary ms = moment_summary(engine, t);
    auto pos = positions ? *positions : identity_positions(g.node_count());
    CountsAtT counts = compute_counts(g, pos, t);
    StatValues sv = statistics_at(g, counts, ms);

    DecompositionReport rep;
    rep.t = t;
    rep.defined = sv.z_defined && sv.zw_defined && sv.zdiff_defined && sv.s_defined;
    rep.z = sv.z;
    rep.zw = sv.zw;
    rep.zdiff = sv.zdiff;
    rep.s = sv.s;

    Rational cov_rw_rdiff = ms.p * ms.var_r1 - ms.q * ms.var_r2 + (ms.q - ms.p) * ms.cov_r1r2;
    rep.cov_rw_rdiff_zero = cov_rw_rdiff == 0;

    if (rep.defined) {
        double sw = std::sqrt(to_double(ms.var_rw));
        double sd = std::sqrt(to_double(ms.var_rdiff));
        double pq = to_double(ms.p - ms.q);
        double denom = std::sqrt(4 * sw * sw + pq * pq * sd * sd);
        double combo_printed = (2 * sw * sv.zw + pq * sd * sv.zdiff) / denom;
        double combo_negated = (2 * sw * sv.zw - pq * sd * sv.zdiff) / denom;
        rep.z_residual_printed = std::abs(sv.z - combo_printed);
        rep.z_residual_negated = std::abs(sv.z - combo_negated);
        rep.s_residual_squares = std::abs(sv.s - (sv.zw * sv.zw + sv.zdiff * sv.zdiff));
        rep.s_residual_linear = std::abs(sv.s - (sv.zw * sv.zw + sv.zdiff));
    }
    return rep;
}

}  // namespace graphscan
