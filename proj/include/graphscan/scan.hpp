#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphscan/graph.hpp"
#include "graphscan/moments.hpp"

namespace graphscan {

enum class StatName { kZ, kZw, kZdiff, kS, kM };

StatName stat_from_name(const std::string& name);  // z|zw|zdiff|s|m
std::string stat_name(StatName stat);

struct CountsAtT {
    int r0 = 0, r1 = 0, r2 = 0;
};

/// Edge counts for the split at t. positions[node] is the time slot of the
/// node (1-based); pass the identity for the observed ordering.
CountsAtT compute_counts(const Graph& g, const std::vector<int>& positions, int t);
std::vector<int> identity_positions(int n);

struct StatValues {
    double z = 0, zw = 0, zdiff = 0, s = 0, m = 0;
    bool z_defined = false, zw_defined = false, zdiff_defined = false, s_defined = false,
         m_defined = false;

    double get(StatName stat, bool& defined) const;
};

/// Standardized statistics at one t from exact permutation-null moments.
StatValues statistics_at(const Graph& g, const CountsAtT& counts, const MomentSummary& ms);

struct StatSeriesRow {
    int t = 0;
    CountsAtT counts;
    StatValues stats;
};

struct StatSeries {
    StatName stat = StatName::kZw;
    int n0 = 0, n1 = 0;
    std::vector<StatSeriesRow> rows;
    bool any_defined = false;
    double max_value = 0;  // over defined t of the scanned statistic
    int argmax = 0;        // smallest maximizing t
};

/// Series of all statistics over t in [n0, n1]; max/argmax taken for `stat`
/// over the t where it is defined. Undefined t are kept in rows (flagged)
/// but excluded from the maximum.
StatSeries scan(const Graph& g, StatName stat, int n0, int n1,
                const std::vector<int>* positions = nullptr);

/// Precomputed per-t moment summaries, for repeated scans on one graph.
class ScanContext {
public:
    ScanContext(const Graph& g, int n0, int n1);
    StatSeries run(StatName stat, const std::vector<int>& positions) const;
    const Graph& graph() const { return g_; }
    int n0() const { return n0_; }
    int n1() const { return n1_; }
    const std::vector<MomentSummary>& summaries() const { return summaries_; }

private:
    const Graph& g_;
    int n0_, n1_;
    std::vector<MomentSummary> summaries_;
};

struct ScanResult {
    StatName stat;
    double max_value = 0;
    int argmax = 0;
    double p_value = 1;
    int replicates = 0;
    std::uint64_t seed = 0;
    StatSeries observed;
};

/// Permutation p-value for the scan maximum with the add-one convention
/// p = (1 + #{replicate max >= observed}) / (replicates + 1). Node labels are
/// permuted (Philox stream per replicate), the graph stays fixed; identical
/// seeds give identical results regardless of thread count.
ScanResult permutation_pvalue(const Graph& g, StatName stat, int n0, int n1, int replicates,
                              std::uint64_t seed);

/// Numeric check of the process decompositions at one t: the printed linear
/// combination for Z against Zw/Zdiff (both sign readings of the Zdiff
/// coefficient) and the two candidate identities for S.
struct DecompositionReport {
    int t = 0;
    bool defined = false;       // all of Z, Zw, Zdiff, S defined at t
    double z = 0, zw = 0, zdiff = 0, s = 0;
    double z_residual_printed = 0;  // coefficient (p-q) on Zdiff, as printed
    double z_residual_negated = 0;  // coefficient (q-p)
    double s_residual_squares = 0;  // |S - (Zw^2 + Zdiff^2)|
    double s_residual_linear = 0;   // |S - (Zw^2 + Zdiff)|
    bool cov_rw_rdiff_zero = false; // exact rational identity Cov(Rw, Rdiff) == 0
};

DecompositionReport decomposition_check(const Graph& g, int t,
                                        const std::vector<int>* positions = nullptr);

}  // namespace graphscan
