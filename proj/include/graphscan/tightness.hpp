#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphscan/builders.hpp"
#include "graphscan/census.hpp"
#include "graphscan/graph.hpp"
#include "graphscan/moments.hpp"

namespace graphscan {

enum class BasicProcess { kZw, kZdiff };

BasicProcess process_from_name(const std::string& name);  // zw|zdiff
std::string process_name(BasicProcess p);

/// Exact Kolmogorov-Chentsov fourth moment
///     E[(X(v) - X(u))^2 (X(w) - X(v))^2]
/// for the standardized process X at thresholds r = floor(nu), s = floor(nv),
/// t = floor(nw). Standardizing divides by square roots of the rational
/// variances, so the exact value lives in Q extended by sqrt(Vr), sqrt(Vs),
/// sqrt(Vt): value = sum over parities e of coeff[e] / sqrt(Vr^e0 Vs^e1 Vt^e2).
struct KcExact {
    std::array<Rational, 8> coeff{};  // index e0 + 2*e1 + 4*e2
    Rational var_r, var_s, var_t;     // radicands: Var of the weighted count
    int r = 0, s = 0, t = 0;
    bool collapsed = false;  // floor(nu)==floor(nv) or floor(nv)==floor(nw)

    double value() const;
    bool is_zero() const;
    bool same_value(const KcExact& other) const;  // exact comparison
};

KcExact kc_moment(MomentEngine& engine, BasicProcess X, const Rational& u, const Rational& v,
                  const Rational& w, MomentRoute route = MomentRoute::kAuto);
KcExact kc_moment(const Graph& g, BasicProcess X, const Rational& u, const Rational& v,
                  const Rational& w, MomentRoute route = MomentRoute::kAuto);

/// Seeded Monte-Carlo permutation estimate of the same quantity, with its
/// standard error. Deterministic for a fixed seed.
struct KcMonteCarlo {
    double estimate = 0;
    double std_error = 0;
    long replicates = 0;
    std::uint64_t seed = 0;
};
KcMonteCarlo kc_moment_mc(const Graph& g, BasicProcess X, const Rational& u, const Rational& v,
                          const Rational& w, long replicates, std::uint64_t seed);

/// Printed leading-term approximation of the KC moment for Z_w. The printed
/// numerator carries one unreadable exponent on the x8 term; both candidate
/// readings (n * x8 and n^2 * x8) are evaluated.
struct ZwLeadingTerms {
    Rational den;
    Rational num_x8_n1, num_x8_n2;
    Rational ratio_x8_n1, ratio_x8_n2;  // num / den, 0 when den == 0
    bool den_degenerate = false;        // k n^2 - sum deg^2 <= 0 (star-like)
};
ZwLeadingTerms zw_leading_terms(const ConfigCensus& census, int n, const Rational& u,
                                const Rational& v, const Rational& w);
ZwLeadingTerms zw_leading_terms(const Graph& g, const Rational& u, const Rational& v,
                                const Rational& w);

/// Printed leading-term approximation for Z_diff (radicals force doubles).
struct ZdiffLeadingTerms {
    std::array<double, 6> k_terms{};
    double num = 0;
    double den = 0;
    double ratio = 0;
    bool den_degenerate = false;  // V_G == 0 (regular graph)
};
ZdiffLeadingTerms zdiff_leading_terms(const ConfigCensus& census, int n, double u, double v,
                                      double w);
ZdiffLeadingTerms zdiff_leading_terms(const Graph& g, double u, double v, double w);

/// Grid verification of the convexity inequalities used by the tightness
/// proof. Four checks: the three square-root inequalities against (v-u) and
/// positivity of the printed second derivatives g'' and h''.
struct InequalityReport {
    std::array<double, 4> max_violation{};  // signed; <= slack passes
    std::array<bool, 4> pass{};
    long grid_points = 0;
    double step = 0;
    double slack = 0;
    bool all_pass() const { return pass[0] && pass[1] && pass[2] && pass[3]; }
};
InequalityReport inequality_suite(double step = 1e-3, double slack = 1e-12);

/// Graph-condition diagnostics for Theorems on Zw / Zdiff tightness.
struct ConditionRow {
    int n = 0;
    long long edges = 0;
    double k = 0;                  // |G| / n
    Integer sum_deg2;              // sum |G_i|^2
    Rational v_g;                  // sum |G_i|^2 - 4|G|^2/n
    double max_centered_degree = 0;
    double thm31_ratio = 0;        // sum deg^2 / (k n^2), should trend to 0
    double thm32_ratio = 0;        // V_G / k^2, should stay bounded below
};
struct ConditionReport {
    std::string family;
    std::vector<ConditionRow> rows;
    bool thm31_ratio_decreasing = false;
    bool thm31_violation_flag = false;  // ratio stays near 1 (e.g. star)
    bool thm32_violation_flag = false;  // V_G == 0 somewhere (regular graph)
};

/// Deterministic graph families: mst-gauss2d, knn1-gauss2d, star, cycle.
Graph family_graph(const std::string& family, int n, std::uint64_t seed);
ConditionReport condition_diagnostics(const std::string& family, const std::vector<int>& sizes,
                                      std::uint64_t seed);

DataMatrix sample_gauss2d(int n, std::uint64_t seed);
DataMatrix sample_unif1d(int n, std::uint64_t seed);
DataMatrix sample_gauss1d(int n, std::uint64_t seed);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);

/// One grid point of a tightness report.
struct TightnessPoint {
    Rational u, v, w;
    bool defined = false;    // thresholds in range and variances positive
    bool collapsed = false;
    double kc_value = 0;
    double ratio = 0;        // kc / (w-u)^2
    double leading_ratio_a = 0, leading_ratio_b = 0;  // Zw: two x8 readings
    bool leading_degenerate = false;
    std::optional<KcMonteCarlo> mc;
};

struct TightnessReport {
    BasicProcess stat;
    double eps = 0.1;
    std::vector<TightnessPoint> points;
    ConditionRow diagnostics;
    double max_ratio = 0;  // max over defined points of kc/(w-u)^2
};

TightnessReport tightness_report(const Graph& g, BasicProcess X, int grid_values, double eps,
                                 long mc_replicates, std::uint64_t seed);

}  // namespace graphscan
