#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "graphscan/census.hpp"
#include "graphscan/graph.hpp"
#include "graphscan/rational.hpp"

namespace graphscan {

/// One factor of a product moment E(prod R_side(threshold)): side 1 counts
/// edges with both endpoints at positions <= threshold, side 2 with both
/// endpoints > threshold.
struct MomentFactor {
    int threshold = 0;
    int side = 1;
};
using MomentSpec = std::vector<MomentFactor>;

enum class MomentRoute {
    kAuto,       // enumeration when cheap, census otherwise
    kEnumerate,  // sum over ordered edge m-tuples; refuses beyond budget
    kCensus,     // configuration-census assembly; any graph size
};

/// Exact product moments under the permutation null. Caches event
/// probabilities and finished specs, so keep one engine per graph when
/// evaluating many moments.
class MomentEngine {
public:
    explicit MomentEngine(const Graph& g);

    const Graph& graph() const { return g_; }
    const SubgraphCounts& sub() const { return sub_; }

    Rational product_moment(const MomentSpec& spec, MomentRoute route = MomentRoute::kAuto);

    /// Tuple budget for the enumeration route (|G|^m above this refuses).
    static constexpr long long kEnumerationBudget = 20'000'000;

private:
    Rational enumerate_route(const MomentSpec& spec);
    Rational census_route(const MomentSpec& spec);
    Rational cached_event(const std::vector<std::pair<int, int>>& intervals);

    const Graph& g_;
    SubgraphCounts sub_;
    std::unordered_map<std::uint64_t, std::vector<std::pair<std::vector<std::pair<int, int>>, Rational>>>
        event_cache_;
    std::unordered_map<std::string, Rational> spec_cache_;
};

Rational product_moment(const Graph& g, const MomentSpec& spec,
                        MomentRoute route = MomentRoute::kAuto);

struct R0Moments {
    Rational mean;
    Rational var;
};
R0Moments r0_moments(const Graph& g, int t);

/// Permutation-null mean/variance/covariance block at a candidate t, all
/// exact. var_rw uses the weights p = (n-t-1)/(n-2), q = (t-1)/(n-2).
struct MomentSummary {
    int t = 0;
    Rational e_r0, e_r1, e_r2;
    Rational var_r0, var_r1, var_r2, cov_r1r2;
    Rational p, q;
    Rational var_rw, var_rdiff;
    Rational sigma_det;  // det of the (R1, R2) covariance matrix
    bool z_defined = false;      // Var(R0) > 0
    bool zw_defined = false;     // Var(Rw) > 0
    bool zdiff_defined = false;  // Var(Rdiff) > 0
    bool s_defined = false;      // covariance matrix invertible
};
MomentSummary moment_summary(const Graph& g, int t);
MomentSummary moment_summary(MomentEngine& engine, int t);

/// E(R1^2(r) R1(s) R1(t)) assembled configuration by configuration from the
/// printed per-configuration probabilities.
Rational example1_closed_form(int n, int r, int s, int t, const ConfigCensus& census);

/// E(R2(r) R1(s) R2(s) R1(t)); configurations 1, 2, 4, 6, 9 contribute 0.
Rational example2_closed_form(int n, int r, int s, int t, const ConfigCensus& census);

/// The per-configuration probabilities behind the two closed forms, and the
/// multiplier pairing each with its configuration count.
Rational example1_config_probability(int cfg, int n, int r, int s, int t);
Rational example2_config_probability(int cfg, int n, int r, int s, int t);
std::array<Integer, 19> example_config_bases(const ConfigCensus& census);

}  // namespace graphscan
