#include "graphscan/tightness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "graphscan/rng.hpp"
#include "graphscan/scan.hpp"

namespace graphscan {

BasicProcess process_from_name(const std::string& name) {
    if (name == "zw") return BasicProcess::kZw;
    if (name == "zdiff") return BasicProcess::kZdiff;
    throw InputError("unknown basic process '" + name + "' (expected zw|zdiff)");
}

std::string process_name(BasicProcess p) {
    return p == BasicProcess::kZw ? "zw" : "zdiff";
}

double KcExact::value() const {
    double vr = to_double(var_r), vs = to_double(var_s), vt = to_double(var_t);
    double acc = 0;
    for (int e = 0; e < 8; ++e) {
        double scale = 1.0;
        if (e & 1) scale *= std::sqrt(vr);
        if (e & 2) scale *= std::sqrt(vs);
        if (e & 4) scale *= std::sqrt(vt);
        acc += to_double(coeff[e]) / scale;
    }
    return acc;
}

bool KcExact::is_zero() const {
    for (const auto& c : coeff)
        if (c != 0) return false;
    return true;
}

bool KcExact::same_value(const KcExact& other) const {
    if (is_zero() && other.is_zero()) return true;
    if (var_r != other.var_r || var_s != other.var_s || var_t != other.var_t) return false;
    for (int e = 0; e < 8; ++e)
        if (coeff[e] != other.coeff[e]) return false;
    return true;
}

namespace {

int floor_times(int n, const Rational& u) {
    Integer num = u.get_num() * n;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), u.get_den().get_mpz_t());
    return static_cast<int>(q.get_si());
}

struct ProcessWeights {
    Rational w1, w2;  // coefficients on R1(t), R2(t)
};

ProcessWeights weights_at(BasicProcess X, int n, int t) {
    if (X == BasicProcess::kZdiff) return {Rational(1), Rational(-1)};
    if (n <= 2) throw InputError("Zw needs n >= 3");
    return {make_rational(n - t - 1, n - 2), make_rational(t - 1, n - 2)};
}

/// Raw and centered product moments of the weighted count process at three
/// thresholds, all exact.
class WeightedMoments {
public:
    WeightedMoments(MomentEngine& engine, BasicProcess X, std::array<int, 3> thresholds,
                    MomentRoute route)
        : engine_(engine), thr_(thresholds), route_(route) {
        const int n = engine.graph().node_count();
        for (int i = 0; i < 3; ++i) w_[i] = weights_at(X, n, thr_[i]);
        mu_[0] = raw({1, 0, 0});
        mu_[1] = raw({0, 1, 0});
        mu_[2] = raw({0, 0, 1});
        var_[0] = raw({2, 0, 0}) - mu_[0] * mu_[0];
        var_[1] = raw({0, 2, 0}) - mu_[1] * mu_[1];
        var_[2] = raw({0, 0, 2}) - mu_[2] * mu_[2];
    }

    const Rational& mean(int i) const { return mu_[i]; }
    const Rational& variance(int i) const { return var_[i]; }

    Rational raw(std::array<int, 3> e) {
        auto it = raw_cache_.find(e);
        if (it != raw_cache_.end()) return it->second;
        Rational total(0);
        for (int a = 0; a <= e[0]; ++a)
            for (int b = 0; b <= e[1]; ++b)
                for (int c = 0; c <= e[2]; ++c) {
                    Rational coeff = Rational(binomial_exact(e[0], a)) *
                                     Rational(binomial_exact(e[1], b)) *
                                     Rational(binomial_exact(e[2], c));
                    for (int i = 0; i < a; ++i) coeff *= w_[0].w1;
                    for (int i = 0; i < e[0] - a; ++i) coeff *= w_[0].w2;
                    for (int i = 0; i < b; ++i) coeff *= w_[1].w1;
                    for (int i = 0; i < e[1] - b; ++i) coeff *= w_[1].w2;
                    for (int i = 0; i < c; ++i) coeff *= w_[2].w1;
                    for (int i = 0; i < e[2] - c; ++i) coeff *= w_[2].w2;
                    if (coeff == 0) continue;

                    MomentSpec spec;
                    auto push = [&spec](int count, int t, int side) {
                        for (int i = 0; i < count; ++i) spec.push_back({t, side});
                    };
                    push(a, thr_[0], 1);
                    push(e[0] - a, thr_[0], 2);
                    push(b, thr_[1], 1);
                    push(e[1] - b, thr_[1], 2);
                    push(c, thr_[2], 1);
                    push(e[2] - c, thr_[2], 2);
                    Rational pm =
                        spec.empty() ? Rational(1) : engine_.product_moment(spec, route_);
                    total += coeff * pm;
                }
        raw_cache_.emplace(e, total);
        return total;
    }

    Rational centered(std::array<int, 3> e) {
        Rational total(0);
        for (int a = 0; a <= e[0]; ++a)
            for (int b = 0; b <= e[1]; ++b)
                for (int c = 0; c <= e[2]; ++c) {
                    Rational term = Rational(binomial_exact(e[0], a)) *
                                    Rational(binomial_exact(e[1], b)) *
                                    Rational(binomial_exact(e[2], c)) * raw({a, b, c});
                    for (int i = 0; i < e[0] - a; ++i) term *= -mu_[0];
                    for (int i = 0; i < e[1] - b; ++i) term *= -mu_[1];
                    for (int i = 0; i < e[2] - c; ++i) term *= -mu_[2];
                    total += term;
                }
        return total;
    }

private:
    MomentEngine& engine_;
    std::array<int, 3> thr_;
    MomentRoute route_;
    std::array<ProcessWeights, 3> w_;
    std::array<Rational, 3> mu_;
    std::array<Rational, 3> var_;
    std::map<std::array<int, 3>, Rational> raw_cache_;
};

// The nine centered terms of E[(X(s*) - X(r*))^2 (X(t*) - X(s*))^2] as
// exponents on (X(r), X(s), X(t)) with their multipliers.
constexpr std::array<std::pair<std::array<int, 3>, int>, 9> kKcExpansion{{
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

}  // namespace

KcExact kc_moment(MomentEngine& engine, BasicProcess X, const Rational& u, const Rational& v,
                  const Rational& w, MomentRoute route) {
    if (!(u > 0 && u < v && v < w && w < 1))
        throw InputError("kc_moment needs 0 < u < v < w < 1");
    const int n = engine.graph().node_count();
    KcExact out;
    out.r = floor_times(n, u);
    out.s = floor_times(n, v);
    out.t = floor_times(n, w);
    out.var_r = out.var_s = out.var_t = Rational(1);
    if (out.r == out.s || out.s == out.t) {
        out.collapsed = true;  // one squared increment vanishes identically
        return out;
    }
    if (out.r < 1 || out.t > n - 1)
        throw InputError("kc_moment thresholds fall outside 1..n-1");

    WeightedMoments wm(engine, X, {out.r, out.s, out.t}, route);
    out.var_r = wm.variance(0);
    out.var_s = wm.variance(1);
    out.var_t = wm.variance(2);
    if (out.var_r == 0 || out.var_s == 0 || out.var_t == 0)
        throw InputError("basic process undefined (zero variance) at a kc threshold");

    for (const auto& [e, mult] : kKcExpansion) {
        Rational c = Rational(mult) * wm.centered(e);
        // split sigma^e into the rational part V^(e/2) and a leftover sqrt
        c /= rational_pow(out.var_r, e[0] / 2) * rational_pow(out.var_s, e[1] / 2) *
             rational_pow(out.var_t, e[2] / 2);
        int parity = (e[0] % 2) + 2 * (e[1] % 2) + 4 * (e[2] % 2);
        out.coeff[parity] += c;
    }
    return out;
}

KcExact kc_moment(const Graph& g, BasicProcess X, const Rational& u, const Rational& v,
                  const Rational& w, MomentRoute route) {
    MomentEngine engine(g);
    return kc_moment(engine, X, u, v, w, route);
}

KcMonteCarlo kc_moment_mc(const Graph& g, BasicProcess X, const Rational& u, const Rational& v,
                          const Rational& w, long replicates, std::uint64_t seed) {
    if (replicates < 2) throw InputError("kc_moment_mc needs at least 2 replicates");
    if (!(u > 0 && u < v && v < w && w < 1))
        throw InputError("kc_moment_mc needs 0 < u < v < w < 1");
    const int n = g.node_count();
    int r = floor_times(n, u), s = floor_times(n, v), t = floor_times(n, w);

    KcMonteCarlo out;
    out.replicates = replicates;
    out.seed = seed;
    if (r == s || s == t) return out;  // exact zero, no sampling needed
    if (r < 1 || t > n - 1) throw InputError("kc thresholds fall outside 1..n-1");

    MomentEngine engine(g);
    std::array<int, 3> thr{r, s, t};
    std::array<double, 3> mu, sigma, w1, w2;
    for (int i = 0; i < 3; ++i) {
        MomentSummary ms = moment_summary(engine, thr[i]);
        ProcessWeights pw = weights_at(X, n, thr[i]);
        w1[i] = to_double(pw.w1);
        w2[i] = to_double(pw.w2);
        mu[i] = w1[i] * to_double(ms.e_r1) + w2[i] * to_double(ms.e_r2);
        double var = X == BasicProcess::kZw ? to_double(ms.var_rw) : to_double(ms.var_rdiff);
        if (var <= 0) throw InputError("basic process undefined at a kc threshold");
        sigma[i] = std::sqrt(var);
    }

    double sum = 0, sum_sq = 0;
    for (long rep = 1; rep <= replicates; ++rep) {
        auto positions = random_positions(n, seed, static_cast<std::uint64_t>(rep));
        std::array<double, 3> z;
        for (int i = 0; i < 3; ++i) {
            CountsAtT c = compute_counts(g, positions, thr[i]);
            z[i] = (w1[i] * c.r1 + w2[i] * c.r2 - mu[i]) / sigma[i];
        }
        double val = (z[1] - z[0]) * (z[1] - z[0]) * (z[2] - z[1]) * (z[2] - z[1]);
        sum += val;
        sum_sq += val * val;
    }
    double mean = sum / replicates;
    double var = std::max(0.0, sum_sq / replicates - mean * mean);
    out.estimate = mean;
    out.std_error = std::sqrt(var / replicates);
    return out;
}

// ---------------------------------------------------------------------------
// Leading-term transcriptions.
// ---------------------------------------------------------------------------

ZwLeadingTerms zw_leading_terms(const ConfigCensus& census, int n, const Rational& u,
                                const Rational& v, const Rational& w) {
    const SubgraphCounts& sc = census.sub;
    const Rational one(1);
    Rational N(static_cast<long>(n));
    Rational m(sc.m);
    Rational p2(sc.p2), p3(sc.p3), p4(sc.p4);
    Rational x3(census.x[2]), x7(census.x[6]), x8(census.x[7]), x9(census.x[8]);
    Rational x14(census.x[13]);
    Rational d_sum(sc.d_sum);

    Rational cw1 = 4 * v * w * (1 - v) * (1 - u) + 2 * (v - u) * (w - v);
    Rational cw2 = 8 * v * w * (v - u) * (1 - u) * (1 - v);
    Rational cw3 = -2 * (v - u) * (w - v) + 2 * v * (1 - u) * (1 + v) +
                   v * w * (5 * u - 7) * (1 - v);
    Rational cw4 = 8 * v * (w - v) - 8 * w + 2 * v * (2 + 9 * w) * (1 - u) * (1 - v);
    Rational cw5 = 8 * (w - u * v) + (48 - 56 * v) * (w - v) +
                   16 * (3 * v * v + w) * (1 - u) - 4 * v * w * (49 - 37 * u) * (1 - v);
    Rational cw6 = -4 * (v - u) * (w - v) - 8 * v * w * (1 - v) * (1 - u);
    Rational cw7 = 2 * (w - u * v) + 2 * (1 - 2 * v) * (w - v) +
                   v * w * (9 * u - 11) * (1 - v) + 2 * v * v * (1 - u);
    Rational cw8 = 16 * (v - u) * (w - v) + 32 * v * w * (1 - v) * (1 - u);
    Rational cw9 = 2 * (28 * v - 23) * (w - v) - 2 * (23 * v * v + 9 * w) * (1 - u) -
                   2 * v * w * (72 * u - 95) * (1 - v) + 10 * (u * v - w);
    Rational cw10 = -8 * v * w * (1 - u) * (1 - v) - 4 * (w - v) * (v - u);
    Rational cw11 = 4 * v * w * (1 - u) * (1 - v) + 2 * (w - v) * (v - u);
    Rational cw12 = 8 * v * (5 * v * (1 - v) - (1 - u) * (12 * v * v - 7 * v + 2)) -
                    (w - v) * (24 * (1 - u) + 8 * (1 - v) * (12 * u * v - 17 * v + 4));

    // k n^2 = |G| n under k = |G| / n
    Rational kn2 = m * N;
    Rational common = cw1 * kn2 * kn2 + cw2 * x14 + cw3 * p4 + cw4 * N * p3 +
                      cw5 * d_sum + cw6 * kn2 * p2 + cw7 * N * N * p2 + cw8 * m * x3 +
                      cw9 * N * x3 + cw10 * N * x7 + cw12 * N * x9;

    ZwLeadingTerms out;
    Rational prefactor = (w - v) * (v - u);
    out.num_x8_n1 = prefactor * (common + cw11 * N * x8);
    out.num_x8_n2 = prefactor * (common + cw11 * N * N * x8);
    out.den = v * v * w * w * (kn2 - p2) * (kn2 - p2) * (one - u) * (one - u) *
              (one - v) * (one - v);
    out.den_degenerate = kn2 - p2 <= 0;
    if (!out.den_degenerate && out.den != 0) {
        out.ratio_x8_n1 = out.num_x8_n1 / out.den;
        out.ratio_x8_n2 = out.num_x8_n2 / out.den;
    }
    return out;
}

ZwLeadingTerms zw_leading_terms(const Graph& g, const Rational& u, const Rational& v,
                                const Rational& w) {
    return zw_leading_terms(census_closed_form(g), g.node_count(), u, v, w);
}

ZdiffLeadingTerms zdiff_leading_terms(const ConfigCensus& census, int n, double u, double v,
                                      double w) {
    const SubgraphCounts& sc = census.sub;
    const double m = to_double(Rational(sc.m));
    const double N = n;
    const double k = m / N;
    const double p2 = to_double(Rational(sc.p2));
    const double p3 = to_double(Rational(sc.p3));
    const double p4 = to_double(Rational(sc.p4));
    const double x14 = to_double(Rational(census.x[13]));
    const double d_sum = to_double(Rational(sc.d_sum));
    const double v_g = p2 - 4 * m * m / N;

    const double eu = u * (1 - u), ev = v * (1 - v), ew = w * (1 - w);
    const double su = std::sqrt(eu), sv = std::sqrt(ev), sw = std::sqrt(ew);
    const double vu = v - u, wv = w - v, wu = w - u;

    // K1: coefficient of k^4 n^2
    double cd1 = 64 * v * (1 - v) * su * (u * (1 - v) + 2 * v * (1 - u) - 3 * su * sv);
    double cd2 = 32 * su * (12 * u - 8) * vu * vu * vu +
                 192 * su * (8 * u * u - 9 * u + 2 + su * (2 * sv - sw)) * vu * vu +
                 32 *
                     (2 * su * (36 * u * u * u - 57 * u * u + 24 * u - 2) -
                      18 * u * sv * (1 - u) * (1 - 2 * u) +
                      2 * u * sw * (1 - u) * (5 - 9 * u) + 2 * su * sv * sw * (3 * u - 2)) *
                     vu -
                 64 * u * su * (24 * u * u - 25 * u + 5) * (1 - u) +
                 192 * u * sv * (1 - u) * (6 * u * u - 6 * u + 1) -
                 64 * u * sw * (1 - u) * (9 * u * u - 10 * u + 2) +
                 32 * su * sv * sw * (12 * u * u - 14 * u + 3);
    double cd3 = 64 * eu * (sw * (3 * u - 2) - 3 * su * (1 - 2 * u));
    double cd4 = 64 * ev * su;
    double root_uv = std::sqrt(u * (1 - v));
    double root_vu = std::sqrt(v * (1 - u));
    double k1 = cd1 * wv * wv + cd2 * vu * wv + cd3 * su * (su - sv) * wv +
                cd4 * sv * (sv - sw) *
                    (root_uv * (root_vu - root_uv) - 2 * root_vu * (root_vu - root_uv));

    // K2: coefficient of k^2 n sum deg^2
    double cd5 = 16 * (-6 * u * w + 4 * w + 2 * u - 1);
    double cd6 = 16 * (-12 * u * u + 14 * u - 6 * su * sv - 3);
    double cd7 = 16 * (-2 * sw * (2 - 3 * u) - 2 * su * (1 - 3 * u));
    double cd8 = 32 * (3 * u - 2) * su;
    double cd9 = -96 * sw;
    double cd10 = 32 * su;
    double root_uw = std::sqrt(u * (1 - w));
    double root_wu = std::sqrt(w * (1 - u));
    double k2 = su * sv * sw *
                (cd5 * vu * vu + cd6 * wu * vu + cd7 * (su - sv) * vu + cd8 * (su - sw) * vu +
                 cd9 * su * (su - sv) * (su - sv) +
                 cd10 * (su - sv) *
                     (root_uw * (root_wu - root_uw) - 2 * root_wu * (root_wu - root_uw)));

    // K3: coefficient of sum deg^4
    double cd11 = -2 * v * su *
                      (3 * u + 5 * v - 8 * u * v + 6 * u * v * v - 4 * v * v - 2) -
                  4 * eu * sv * (3 * v * v - 3 * v + 1);
    double cd12 = 8 * su * (2 - 3 * u) * vu * vu * vu * wv -
                  (4 * su * (24 * u * u - 27 * u + 7) + 24 * eu * sv + 12 * eu * sw) * vu *
                      vu * wv +
                  (-2 * su * (72 * u * u * u - 114 * u * u + 56 * u - 9) +
                   36 * u * sv * (2 * u * u - 3 * u + 1) -
                   4 * u * sw * (9 * u * u - 14 * u + 5) - 4 * su * sv * sw * (3 * u - 2)) *
                      vu * wv -
                  2 * su * (48 * u * u * u * u - 98 * u * u * u + 70 * u * u - 21 * u + 2) +
                  4 * u * sv * (18 * u * u * u - 36 * u * u + 23 * u - 5) -
                  2 * u * sw * (18 * u * u * u - 38 * u * u + 25 * u - 5) -
                  su * sv * sw * (24 * u * u - 28 * u + 7) -
                  2 * sw * (1 - u - v) * (6 * u * u * u - 10 * u * u + 5 * u - 1);
    double cd13 = -4 * su * (14 * u * u - (6 * u - 1) * (u * u + u + 1));
    double cd14 = 2 * sw * (6 * u * u * u - 10 * u * u + 5 * u - 1);
    double cd15 = 4 * sv * (3 * v * v - 3 * v + 1);
    double cd16 = 2 * v * su * (6 * v * v - 8 * v + 3);
    double k3 = cd11 * wv * wv + cd12 * vu * wv + cd13 * su * (su - sv) * wv +
                cd14 * sv * (sv - su) * wv + cd15 * sv * (sv - sw) * su * (su - sv) +
                cd16 * sv * (sv - sw) * vu;

    // K4: coefficient of k sum deg^3
    double cd17 = su * (16 * u * v * (12 * v * v - 16 * v + 5) -
                        16 * v * (8 * v * v - 9 * v + 2)) +
                  32 * eu * sv * (6 * v * v - 6 * v + 1);
    double cd18 = 128 * su * (3 * u - 2) * vu * vu * vu +
                  (32 * su * (48 * u * u - 54 * u + 13) + 384 * eu * sv - 192 * eu * sw) *
                      vu * vu +
                  (16 * su * (144 * u * u * u - 228 * u * u + 104 * u - 13) -
                   576 * sv * u * (2 * u * u - 3 * u + 1) +
                   64 * sw * u * (9 * u * u - 14 * u + 5) + 64 * su * sv * sw * (3 * u - 2)) *
                      vu +
                  16 * su * (96 * u * u * u * u - 196 * u * u * u + 130 * u * u - 31 * u + 2);
    double cd19 = 8 * (su * (1 - 2 * u) * (4 * (1 - 6 * u * (1 - u))) +
                       2 * sw * (1 - u) * (1 - 8 * u + 3 * u * u));
    double cd20 = (sv - sw) * (-192 * eu * vu * vu +
                               64 *
                                   (6 * u - 2 * su * sv - 18 * u * u + 12 * u * u * u +
                                    3 * su * sv * u) *
                                   vu -
                               32 * eu * (7 - 36 * u * (1 - u)) +
                               16 * su * sv * (9 - 40 * u + 36 * u * u));
    double cd21 = 32 * su * (1 - 2 * u) * (1 - 12 * u + 12 * u * u) +
                  16 * sv *
                      (u * (36 * u * u - 56 * u + 23) - 2 + 5 * u - 14 * u * u +
                       9 * u * u * u);
    double cd22 = 32 * su * (1 - 6 * u + 6 * u * u);
    double k4 = cd17 * wv * wv + cd18 * wv * vu + cd19 * su * (su - sv) * wv +
                cd20 * vu * vu + cd21 * su * (sv - sw) * vu +
                cd22 * eu * (su - sv) * (sv - sw);

    // K5: coefficient of x14
    double cd23 = 4 * v * (1 - v) * ((u + 2 * v - 3 * u * v) * su - 3 * sv * u * (1 - u));
    double cd24 = -2 * sv *
                  ((6 * u * sw - 6 * su + 12 * su * v) * (su - sv) -
                   2 * (1 - 2 * v) * (u + 2 * v - 3 * u * v) + 12 * u * (1 - u) * (1 - 2 * v) +
                   2 * su * sw * (-6 * u + 3 * v - 2));
    double cd25 = -2 * su * sv *
                  ((4 * sw - 8 * su + 12 * su * u) * vu + 2 * su * (2 * u - 1) * (3 * u - 2) +
                   sw * (8 * u - 3) - 6 * eu * sw);
    double cd26 = -4 * sv *
                  ((-3 * u * u + 3 * u) * vu + 2 * su * sv - 3 * u + 9 * u * u -
                   6 * u * u * u - 3 * u * su * sv);
    double cd27 = 12 * sv * u * (1 - u);
    double k5 = cd23 * wv * wv + cd24 * su * (su - sv) * wv + cd25 * vu * wv +
                cd26 * sv * (sv - sw) * vu + cd27 * sv * (sv - sw) * su * (su - sv);

    // K6: coefficient of the ordered-edge sum of (d_i-1)^2 (d_j-1)
    double cd28 = 16 * su * sw * (su + 2 * sw - 3 * sw * u - 3 * su * w) * vu * vu -
                  8 * su * sw *
                      (-2 * su * (3 * u + 5 * w - 9 * u * w - 1) +
                       sv * (2 * u + 4 * w - 6 * u * w - 1) +
                       2 * sw * (9 * u * u - 10 * u + 2) + 6 * su * sv * sw) *
                      vu -
                  8 * sw *
                      (-2 * u * (1 - u) * w * (-9 * u * u + 10 * u - 2) +
                       2 * u * u * (1 - u) * (2 - 3 * u) -
                       su * sv *
                           (3 * u + 3 * w - 14 * u * w + 12 * u * u * w - 4 * u * u) +
                       2 * su * sw * u * (9 * u * u - 14 * u + 5) -
                       6 * sv * sw * u * (2 * u * u - 3 * u + 1));
    double cd29 = -su * (48 * u * w * (1 - u) * (1 - w) +
                         16 * su * sw * (u * (1 - w) + 2 * w * (1 - u)));
    double k6 = cd28 * vu + cd29 * su * (su - sv);

    ZdiffLeadingTerms out;
    out.k_terms = {k1, k2, k3, k4, k5, k6};
    out.num = k1 * k * k * k * k * N * N + k2 * k * k * N * p2 + k3 * p4 + k4 * k * p3 +
              k5 * x14 + k6 * d_sum;
    out.den = (N * v_g) * (N * v_g) * w * (1 - u) * eu * ev * ev * ev * ew;
    out.den_degenerate = v_g <= 0;
    out.ratio = out.den_degenerate || out.den == 0 ? 0 : out.num / out.den;
    return out;
}

ZdiffLeadingTerms zdiff_leading_terms(const Graph& g, double u, double v, double w) {
    return zdiff_leading_terms(census_closed_form(g), g.node_count(), u, v, w);
}

InequalityReport inequality_suite(double step, double slack) {
    InequalityReport rep;
    rep.step = step;
    rep.slack = slack;
    rep.max_violation = {-1e300, -1e300, -1e300, -1e300};

    for (double u = step; u < 1 - step; u += step) {
        double eu = u * (1 - u), su = std::sqrt(eu);
        for (double v = u + step; v < 1; v += step) {
            double ev = v * (1 - v), sv = std::sqrt(ev);
            double bound = v - u;
            double lhs1 = std::abs(su * (su - sv));
            double lhs2 = std::sqrt(v * (1 - u)) *
                          (std::sqrt(v * (1 - u)) - std::sqrt(u * (1 - v)));
            double lhs3 = std::sqrt(u * (1 - v)) *
                          (std::sqrt(v * (1 - u)) - std::sqrt(u * (1 - v)));
            rep.max_violation[0] = std::max(rep.max_violation[0], lhs1 - bound);
            rep.max_violation[1] = std::max(rep.max_violation[1], lhs2 - bound);
            rep.max_violation[2] = std::max(rep.max_violation[2], lhs3 - bound);

            // printed second derivatives of g and h at delta = v - u
            double prod = (u + (v - u)) * (1 - u - (v - u));  // = v(1-v)
            double core = 2 / std::sqrt(prod) +
                          (1 - 2 * v) * (1 - 2 * v) / (2 * std::sqrt(prod * prod * prod));
            double gpp = su / 2 * core;
            double hpp = 0.5 * su * core;
            rep.max_violation[3] =
                std::max(rep.max_violation[3], std::max(-gpp, -hpp));
            ++rep.grid_points;
        }
    }
    for (int i = 0; i < 4; ++i) rep.pass[i] = rep.max_violation[i] <= slack;
    return rep;
}

// ---------------------------------------------------------------------------
// Families, samplers, diagnostics.
// ---------------------------------------------------------------------------

DataMatrix sample_gauss2d(int n, std::uint64_t seed) {
    Philox rng(seed, 0);
    DataMatrix data;
    data.rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        double u1 = 1.0 - rng.next_unit();
        double u2 = rng.next_unit();
        double radius = std::sqrt(-2.0 * std::log(u1));
        data.rows.push_back({radius * std::cos(2 * M_PI * u2),
                             radius * std::sin(2 * M_PI * u2)});
    }
    return data;
}

DataMatrix sample_gauss1d(int n, std::uint64_t seed) {
    Philox rng(seed, 0);
    DataMatrix data;
    data.rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        double u1 = 1.0 - rng.next_unit();
        double u2 = rng.next_unit();
        data.rows.push_back({std::sqrt(-2.0 * std::log(u1)) * std::cos(2 * M_PI * u2)});
    }
    return data;
}

DataMatrix sample_unif1d(int n, std::uint64_t seed) {
    Philox rng(seed, 0);
    DataMatrix data;
    data.rows.reserve(n);
    for (int i = 0; i < n; ++i) data.rows.push_back({rng.next_unit()});
    return data;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 2; i <= leaves + 1; ++i) edges.emplace_back(1, i);
    return Graph(leaves + 1, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph family_graph(const std::string& family, int n, std::uint64_t seed) {
    if (family == "mst-gauss2d") return build_mst(sample_gauss2d(n, seed));
    if (family == "knn1-gauss2d") return build_knn(sample_gauss2d(n, seed), 1);
    if (family == "star") return star_graph(n - 1);
    if (family == "cycle") return cycle_graph(n);
    throw InputError("unknown graph family '" + family + "'");
}

namespace {

ConditionRow condition_row(const Graph& g) {
    ConditionRow row;
    row.n = g.node_count();
    row.edges = g.edge_count();
    row.k = static_cast<double>(row.edges) / row.n;
    Integer p2 = 0;
    for (int v = 1; v <= row.n; ++v) p2 += Integer(g.degree(v)) * g.degree(v);
    row.sum_deg2 = p2;
    Rational m(static_cast<long>(row.edges));
    row.v_g = Rational(p2) - 4 * m * m / Rational(row.n);
    double avg = 2.0 * row.edges / row.n;
    for (int v = 1; v <= row.n; ++v)
        row.max_centered_degree =
            std::max(row.max_centered_degree, std::abs(g.degree(v) - avg));
    double p2d = to_double(Rational(p2));
    row.thm31_ratio = p2d / (row.k * row.n * row.n);
    row.thm32_ratio = row.k == 0 ? 0 : to_double(row.v_g) / (row.k * row.k);
    return row;
}

}  // namespace

ConditionReport condition_diagnostics(const std::string& family, const std::vector<int>& sizes,
                                      std::uint64_t seed) {
    ConditionReport rep;
    rep.family = family;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        rep.rows.push_back(condition_row(family_graph(family, sizes[i], seed + i)));

    rep.thm31_ratio_decreasing = rep.rows.size() >= 2;
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
        if (rep.rows[i].thm31_ratio >= rep.rows[i - 1].thm31_ratio)
            rep.thm31_ratio_decreasing = false;
    for (const auto& row : rep.rows) {
        if (row.thm31_ratio > 0.5) rep.thm31_violation_flag = true;
        if (row.v_g == 0) rep.thm32_violation_flag = true;
    }
    return rep;
}

TightnessReport tightness_report(const Graph& g, BasicProcess X, int grid_values, double eps,
                                 long mc_replicates, std::uint64_t seed) {
    if (grid_values < 3) throw InputError("tightness grid needs at least 3 values");
    if (!(eps > 0 && eps < 0.5)) throw InputError("eps must lie in (0, 0.5)");

    TightnessReport rep;
    rep.stat = X;
    rep.eps = eps;
    rep.diagnostics = condition_row(g);

    ConfigCensus census = census_closed_form(g);
    MomentEngine engine(g);
    const int n = g.node_count();

    // grid values eps, ..., 1-eps as exact fractions over a fixed denominator
    const long den = 1000;
    std::vector<Rational> values;
    for (int i = 0; i < grid_values; ++i) {
        double x = eps + (1.0 - 2 * eps) * i / (grid_values - 1);
        values.push_back(make_rational(std::lround(x * den), den));
    }

    for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = a + 1; b < values.size(); ++b)
            for (std::size_t c = b + 1; c < values.size(); ++c) {
                TightnessPoint pt;
                pt.u = values[a];
                pt.v = values[b];
                pt.w = values[c];
                try {
                    KcExact kc = kc_moment(engine, X, pt.u, pt.v, pt.w);
                    pt.defined = true;
                    pt.collapsed = kc.collapsed;
                    pt.kc_value = kc.value();
                    double span = to_double(pt.w - pt.u);
                    pt.ratio = pt.kc_value / (span * span);
                    rep.max_ratio = std::max(rep.max_ratio, pt.ratio);
                } catch (const InputError&) {
                    pt.defined = false;
                }
                if (pt.defined && !pt.collapsed) {
                    if (X == BasicProcess::kZw) {
                        ZwLeadingTerms lead = zw_leading_terms(census, n, pt.u, pt.v, pt.w);
                        pt.leading_degenerate = lead.den_degenerate;
                        pt.leading_ratio_a = to_double(lead.ratio_x8_n1);
                        pt.leading_ratio_b = to_double(lead.ratio_x8_n2);
                    } else {
                        ZdiffLeadingTerms lead =
                            zdiff_leading_terms(census, n, to_double(pt.u), to_double(pt.v),
                                                to_double(pt.w));
                        pt.leading_degenerate = lead.den_degenerate;
                        pt.leading_ratio_a = pt.leading_ratio_b = lead.ratio;
                    }
                    if (mc_replicates > 0)
                        pt.mc = kc_moment_mc(g, X, pt.u, pt.v, pt.w, mc_replicates, seed);
                }
                rep.points.push_back(std::move(pt));
            }
    return rep;
}

}  // namespace graphscan
