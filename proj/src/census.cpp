#include "graphscan/census.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace graphscan {
namespace {

Integer c2(const Integer& v) { return v * (v - 1) / 2; }
Integer c3(const Integer& v) { return v * (v - 1) * (v - 2) / 6; }
Integer c4of(const Integer& v) { return v * (v - 1) * (v - 2) * (v - 3) / 24; }

/// Pattern of three distinct edges.
enum class TriplePattern { kStar, kPath, kTriangle, kPairIso, kMatching };

TriplePattern classify_triple(const Graph& g, int a, int b, int c) {
    const auto& ea = g.edge(a);
    const auto& eb = g.edge(b);
    const auto& ec = g.edge(c);
    auto shares = [](const std::pair<int, int>& x, const std::pair<int, int>& y) {
        return x.first == y.first || x.first == y.second || x.second == y.first ||
               x.second == y.second;
    };
    int adj = shares(ea, eb) + shares(ea, ec) + shares(eb, ec);
    if (adj == 3) {
        std::set<int> nodes{ea.first, ea.second, eb.first, eb.second, ec.first, ec.second};
        return nodes.size() == 3 ? TriplePattern::kTriangle : TriplePattern::kStar;
    }
    if (adj == 2) return TriplePattern::kPath;
    if (adj == 1) return TriplePattern::kPairIso;
    return TriplePattern::kMatching;
}

int config_of_triple(TriplePattern p) {
    switch (p) {
        case TriplePattern::kStar: return 4;
        case TriplePattern::kPath: return 5;
        case TriplePattern::kTriangle: return 6;
        case TriplePattern::kPairIso: return 7;
        case TriplePattern::kMatching: return 8;
    }
    return 0;
}

int classify_quad(const Graph& g, int a, int b, int c, int d) {
    const std::array<int, 4> idx{a, b, c, d};
    std::array<std::pair<int, int>, 4> e;
    for (int i = 0; i < 4; ++i) e[i] = g.edge(idx[i]);

    auto shares = [](const std::pair<int, int>& x, const std::pair<int, int>& y) {
        return x.first == y.first || x.first == y.second || x.second == y.first ||
               x.second == y.second;
    };
    int adj = 0;
    std::array<bool, 4> touched{};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (shares(e[i], e[j])) {
                ++adj;
                touched[i] = touched[j] = true;
            }

    std::map<int, int> deg;
    for (const auto& [u, v] : e) {
        ++deg[u];
        ++deg[v];
    }
    int maxdeg = 0;
    for (const auto& [node, dd] : deg) maxdeg = std::max(maxdeg, dd);

    auto has_triangle = [&] {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k) {
                    std::set<int> nodes{e[i].first, e[i].second, e[j].first,
                                        e[j].second, e[k].first, e[k].second};
                    if (nodes.size() == 3) return true;
                }
        return false;
    };

    switch (adj) {
        case 6: return 9;   // 4-star
        case 5: return 12;  // paw
        case 4: return maxdeg == 3 ? 13 : 11;  // chair vs box
        case 3:
            if (maxdeg == 3) return 14;        // 3-star + disjoint edge
            return has_triangle() ? 16 : 10;   // triangle + edge vs 4-path
        case 2: {
            int involved = touched[0] + touched[1] + touched[2] + touched[3];
            return involved == 3 ? 15 : 17;    // path3 + edge vs two cherries
        }
        case 1: return 18;
        default: return 19;
    }
}

}  // namespace

int classify_tuple(const Graph& g, const std::array<int, 4>& t) {
    for (int idx : t)
        if (idx < 0 || idx >= g.edge_count()) throw InputError("edge index outside graph");
    std::array<int, 4> s = t;
    std::sort(s.begin(), s.end());
    int distinct = 1;
    for (int i = 1; i < 4; ++i)
        if (s[i] != s[i - 1]) ++distinct;

    if (distinct == 1) return 1;
    if (distinct == 2) {
        int a = s[0], b = s[3];
        const auto& ea = g.edge(a);
        const auto& eb = g.edge(b);
        bool adjacent = ea.first == eb.first || ea.first == eb.second ||
                        ea.second == eb.first || ea.second == eb.second;
        return adjacent ? 2 : 3;
    }
    if (distinct == 3) {
        std::array<int, 3> tri{};
        int k = 0;
        tri[k++] = s[0];
        for (int i = 1; i < 4; ++i)
            if (s[i] != s[i - 1]) tri[k++] = s[i];
        return config_of_triple(classify_triple(g, tri[0], tri[1], tri[2]));
    }
    return classify_quad(g, s[0], s[1], s[2], s[3]);
}

int classify_tuple(const Graph& g, const std::array<std::pair<int, int>, 4>& edges) {
    std::array<int, 4> idx{};
    const auto& list = g.edges();
    for (int k = 0; k < 4; ++k) {
        auto e = edges[k];
        if (e.first > e.second) std::swap(e.first, e.second);
        auto it = std::lower_bound(list.begin(), list.end(), e);
        if (it == list.end() || *it != e) throw InputError("edge not in graph");
        idx[k] = static_cast<int>(it - list.begin());
    }
    return classify_tuple(g, idx);
}

Integer ConfigCensus::counts_sum() const {
    Integer s = 0;
    for (const auto& c : counts) s += c;
    return s;
}

SubgraphCounts subgraph_counts(const Graph& g) {
    const int n = g.node_count();
    SubgraphCounts sc;
    sc.m = g.edge_count();

    Integer p2 = 0, p3 = 0, p4 = 0;
    for (int v = 1; v <= n; ++v) {
        Integer d = g.degree(v);
        p2 += d * d;
        p3 += d * d * d;
        p4 += d * d * d * d;
    }
    sc.p2 = p2;
    sc.p3 = p3;
    sc.p4 = p4;

    const Integer m = sc.m;
    sc.adj_pairs = (p2 - 2 * m) / 2;
    sc.s3 = 0;
    sc.s4 = 0;
    for (int v = 1; v <= n; ++v) {
        sc.s3 += c3(Integer(g.degree(v)));
        sc.s4 += c4of(Integer(g.degree(v)));
    }

    // Per-edge shared-neighbor counts, x3/x5-style edge sums and D.
    Integer x3 = 0, x5 = 0, x9 = 0, d_sum = 0;
    for (const auto& [i, j] : g.edges()) {
        Integer di = g.degree(i), dj = g.degree(j);
        x3 += (di - 1) * (dj - 1);
        d_sum += (di - 1) * (di - 1) * (dj - 1) + (dj - 1) * (dj - 1) * (di - 1);
        const auto& a = g.neighbors(i);
        const auto& b = g.neighbors(j);
        auto it = a.begin();
        auto jt = b.begin();
        while (it != a.end() && jt != b.end()) {
            if (*it < *jt) ++it;
            else if (*jt < *it) ++jt;
            else {
                x5 += 1;
                x9 += Integer(g.degree(*it)) - 2;
                ++it;
                ++jt;
            }
        }
    }
    sc.d_sum = d_sum;
    sc.tri = x5 / 3;
    sc.path3 = x3 - x5;

    Integer x4 = m * p2 + p2 - p3 - 2 * m * m;
    sc.pair_iso = x4 / 2 - 2 * x3 + x5;
    sc.match3 = c3(m) - sc.s3 - sc.path3 - sc.tri - sc.pair_iso;

    // Cherry (2-path) sums: ordered-cherry products and end-pair codegrees.
    Integer x7 = 0;
    for (int j = 1; j <= n; ++j) {
        Integer lin = 0, sq = 0;
        for (int i : g.neighbors(j)) {
            Integer t = Integer(g.degree(i)) - 1;
            lin += t;
            sq += t * t;
        }
        x7 += lin * lin - sq;
    }
    // codeg over unordered node pairs via wedge counting
    std::map<std::pair<int, int>, int> codeg;
    for (int j = 1; j <= n; ++j) {
        const auto& nb = g.neighbors(j);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                ++codeg[{nb[a], nb[b]}];
    }
    Integer x8 = 0;
    for (const auto& [pr, c] : codeg) x8 += Integer(c) * (c - 1);
    sc.c4 = x8 / 4;
    sc.path4 = x7 / 2 - x8 - 2 * x9 - x5;
    sc.paw = x9;
    {
        Integer x10 = d_sum - 2 * x3;
        sc.chair = x10 / 2 - 2 * x9;
    }

    // 3-star + disjoint edge.
    {
        Integer acc = sc.s3 * (m + 3) + x9;
        for (int v = 1; v <= n; ++v) {
            Integer d = g.degree(v);
            acc -= c3(d) * d;
            Integer nbr_deg = 0;
            for (int w : g.neighbors(v)) nbr_deg += g.degree(w);
            acc -= c2(d - 1) * nbr_deg;
        }
        sc.star_e = acc;
    }

    // 3-edge path + disjoint edge: enumerate paths by their middle edge.
    {
        Integer acc = 0;
        for (const auto& [y, z] : g.edges()) {
            for (int xnode : g.neighbors(y)) {
                if (xnode == z) continue;
                for (int wnode : g.neighbors(z)) {
                    if (wnode == y || wnode == xnode) continue;
                    Integer degsum = Integer(g.degree(xnode)) + g.degree(y) +
                                     g.degree(z) + g.degree(wnode);
                    Integer inside = 3 + (g.has_edge(xnode, z) ? 1 : 0) +
                                     (g.has_edge(y, wnode) ? 1 : 0) +
                                     (g.has_edge(xnode, wnode) ? 1 : 0);
                    acc += m - degsum + inside;
                }
            }
        }
        sc.path3_e = acc;
    }

    // triangle + disjoint edge: enumerate triangles i<j<l.
    {
        Integer acc = 0;
        for (const auto& [i, j] : g.edges())
            for (int l : g.neighbors(i))
                if (l > j && g.has_edge(j, l))
                    acc += m - (Integer(g.degree(i)) + g.degree(j) + g.degree(l)) + 3;
        sc.tri_e = acc;
    }

    // Two disjoint cherries and cherry + two disjoint edges.
    {
        Integer cherries = 0;
        for (int v = 1; v <= n; ++v) cherries += c2(Integer(g.degree(v)));
        std::vector<Integer> u_of(n + 1, Integer(0));
        for (int v = 1; v <= n; ++v) {
            Integer acc = c2(Integer(g.degree(v)));
            for (int w : g.neighbors(v)) acc += Integer(g.degree(w)) - 1;
            u_of[v] = acc;
        }
        auto codeg_of = [&](int a, int b) -> Integer {
            if (a > b) std::swap(a, b);
            auto it = codeg.find({a, b});
            return it == codeg.end() ? Integer(0) : Integer(it->second);
        };
        auto b_of = [&](int a, int b) {
            Integer acc = codeg_of(a, b);
            if (g.has_edge(a, b)) acc += Integer(g.degree(a)) - 1 + Integer(g.degree(b)) - 1;
            return acc;
        };

        Integer two_cherries = 0, cherry_pairs = 0;
        for (int j = 1; j <= n; ++j) {
            const auto& nb = g.neighbors(j);
            for (std::size_t a = 0; a < nb.size(); ++a) {
                for (std::size_t b = a + 1; b < nb.size(); ++b) {
                    int i = nb[a], l = nb[b];
                    Integer t = 1 + (g.has_edge(i, l) ? 2 : 0);
                    Integer touch = u_of[i] + u_of[j] + u_of[l] - b_of(i, j) -
                                    b_of(i, l) - b_of(j, l) + t;
                    two_cherries += cherries - touch;

                    // edges avoiding {i, j, l} and disjoint pairs among them
                    Integer degsum = Integer(g.degree(i)) + g.degree(j) + g.degree(l);
                    Integer inside = 2 + (g.has_edge(i, l) ? 1 : 0);
                    Integer avail = m - degsum + inside;
                    // adjacent pairs among avoiding edges: correct the global
                    // cherry total for nodes in or adjacent to {i, j, l}
                    Integer w_adj = cherries;
                    std::map<int, int> into;
                    for (int v : {i, j, l}) {
                        w_adj -= c2(Integer(g.degree(v)));
                        for (int w : g.neighbors(v))
                            if (w != i && w != j && w != l) ++into[w];
                    }
                    for (const auto& [w, cnt] : into)
                        w_adj += c2(Integer(g.degree(w)) - cnt) - c2(Integer(g.degree(w)));
                    cherry_pairs += c2(avail) - w_adj;
                }
            }
        }
        sc.cherry2 = two_cherries / 2;
        sc.cherry_e2 = cherry_pairs;
    }

    sc.match4 = c4of(m) - sc.s4 - sc.path4 - sc.c4 - sc.paw - sc.chair - sc.star_e -
                sc.path3_e - sc.tri_e - sc.cherry2 - sc.cherry_e2;
    return sc;
}

namespace {

std::array<Integer, 15> compute_x(const Graph& g, const SubgraphCounts& sc) {
    // Readings fixed by the brute-force equality gate:
    //   x3  sums (d_i-1)(d_j-1) over unordered edges, including the terms
    //       where the two attachments close a triangle;
    //   x7  sums over ordered 2-paths (twice the unordered cherry sum);
    //   x8  counts, per unordered 2-path, the common neighbors of its two
    //       end nodes other than the center (so x8 = 4 * #4-cycles);
    //   x13 reads |G \ {...}| as the edges of G minus the three edges of the
    //       (edge, common-neighbor) triangle, giving x5 * (|G| - 3);
    //   x14 sums over all ordered pairs of distinct nodes, removing a shared
    //       edge from both degrees when the pair is adjacent.
    std::array<Integer, 15> x;
    const Integer m = sc.m;
    const Integer &p2 = sc.p2, &p3 = sc.p3, &p4 = sc.p4;

    x[0] = p2 - 2 * m;
    x[1] = p3 - 3 * p2 + 4 * m;
    x[2] = sc.path3 + 3 * sc.tri;  // literal edge sum, triangle terms included
    x[3] = m * p2 + p2 - p3 - 2 * m * m;
    x[4] = 3 * sc.tri;
    x[5] = p4 - 6 * p3 + 11 * p2 - 12 * m;
    x[7] = 4 * sc.c4;
    x[8] = sc.paw;
    x[9] = sc.d_sum - 2 * x[2];
    x[10] = 4 * m * m - 3 * m * p2 + m * p3 - 2 * p2 + 3 * p3 - p4;
    x[11] = m * x[2] - sc.d_sum - x[2];
    x[12] = x[4] * (m - 3);
    x[14] = p4 - 2 * m * p3 + m * m * p2 + m * p2 - p2 - 2 * m * m * m + 2 * m * m;

    // x7: ordered 2-paths weighted by (d_i-1)(d_l-1) at the two ends.
    x[6] = 0;
    for (int j = 1; j <= g.node_count(); ++j) {
        Integer lin = 0, sq = 0;
        for (int i : g.neighbors(j)) {
            Integer t = Integer(g.degree(i)) - 1;
            lin += t;
            sq += t * t;
        }
        x[6] += lin * lin - sq;
    }

    // x14 over ordered node pairs.
    {
        const int n = g.node_count();
        Integer s1 = p2 - 2 * m;  // sum of d(d-1)
        Integer diag = 0;
        for (int v = 1; v <= n; ++v) {
            Integer d = g.degree(v);
            diag += d * d * (d - 1) * (d - 1);
        }
        Integer adj_correction = 0;
        for (const auto& [i, j] : g.edges()) {
            Integer di = g.degree(i), dj = g.degree(j);
            adj_correction += 2 * (di * (di - 1) * dj * (dj - 1) -
                                   (di - 1) * (di - 2) * (dj - 1) * (dj - 2));
        }
        x[13] = s1 * s1 - diag - adj_correction;
    }
    return x;
}

}  // namespace

Integer printed_config_count(const std::array<Integer, 15>& x, const Integer& m, int config) {
    auto X = [&](int j) { return x[j - 1]; };
    switch (config) {
        case 1: return m;
        case 2: return 7 * X(1);
        case 3: return 7 * m * (m - 1) - 7 * X(1);
        case 4: return 6 * X(2);
        case 5: return 36 * X(3);
        case 6: return 12 * X(5);
        case 7: return 18 * X(4) - 72 * X(3) + 36 * X(5);
        case 8:
            return 6 * m * (m - 1) * (m - 2) - 12 * X(5) - 18 * X(4) + 36 * X(3) - 6 * X(2);
        case 9: return X(6);
        case 10: return 12 * X(7) - 24 * X(8);
        case 11: return 6 * X(8);
        case 12: return 24 * X(9);
        case 13: return 12 * X(10) - 48 * X(9);
        case 14: return 4 * X(11) - 12 * X(10) + 24 * X(9);
        case 15: return 24 * X(12) - 24 * X(7) + 24 * X(8);
        case 16: return 8 * X(13) - 24 * X(9);
        case 17: return 3 * X(14) - 12 * X(7) + 12 * X(8);
        case 18:
            return 6 * X(15) + 36 * X(7) - 24 * X(8) + 72 * X(9) - 12 * X(10) -
                   48 * X(12) - 24 * X(13) - 6 * X(14);
        case 19:
            return 12 * X(10) - 12 * X(7) - X(6) - 4 * X(11) + 24 * X(12) + 3 * X(14) -
                   6 * X(15) + 6 * X(8) + 16 * X(13) + m * (m - 1) * (m - 2) * (m - 3);
        default: throw InputError("configuration id outside 1..19");
    }
}

ConfigCensus census_closed_form(const Graph& g) {
    ConfigCensus census;
    census.sub = subgraph_counts(g);
    const SubgraphCounts& sc = census.sub;
    census.x = compute_x(g, sc);
    const Integer m = sc.m;
    census.total = m * m * m * m;

    auto& c = census.counts;
    c[0] = m;
    c[1] = 7 * (sc.p2 - 2 * m);
    c[2] = 7 * m * (m - 1) - c[1];
    c[3] = 36 * sc.s3;
    c[4] = 36 * sc.path3;
    c[5] = 36 * sc.tri;
    c[6] = 36 * sc.pair_iso;
    c[7] = 36 * sc.match3;
    c[8] = 24 * sc.s4;
    c[9] = 24 * sc.path4;
    c[10] = 24 * sc.c4;
    c[11] = 24 * sc.paw;
    c[12] = 24 * sc.chair;
    c[13] = 24 * sc.star_e;
    c[14] = 24 * sc.path3_e;
    c[15] = 24 * sc.tri_e;
    c[16] = 24 * sc.cherry2;
    c[17] = 24 * sc.cherry_e2;
    c[18] = 24 * sc.match4;

    for (int cfg = 1; cfg <= 19; ++cfg) {
        Integer printed = printed_config_count(census.x, m, cfg);
        if (printed != c[cfg - 1])
            census.printed_mismatches.push_back({cfg, printed, c[cfg - 1]});
    }
    return census;
}

ConfigCensus census_bruteforce(const Graph& g, int max_edges) {
    const int m = g.edge_count();
    if (m > max_edges)
        throw InputError("census_bruteforce budget exceeded (|G| = " + std::to_string(m) +
                         "); use census_closed_form");

    ConfigCensus census;
    census.sub = subgraph_counts(g);
    census.x = compute_x(g, census.sub);
    census.total = Integer(m) * m * m * m;

    auto& c = census.counts;
    // Classification depends only on the multiset of edges, so each orbit of
    // orderings is counted once: 1 tuple per single edge, 14 per unordered
    // pair (4+4 triple-single, 6 double-double), 36 per unordered triple,
    // 24 per unordered quadruple.
    for (int a = 0; a < m; ++a) c[0] += 1;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            int cfg = classify_tuple(g, std::array<int, 4>{a, a, a, b});
            c[cfg - 1] += 14;
        }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int d = b + 1; d < m; ++d) {
                int cfg = classify_tuple(g, std::array<int, 4>{a, a, b, d});
                c[cfg - 1] += 36;
            }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int d = b + 1; d < m; ++d)
                for (int e = d + 1; e < m; ++e) {
                    int cfg = classify_tuple(g, std::array<int, 4>{a, b, d, e});
                    c[cfg - 1] += 24;
                }
    return census;
}

}  // namespace graphscan
