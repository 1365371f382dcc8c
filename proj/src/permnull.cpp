#include "graphscan/permnull.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "graphscan/graph.hpp"

namespace graphscan {

Rational event_probability(int n, const std::vector<NodeConstraint>& constraints) {
    const int d = static_cast<int>(constraints.size());
    if (d == 0) return Rational(1);
    if (d > n) return Rational(0);
    if (d > 16) throw InputError("too many node constraints for the bucket engine");

    std::set<int> seen;
    for (const auto& c : constraints) {
        if (!seen.insert(c.node).second) throw InputError("duplicate node id in constraint set");
        if (c.node < 1 || c.node > n) throw InputError("constraint node outside 1..n");
        if (c.empty()) return Rational(0);
        if (c.lo < 1 || c.hi > n) throw InputError("constraint interval outside 1..n");
    }

    // Bucket partition of 1..n from the sorted interval endpoints. Every
    // bucket lies entirely inside or outside each node's interval.
    std::vector<int> cuts = {0, n};
    for (const auto& c : constraints) {
        cuts.push_back(c.lo - 1);
        cuts.push_back(c.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const int buckets = static_cast<int>(cuts.size()) - 1;
    std::vector<long> size(buckets);
    std::vector<unsigned> allowed(buckets, 0);
    for (int b = 0; b < buckets; ++b) {
        size[b] = cuts[b + 1] - cuts[b];
        int lo = cuts[b] + 1, hi = cuts[b + 1];
        for (int k = 0; k < d; ++k)
            if (constraints[k].lo <= lo && hi <= constraints[k].hi) allowed[b] |= 1u << k;
    }

    // ways[S] = number of injective placements of the node subset S into the
    // buckets processed so far, honoring each node's allowed set.
    const unsigned full = (1u << d) - 1;
    std::vector<Integer> ways(1u << d, Integer(0));
    ways[0] = 1;
    std::vector<Integer> fall(d + 1);
    for (int b = 0; b < buckets; ++b) {
        for (int c = 0; c <= d; ++c) fall[c] = falling_factorial(size[b], c);
        for (unsigned s = full; ; --s) {
            if (ways[s] != 0) {
                unsigned free = full & ~s & allowed[b];
                // enumerate nonempty subsets of the compatible free nodes
                for (unsigned t = free; t != 0; t = (t - 1) & free) {
                    int c = __builtin_popcount(t);
                    if (fall[c] != 0) ways[s | t] += ways[s] * fall[c];
                }
            }
            if (s == 0) break;
        }
    }

    Rational p(ways[full], falling_factorial(n, d));
    p.canonicalize();
    return p;
}

Rational exhaustive_event_probability(int n, const std::vector<NodeConstraint>& constraints) {
    if (n > 9) throw InputError("exhaustive oracle refuses n > 9");
    std::set<int> seen;
    for (const auto& c : constraints) {
        if (!seen.insert(c.node).second) throw InputError("duplicate node id in constraint set");
        if (c.node < 1 || c.node > n) throw InputError("constraint node outside 1..n");
    }

    std::vector<int> pos(n);  // pos[v-1] = position of node v
    std::iota(pos.begin(), pos.end(), 1);
    long long satisfied = 0, total = 0;
    do {
        ++total;
        bool ok = true;
        for (const auto& c : constraints) {
            int p = pos[c.node - 1];
            if (p < c.lo || p > c.hi) { ok = false; break; }
        }
        if (ok) ++satisfied;
    } while (std::next_permutation(pos.begin(), pos.end()));

    Rational p(static_cast<long>(satisfied), static_cast<long>(total));
    p.canonicalize();
    return p;
}

}  // namespace graphscan
