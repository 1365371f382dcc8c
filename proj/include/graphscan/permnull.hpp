#pragma once

#include <vector>

#include "graphscan/rational.hpp"

namespace graphscan {

/// Requires a node's position in the permuted sequence to fall inside a
/// contiguous range [lo, hi] of 1..n. Intersections of the half-line events
/// "position <= t" / "position > t" always take this form.
struct NodeConstraint {
    int node = 0;
    int lo = 1;
    int hi = 0;

    bool empty() const { return lo > hi; }
};

/// Exact probability, under a uniform random permutation of n positions, that
/// every listed node lands in its interval. Computed by summing falling
/// factorials over assignments of nodes to the bucket partition induced by
/// all interval endpoints; never enumerates permutations.
///
/// Duplicate node ids are an input error; any empty interval gives 0.
Rational event_probability(int n, const std::vector<NodeConstraint>& constraints);

/// Ground-truth verifier: enumerates all n! permutations (n <= 9) and counts
/// the satisfying ones.
Rational exhaustive_event_probability(int n, const std::vector<NodeConstraint>& constraints);

}  // namespace graphscan
