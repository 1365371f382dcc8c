#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphscan/graph.hpp"

namespace graphscan {

/// n observations by d features, all entries finite.
struct DataMatrix {
    std::vector<std::vector<double>> rows;

    int n() const { return static_cast<int>(rows.size()); }
    int dims() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
};

enum class Metric { kEuclidean, kManhattan };

Metric metric_from_name(const std::string& name);

double distance(const std::vector<double>& a, const std::vector<double>& b, Metric metric);

/// Header-less delimited numeric text, one observation per row. Delimiter is
/// auto-detected among tab/comma unless given explicitly ('\0' = detect).
DataMatrix read_delimited(std::istream& in, char delimiter = '\0');
DataMatrix read_delimited_file(const std::string& path, char delimiter = '\0');

/// Minimum spanning tree over the rows; ties in edge weight are broken by
/// lexicographic (i, j) order so the output is bit-reproducible.
Graph build_mst(const DataMatrix& data, Metric metric = Metric::kEuclidean);

/// Symmetrized k-nearest-neighbor graph: edge (i, j) present iff j is among
/// the kk nearest of i or i among the kk nearest of j. Distance ties break
/// toward the smaller node index.
Graph build_knn(const DataMatrix& data, int kk, Metric metric = Metric::kEuclidean);

}  // namespace graphscan
