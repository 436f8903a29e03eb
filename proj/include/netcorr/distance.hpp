#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace netcorr {

/// Where a distance matrix came from. The exponential kernel accepts any of
/// them; certification decides whether the result is usable.
enum class DistanceKind {
    shortest_path,
    resistance,
    embedding,
    external,
};

const char* to_string(DistanceKind kind);

/// Symmetric pairwise-distance matrix with the node order it is indexed by.
///
/// Invariants: symmetric, zero diagonal, off-diagonal entries positive.
/// Embedding-derived matrices are the one exception: coincident embedded
/// nodes yield zero off-diagonal entries, which is tolerated and surfaced
/// through has_zero_offdiagonal().
struct DistanceMatrix {
    Eigen::MatrixXd values;
    DistanceKind kind = DistanceKind::external;
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(values.rows()); }
};

bool has_zero_offdiagonal(const DistanceMatrix& d);

}  // namespace netcorr
