#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "netcorr/distance.hpp"
#include "netcorr/graph.hpp"

namespace netcorr {

/// Euclidean placement of the graph's nodes, one coordinate row per node.
struct Embedding {
    Eigen::MatrixXd coordinates;  // n x d
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(coordinates.rows()); }
    int dimension() const { return static_cast<int>(coordinates.cols()); }
};

/// Pairwise effective resistance, treating each edge as a 1-Ohm resistor:
/// Omega_ij = Lp_ii + Lp_jj - 2 Lp_ij with Lp the Laplacian pseudoinverse.
/// The pseudoinverse inverts eigenvalues above 1e-9 * lambda_max; a connected
/// graph must yield exactly one eigenvalue below that cutoff.
DistanceMatrix effective_resistance(const Graph& g);

/// Pairwise straight-line distances between embedded nodes. Coincident rows
/// are allowed and produce zero off-diagonal entries.
DistanceMatrix embedding_distances(const Embedding& e);

/// Euclidean realization of effective resistance: returns coordinates z with
/// ||z_i - z_j||^2 equal to the effective resistance between i and j, built
/// by scaling each nonzero-eigenvalue Laplacian eigenvector by the inverse
/// square root of its eigenvalue. Dimension is n - 1.
Embedding commute_time_embedding(const Graph& g);

}  // namespace netcorr
