#pragma once

#include <Eigen/Dense>
#include <vector>

#include "netcorr/distance.hpp"
#include "netcorr/weights.hpp"

namespace netcorr {

/// Relative zero-threshold used by the certificates when none is given.
/// The absolute threshold applied to a spectrum is tol_rel * max(1, |lambda|_max).
inline constexpr double kDefaultTolRel = 1e-9;

/// Relative asymmetry tolerated before a matrix is rejected as non-symmetric.
inline constexpr double kSymmetryTolRel = 1e-10;

/// Result of a symmetric eigendecomposition: eigenvalues ascending,
/// orthonormal eigenvectors as matching columns.
struct EigenSystem {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
};

/// Full symmetric eigendecomposition. Rejects matrices whose relative
/// asymmetry exceeds kSymmetryTolRel.
EigenSystem eig_sym(const Eigen::MatrixXd& m);

/// Projects out the all-ones direction on both sides: returns J*m*J with
/// J = I - (1/n) * ones. Entrywise this is
///   m_ij - rowmean_i - colmean_j + grandmean,
/// and the result maps the all-ones vector to zero. Input must be symmetric.
Eigen::MatrixXd double_center(const Eigen::MatrixXd& m);

enum class CertificateKind {
    /// Weight certificate: the centered matrix must be strictly positive on
    /// the zero-sum subspace (n-1 eigenvalues above the threshold, one zero).
    weight_definite,
    /// Metric certificate: the negated centered distance matrix must have no
    /// eigenvalue below -threshold (semidefinite; extra zeros are allowed).
    metric_negative_type,
};

/// Certificate produced by the spectral tests. Eigenvalues are those of the
/// tested matrix (the centered weight matrix, or the negated centered
/// distance matrix), sorted ascending. Exactly one eigenvalue, the one of
/// smallest magnitude, is forced to zero by the centering projector; it is
/// designated at zero_index and excluded from the verdict.
struct SpectralVerdict {
    CertificateKind kind = CertificateKind::weight_definite;
    std::vector<double> eigenvalues;
    int zero_index = 0;
    double min_nonforced = 0.0;
    bool valid = false;
    double tolerance = 0.0;      // absolute threshold applied
    double tolerance_rel = 0.0;  // relative threshold it was derived from
};

/// Decides whether a weight matrix is positive definite on the zero-sum
/// subspace, the condition under which the network correlation is real,
/// finite and bounded by [-1, 1] for all non-constant signals.
SpectralVerdict certify_weight(const WeightMatrix& w, double tol_rel = kDefaultTolRel);

/// Decides whether a distance matrix is of negative type, i.e. negative
/// semidefinite on the zero-sum subspace. Exactly the metrics of this type
/// give exponential-kernel weights that certify valid for every k > 0.
SpectralVerdict certify_negative_type(const DistanceMatrix& d, double tol_rel = kDefaultTolRel);

}  // namespace netcorr
