#include "netcorr/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "netcorr/errors.hpp"

namespace netcorr {

namespace {

void require_square(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols() || m.rows() < 2) {
        throw InputError("matrix must be square with n >= 2");
    }
}

void require_symmetric(const Eigen::MatrixXd& m) {
    require_square(m);
    const double scale = m.cwiseAbs().maxCoeff();
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > kSymmetryTolRel * scale) {
        throw InputError("matrix is not symmetric (relative asymmetry " +
                         std::to_string(asym / scale) + ")");
    }
}

}  // namespace

EigenSystem eig_sym(const Eigen::MatrixXd& m) {
    require_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw InternalError("symmetric eigendecomposition did not converge");
    }
    return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::MatrixXd double_center(const Eigen::MatrixXd& m) {
    require_symmetric(m);
    const Eigen::VectorXd row_mean = m.rowwise().mean();
    const double grand_mean = m.mean();
    Eigen::MatrixXd centered = m;
    centered.colwise() -= row_mean;
    centered.rowwise() -= row_mean.transpose();
    centered.array() += grand_mean;
    // The formula is symmetric up to rounding; make it exact so downstream
    // symmetry checks never trip on it.
    centered = 0.5 * (centered + centered.transpose()).eval();
    return centered;
}

namespace {

SpectralVerdict certify_spectrum(const Eigen::MatrixXd& tested, CertificateKind kind,
                                 double tol_rel) {
    if (tol_rel <= 0.0) {
        throw InputError("tolerance must be > 0");
    }
    const EigenSystem es = eig_sym(tested);
    const int n = static_cast<int>(es.eigenvalues.size());

    SpectralVerdict verdict;
    verdict.kind = kind;
    verdict.tolerance_rel = tol_rel;
    verdict.eigenvalues.assign(es.eigenvalues.data(), es.eigenvalues.data() + n);

    const double max_abs = es.eigenvalues.cwiseAbs().maxCoeff();
    verdict.tolerance = tol_rel * std::max(1.0, max_abs);

    int zero_index = 0;
    for (int i = 1; i < n; ++i) {
        if (std::abs(verdict.eigenvalues[i]) < std::abs(verdict.eigenvalues[zero_index])) {
            zero_index = i;
        }
    }
    verdict.zero_index = zero_index;

    const double forced = verdict.eigenvalues[zero_index];
    if (std::abs(forced) > verdict.tolerance) {
        throw InternalError("forced-zero eigenvalue " + std::to_string(forced) +
                            " exceeds tolerance: centering lost the all-ones kernel");
    }

    // Unless another eigenvalue is also within the zero threshold (degenerate
    // spectrum, e.g. an all-ones weight matrix), the designated eigenvector
    // must be the all-ones direction.
    bool degenerate_zero = false;
    for (int i = 0; i < n; ++i) {
        if (i != zero_index && std::abs(verdict.eigenvalues[i]) <= verdict.tolerance) {
            degenerate_zero = true;
            break;
        }
    }
    if (!degenerate_zero) {
        const double overlap =
            std::abs(es.eigenvectors.col(zero_index).sum()) / std::sqrt(static_cast<double>(n));
        if (overlap < 0.99) {
            throw InternalError("forced-zero eigenvector does not point along the all-ones "
                                "direction (overlap " + std::to_string(overlap) + ")");
        }
    }

    double min_nonforced = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        if (i != zero_index) min_nonforced = std::min(min_nonforced, verdict.eigenvalues[i]);
    }
    verdict.min_nonforced = min_nonforced;

    verdict.valid = kind == CertificateKind::weight_definite
                        ? min_nonforced > verdict.tolerance
                        : min_nonforced >= -verdict.tolerance;
    return verdict;
}

}  // namespace

SpectralVerdict certify_weight(const WeightMatrix& w, double tol_rel) {
    return certify_spectrum(double_center(w.values), CertificateKind::weight_definite, tol_rel);
}

SpectralVerdict certify_negative_type(const DistanceMatrix& d, double tol_rel) {
    const double diag_max = d.values.diagonal().cwiseAbs().maxCoeff();
    if (diag_max != 0.0) {
        throw InputError("distance matrix must have a zero diagonal");
    }
    return certify_spectrum(Eigen::MatrixXd(-double_center(d.values)),
                            CertificateKind::metric_negative_type, tol_rel);
}

}  // namespace netcorr
