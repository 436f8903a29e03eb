#include "netcorr/metrics.hpp"

#include <cmath>
#include <string>

#include "netcorr/errors.hpp"
#include "netcorr/spectral.hpp"

namespace netcorr {

namespace {

// Eigenvalues of the Laplacian at or below this fraction of the largest one
// are treated as the zero of the connected component.
constexpr double kPinvCutoffRel = 1e-9;

struct LaplacianSpectrum {
    EigenSystem es;
    double cutoff;
};

LaplacianSpectrum connected_laplacian_spectrum(const Graph& g) {
    if (!is_connected(g)) {
        throw DisconnectedError("graph is disconnected (" +
                                std::to_string(component_count(g)) +
                                " components): effective resistance is undefined");
    }
    EigenSystem es = eig_sym(laplacian(g));
    const double cutoff = kPinvCutoffRel * es.eigenvalues.maxCoeff();
    int zeros = 0;
    for (int i = 0; i < es.eigenvalues.size(); ++i) {
        if (es.eigenvalues(i) <= cutoff) ++zeros;
    }
    if (zeros != 1) {
        throw InternalError("connected graph Laplacian has " + std::to_string(zeros) +
                            " near-zero eigenvalues, expected exactly 1");
    }
    return {std::move(es), cutoff};
}

}  // namespace

DistanceMatrix effective_resistance(const Graph& g) {
    const auto [es, cutoff] = connected_laplacian_spectrum(g);
    const int n = g.size();

    Eigen::MatrixXd pinv = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        if (es.eigenvalues(i) > cutoff) {
            pinv.noalias() +=
                (1.0 / es.eigenvalues(i)) * es.eigenvectors.col(i) * es.eigenvectors.col(i).transpose();
        }
    }

    Eigen::MatrixXd omega(n, n);
    for (int i = 0; i < n; ++i) {
        omega(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) {
            const double r = pinv(i, i) + pinv(j, j) - 2.0 * pinv(i, j);
            omega(i, j) = r;
            omega(j, i) = r;
        }
    }
    return DistanceMatrix{std::move(omega), DistanceKind::resistance, g.labels()};
}

DistanceMatrix embedding_distances(const Embedding& e) {
    const int n = e.size();
    if (n < 2) {
        throw InputError("embedding must have >= 2 rows");
    }
    if (!e.coordinates.allFinite()) {
        throw InputError("embedding coordinates must be finite");
    }
    Eigen::MatrixXd delta(n, n);
    for (int i = 0; i < n; ++i) {
        delta(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) {
            const double dist = (e.coordinates.row(i) - e.coordinates.row(j)).norm();
            delta(i, j) = dist;
            delta(j, i) = dist;
        }
    }
    return DistanceMatrix{std::move(delta), DistanceKind::embedding, e.labels};
}

Embedding commute_time_embedding(const Graph& g) {
    const auto [es, cutoff] = connected_laplacian_spectrum(g);
    const int n = g.size();

    // One column per nonzero eigenvalue, scaled so that squared point
    // distances reproduce effective resistances.
    Eigen::MatrixXd coords(n, n - 1);
    int col = 0;
    for (int i = 0; i < n; ++i) {
        if (es.eigenvalues(i) > cutoff) {
            coords.col(col++) = es.eigenvectors.col(i) / std::sqrt(es.eigenvalues(i));
        }
    }
    return Embedding{std::move(coords), g.labels()};
}

}  // namespace netcorr
