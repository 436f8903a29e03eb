#include "netcorr/correlation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "netcorr/errors.hpp"

namespace netcorr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool is_constant(const Eigen::VectorXd& v) {
    return v.maxCoeff() == v.minCoeff();
}

void require_same_nodes(const Signal& x, const Signal& y) {
    if (x.size() != y.size()) {
        throw InputError("signals have different lengths");
    }
    if (!x.labels.empty() && !y.labels.empty() && x.labels != y.labels) {
        throw InputError("signals are indexed by different node orders");
    }
}

void require_signal_matches(const Signal& x, const WeightMatrix& w) {
    if (x.size() != w.size()) {
        throw InputError("signal length does not match weight matrix size");
    }
    if (!x.labels.empty() && !w.labels.empty() && x.labels != w.labels) {
        throw InputError("signal and weight matrix are indexed by different node orders");
    }
}

// sum_ij W_ij a_i b_j accumulated so that swapping a and b gives the
// bit-identical result: diagonal terms plus paired off-diagonal terms in a
// fixed traversal order.
double weighted_pair_sum(const Eigen::MatrixXd& w, const Eigen::VectorXd& a,
                         const Eigen::VectorXd& b) {
    const int n = static_cast<int>(a.size());
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        total += w(i, i) * a(i) * b(i);
        for (int j = i + 1; j < n; ++j) {
            total += w(i, j) * (a(i) * b(j) + a(j) * b(i));
        }
    }
    return total;
}

}  // namespace

Signal center_signal(const Signal& x) {
    if (x.size() == 0) {
        throw InputError("signal is empty");
    }
    Signal centered = x;
    centered.values.array() -= x.values.mean();
    return centered;
}

double pearson(const Signal& x, const Signal& y) {
    require_same_nodes(x, y);
    if (x.size() < 2) {
        throw InputError("correlation needs >= 2 values");
    }
    if (is_constant(x.values) || is_constant(y.values)) {
        throw InputError("zero variance: signal is constant");
    }
    const Eigen::VectorXd xc = x.values.array() - x.values.mean();
    const Eigen::VectorXd yc = y.values.array() - y.values.mean();
    return xc.dot(yc) / std::sqrt(xc.squaredNorm() * yc.squaredNorm());
}

double network_covariance(const Signal& x, const Signal& y, const WeightMatrix& w) {
    require_same_nodes(x, y);
    require_signal_matches(x, w);
    const Eigen::VectorXd xc = x.values.array() - x.values.mean();
    const Eigen::VectorXd yc = y.values.array() - y.values.mean();
    return weighted_pair_sum(w.values, xc, yc);
}

double network_variance(const Signal& x, const WeightMatrix& w) {
    const double v = network_covariance(x, x, w);
    if (v < 0.0) {
        throw NegativeVarianceError(
            "network variance is negative (" + std::to_string(v) +
            "): the weight matrix admits a negative quadratic form on zero-sum "
            "vectors and the correlation would be imaginary");
    }
    return v;
}

double network_variance(const Signal& x, const WeightMatrix& w, const SpectralVerdict& verdict) {
    const double v = network_covariance(x, x, w);
    if (v < 0.0) {
        if (verdict.valid) {
            throw InternalError("negative network variance under a valid certificate");
        }
        throw NegativeVarianceError(
            "network variance is negative (" + std::to_string(v) +
            "): the weight matrix admits a negative quadratic form on zero-sum "
            "vectors and the correlation would be imaginary");
    }
    return v;
}

CorrelationResult network_pearson(const Signal& x, const Signal& y, const WeightMatrix& w,
                                  const SpectralVerdict& verdict, bool unsafe_override) {
    require_same_nodes(x, y);
    require_signal_matches(x, w);
    if (x.size() < 2) {
        throw InputError("correlation needs >= 2 values");
    }
    if (is_constant(x.values) || is_constant(y.values)) {
        throw InputError("constant signal: centering gives the zero vector, a division by zero");
    }
    if (!verdict.valid && !unsafe_override) {
        throw CertificateError(
            "weight matrix is not positive definite on the zero-sum subspace "
            "(smallest non-forced eigenvalue " + std::to_string(verdict.min_nonforced) +
            "): the network correlation could be imaginary or unbounded");
    }

    CorrelationResult result;
    result.verdict = verdict;
    result.var_x = network_covariance(x, x, w);
    result.var_y = network_covariance(y, y, w);
    result.numerator = network_covariance(x, y, w);

    if (result.var_x < 0.0 || result.var_y < 0.0) {
        if (verdict.valid) {
            throw InternalError("negative network variance under a valid certificate");
        }
        result.kind = CorrelationKind::imaginary;
    } else if (result.var_x == 0.0 || result.var_y == 0.0) {
        if (verdict.valid) {
            throw InternalError("zero network variance under a valid certificate");
        }
        result.kind = CorrelationKind::infinite;
    } else {
        result.kind = CorrelationKind::real;
    }

    result.sigma_x = result.var_x >= 0.0 ? std::sqrt(result.var_x) : kNaN;
    result.sigma_y = result.var_y >= 0.0 ? std::sqrt(result.var_y) : kNaN;
    result.rho = result.kind == CorrelationKind::real
                     ? result.numerator / (result.sigma_x * result.sigma_y)
                     : kNaN;
    return result;
}

const char* to_string(CorrelationKind kind) {
    switch (kind) {
        case CorrelationKind::real: return "real";
        case CorrelationKind::imaginary: return "imaginary";
        case CorrelationKind::infinite: return "infinite";
    }
    return "unknown";
}

}  // namespace netcorr
