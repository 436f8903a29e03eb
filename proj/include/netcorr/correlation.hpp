#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "netcorr/spectral.hpp"
#include "netcorr/weights.hpp"

namespace netcorr {

/// One real value per node, in the owning graph's node order.
struct Signal {
    Eigen::VectorXd values;
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(values.size()); }
};

/// Subtracts the mean; the result sums to zero.
Signal center_signal(const Signal& x);

/// Classical Pearson correlation. Throws InputError on constant input.
double pearson(const Signal& x, const Signal& y);

/// The weighted pairwise sum  sum_ij W_ij * xc_i * yc_j  over centered
/// copies of x and y. No sign constraint: this is the raw quadratic /
/// bilinear form, exposed so the failure modes of an uncertified weight
/// matrix can be inspected. Exactly symmetric in x and y.
double network_covariance(const Signal& x, const Signal& y, const WeightMatrix& w);

/// Network variance of x under w: network_covariance(x, x, w).
/// A negative value throws NegativeVarianceError, since the correlation
/// would be imaginary.
double network_variance(const Signal& x, const WeightMatrix& w);

/// Same, but a negative value under a valid certificate is an InternalError:
/// the certificate guarantees the quadratic form is positive.
double network_variance(const Signal& x, const WeightMatrix& w, const SpectralVerdict& verdict);

enum class CorrelationKind {
    real,       ///< finite real correlation
    imaginary,  ///< a network variance was negative
    infinite,   ///< a network variance was zero
};

const char* to_string(CorrelationKind kind);

/// Network correlation together with the evidence that justifies it.
/// For kind == real: rho * sigma_x * sigma_y equals numerator, and with a
/// valid certificate |rho| <= 1.
struct CorrelationResult {
    CorrelationKind kind = CorrelationKind::real;
    double rho = 0.0;        // NaN unless kind == real
    double numerator = 0.0;  // weighted covariance
    double var_x = 0.0;      // quadratic forms; negative only via override
    double var_y = 0.0;
    double sigma_x = 0.0;    // sqrt of the variances; NaN when negative
    double sigma_y = 0.0;
    SpectralVerdict verdict;
};

/// Network correlation of x and y under w, gated by the certificate:
/// an invalid verdict is refused unless unsafe_override is set, in which
/// case the computation proceeds and non-real outcomes are reported through
/// CorrelationKind instead of a real rho. Constant signals are rejected
/// (their centered form is zero, a division by zero).
CorrelationResult network_pearson(const Signal& x, const Signal& y, const WeightMatrix& w,
                                  const SpectralVerdict& verdict, bool unsafe_override = false);

}  // namespace netcorr
