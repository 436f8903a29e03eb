#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "netcorr/distance.hpp"

namespace netcorr {

enum class WeightSource {
    shortest_path,
    resistance,
    embedding,
    external,
    identity,
};

const char* to_string(WeightSource source);

/// Symmetric weight matrix for the network correlation, together with the
/// scale factor it was built with (absent for identity and external
/// matrices). Entries lie in (0, 1] when built from a distance matrix, with
/// ones on the diagonal. Labels may be empty for positionally indexed
/// matrices such as the identity.
struct WeightMatrix {
    Eigen::MatrixXd values;
    std::optional<double> k;
    WeightSource source = WeightSource::external;
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(values.rows()); }
};

/// Entrywise exponential kernel W_ij = exp(-k * d_ij), k > 0.
WeightMatrix exp_weight(const DistanceMatrix& d, double k);

/// Identity weight, under which the network correlation reduces to the
/// classical Pearson correlation. Requires n >= 2.
WeightMatrix identity_weight(int n);

}  // namespace netcorr
