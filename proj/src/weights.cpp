#include "netcorr/weights.hpp"

#include "netcorr/errors.hpp"

namespace netcorr {

namespace {

WeightSource source_from(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::shortest_path: return WeightSource::shortest_path;
        case DistanceKind::resistance: return WeightSource::resistance;
        case DistanceKind::embedding: return WeightSource::embedding;
        case DistanceKind::external: return WeightSource::external;
    }
    return WeightSource::external;
}

}  // namespace

WeightMatrix exp_weight(const DistanceMatrix& d, double k) {
    if (!(k > 0.0)) {
        // k = 0 collapses to the all-ones matrix, whose centered form is zero.
        throw InputError("scale factor k must be > 0");
    }
    WeightMatrix w;
    w.values = (-k * d.values).array().exp();
    w.k = k;
    w.source = source_from(d.kind);
    w.labels = d.labels;
    return w;
}

WeightMatrix identity_weight(int n) {
    if (n < 2) {
        throw InputError("identity weight needs n >= 2");
    }
    WeightMatrix w;
    w.values = Eigen::MatrixXd::Identity(n, n);
    w.source = WeightSource::identity;
    return w;
}

const char* to_string(WeightSource source) {
    switch (source) {
        case WeightSource::shortest_path: return "shortest_path";
        case WeightSource::resistance: return "resistance";
        case WeightSource::embedding: return "embedding";
        case WeightSource::external: return "external";
        case WeightSource::identity: return "identity";
    }
    return "unknown";
}

}  // namespace netcorr
