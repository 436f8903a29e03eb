#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "netcorr/errors.hpp"
#include "netcorr/metrics.hpp"
#include "netcorr/spectral.hpp"
#include "netcorr/weights.hpp"
#include "test_support.hpp"

using namespace netcorr;
using namespace netcorr::testing;

namespace {

// Closed form for the centered spectrum of exp(-k * shortest paths) on the
// complete bipartite graph K_{2,3}. With a = exp(-k) (cross-side weight) and
// b = exp(-2k) (within-side weight), the centered matrix has the zero-sum
// eigenvalue 1 - b with multiplicity 3 (differences within each side) and
//   lambda_min(k) = (5 + 7 exp(-2k) - 12 exp(-k)) / 5
// on the remaining zero-sum direction, derived by diagonalizing the 2x2
// block form on the side-constant subspace. Negative exactly for
// k < ln(7/5).
double k23_min_eigenvalue(double k) {
    return (5.0 + 7.0 * std::exp(-2.0 * k) - 12.0 * std::exp(-k)) / 5.0;
}

double k23_triple_eigenvalue(double k) {
    return 1.0 - std::exp(-2.0 * k);
}

}  // namespace

TEST_CASE("double centering matches the projector formula") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform_int(2, 12);
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) m(i, j) = m(j, i) = rng.uniform(-3.0, 3.0);
        }
        const Eigen::MatrixXd j =
            Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
        const Eigen::MatrixXd centered = double_center(m);
        CHECK((centered - j * m * j).cwiseAbs().maxCoeff() < 1e-12);
        // exact symmetry, the all-ones kernel, and idempotence
        CHECK((centered - centered.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((centered * Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff() <=
              1e-10 * m.norm());
        CHECK((double_center(centered) - centered).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("double centering closed forms") {
    SUBCASE("all-ones collapses to zero") {
        const Eigen::MatrixXd z = double_center(Eigen::MatrixXd::Ones(4, 4));
        CHECK(z.cwiseAbs().maxCoeff() < 1e-15);
    }
    SUBCASE("2x2 identity") {
        Eigen::MatrixXd expected(2, 2);
        expected << 0.5, -0.5, -0.5, 0.5;
        CHECK((double_center(Eigen::MatrixXd::Identity(2, 2)) - expected)
                  .cwiseAbs()
                  .maxCoeff() < 1e-15);
    }
}

TEST_CASE("double centering rejects asymmetric input") {
    Eigen::MatrixXd m(2, 2);
    m << 0.0, 1.0, 2.0, 0.0;
    CHECK_THROWS_AS(double_center(m), InputError);
}

TEST_CASE("eig_sym basics") {
    SUBCASE("identity") {
        const EigenSystem es = eig_sym(Eigen::MatrixXd::Identity(3, 3));
        for (int i = 0; i < 3; ++i) CHECK(es.eigenvalues[i] == doctest::Approx(1.0));
    }
    SUBCASE("swap matrix") {
        Eigen::MatrixXd m(2, 2);
        m << 0, 1, 1, 0;
        const EigenSystem es = eig_sym(m);
        CHECK(es.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(es.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("eigen pairs reconstruct the matrix, ascending order") {
        Rng rng(11);
        for (int trial = 0; trial < 15; ++trial) {
            const int n = rng.uniform_int(2, 20);
            Eigen::MatrixXd m(n, n);
            for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) m(i, j) = m(j, i) = rng.uniform(-1.0, 1.0);
            }
            const EigenSystem es = eig_sym(m);
            for (int i = 1; i < n; ++i) CHECK(es.eigenvalues[i] >= es.eigenvalues[i - 1]);
            const Eigen::MatrixXd rebuilt = es.eigenvectors *
                                            es.eigenvalues.asDiagonal() *
                                            es.eigenvectors.transpose();
            CHECK((rebuilt - m).cwiseAbs().maxCoeff() < 1e-8 * std::max(1.0, m.norm()));
            CHECK((es.eigenvectors * es.eigenvectors.transpose() -
                   Eigen::MatrixXd::Identity(n, n))
                      .cwiseAbs()
                      .maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("K_{2,3} Laplacian spectrum, checked against its characteristic polynomial") {
    const Eigen::MatrixXd lap = laplacian(make_complete_bipartite(2, 3));
    const EigenSystem es = eig_sym(lap);
    const double expected[] = {0.0, 2.0, 2.0, 3.0, 5.0};
    for (int i = 0; i < 5; ++i) {
        CHECK(es.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-10));
    }
    // the claimed values are exact roots of det(L - t I)
    const std::vector<double> coeffs = charpoly(lap);
    for (double root : expected) {
        CHECK(std::abs(eval_charpoly(coeffs, root)) < 1e-8);
    }
}

TEST_CASE("certify_weight on the identity") {
    const SpectralVerdict v = certify_weight(identity_weight(5));
    CHECK(v.valid);
    CHECK(v.kind == CertificateKind::weight_definite);
    CHECK(v.eigenvalues.size() == 5);
    CHECK(std::abs(v.eigenvalues[v.zero_index]) <= v.tolerance);
    // centering the identity leaves the projector itself: spectrum {0, 1x4}
    CHECK(v.min_nonforced == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 1; i < 5; ++i) {
        CHECK(v.eigenvalues[i] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("certify_weight on K_{2,3} shortest paths at k = 1/4 is invalid") {
    const WeightMatrix w = exp_weight(shortest_paths(make_complete_bipartite(2, 3)), 0.25);
    const SpectralVerdict v = certify_weight(w);
    CHECK_FALSE(v.valid);
    REQUIRE(v.eigenvalues.size() == 5);
    // ascending: lambda_min, 0, then the triple eigenvalue
    CHECK(v.eigenvalues[0] == doctest::Approx(k23_min_eigenvalue(0.25)).epsilon(1e-12));
    CHECK(v.min_nonforced == doctest::Approx(k23_min_eigenvalue(0.25)).epsilon(1e-12));
    CHECK(v.zero_index == 1);
    CHECK(std::abs(v.eigenvalues[1]) <= v.tolerance);
    for (int i = 2; i < 5; ++i) {
        CHECK(v.eigenvalues[i] ==
              doctest::Approx(k23_triple_eigenvalue(0.25)).epsilon(1e-12));
    }
    // the spectrum must account for the whole trace of the centered matrix
    double sum = 0.0;
    for (double lambda : v.eigenvalues) sum += lambda;
    CHECK(sum == doctest::Approx(double_center(w.values).trace()).epsilon(1e-12));
}

TEST_CASE("K_{2,3} exponential weights flip to valid at k = ln(7/5)") {
    const DistanceMatrix p = shortest_paths(make_complete_bipartite(2, 3));
    const double k_star = std::log(7.0 / 5.0);
    for (double k : {0.05, 0.1, 0.25, 0.3}) {
        const SpectralVerdict v = certify_weight(exp_weight(p, k));
        CHECK_FALSE(v.valid);
        CHECK(v.min_nonforced == doctest::Approx(k23_min_eigenvalue(k)).epsilon(1e-11));
    }
    for (double k : {0.4, 0.5, 1.0, 2.0, 5.0}) {
        const SpectralVerdict v = certify_weight(exp_weight(p, k));
        CHECK(v.valid);
        CHECK(v.min_nonforced == doctest::Approx(k23_min_eigenvalue(k)).epsilon(1e-11));
    }
    CHECK(k23_min_eigenvalue(k_star) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("certify_weight on K_{2,3} resistance weights is valid") {
    const Graph g = make_complete_bipartite(2, 3);
    CHECK(certify_weight(exp_weight(effective_resistance(g), 1.0)).valid);
}

TEST_CASE("certify_negative_type basics") {
    SUBCASE("K_{2,3} shortest paths are not of negative type") {
        const SpectralVerdict v =
            certify_negative_type(shortest_paths(make_complete_bipartite(2, 3)));
        CHECK_FALSE(v.valid);
        CHECK(v.kind == CertificateKind::metric_negative_type);
        // -centered(P) has exactly one negative eigenvalue, -2/5
        CHECK(v.min_nonforced == doctest::Approx(-0.4).epsilon(1e-12));
    }
    SUBCASE("any two-point metric is of negative type") {
        Eigen::MatrixXd m(2, 2);
        m << 0.0, 3.7, 3.7, 0.0;
        const DistanceMatrix d{m, DistanceKind::external, {"a", "b"}};
        CHECK(certify_negative_type(d).valid);
    }
    SUBCASE("triangle resistance is of negative type") {
        CHECK(certify_negative_type(effective_resistance(make_complete(3))).valid);
    }
    SUBCASE("path metrics are line metrics, hence of negative type") {
        for (int n = 2; n <= 15; ++n) {
            CHECK(certify_negative_type(shortest_paths(make_path(n))).valid);
        }
    }
    SUBCASE("nonzero diagonal is rejected") {
        Eigen::MatrixXd m(2, 2);
        m << 0.1, 1.0, 1.0, 0.0;
        const DistanceMatrix d{m, DistanceKind::external, {"a", "b"}};
        CHECK_THROWS_AS(certify_negative_type(d), InputError);
    }
}

TEST_CASE("Euclidean distance matrices always certify as negative type") {
    Rng rng(4242);
    for (int dim : {1, 2, 5, 10}) {
        for (int trial = 0; trial < 8; ++trial) {
            const int n = rng.uniform_int(3, 20);
            Embedding e;
            for (int i = 0; i < n; ++i) e.labels.push_back("p" + std::to_string(i));
            e.coordinates = random_cloud(rng, n, dim);
            CHECK(certify_negative_type(embedding_distances(e)).valid);
        }
    }
}

TEST_CASE("negative type implies exponential weights certify for every k") {
    const double k_grid[] = {0.1, 0.25, 0.5, 1.0, 2.0, 5.0};
    Rng rng(99);
    int tested = 0;
    for (int trial = 0; trial < 40; ++trial) {
        DistanceMatrix d = [&]() {
            if (trial % 2 == 0) {
                return effective_resistance(random_connected_graph(rng, 3, 14));
            }
            Embedding e;
            const int n = rng.uniform_int(3, 14);
            for (int i = 0; i < n; ++i) e.labels.push_back("p" + std::to_string(i));
            e.coordinates = random_cloud(rng, n, rng.uniform_int(1, 6));
            return embedding_distances(e);
        }();
        REQUIRE(certify_negative_type(d).valid);
        ++tested;
        for (double k : k_grid) {
            CHECK(certify_weight(exp_weight(d, k)).valid);
        }
    }
    CHECK(tested == 40);
}

TEST_CASE("weights that fail for some k come from metrics that are not of negative type") {
    // counterexamples found by scanning: each failure's metric must fail the
    // negative-type test, and some k on a log grid must fail certification
    ScanConfig config;
    config.k = 0.25;
    config.trials = 80;
    config.seed = 20260815;
    const ScanReport report = find_counterexamples(config);
    REQUIRE(report.failures.size() >= 5);

    std::vector<double> k_grid;
    for (int i = 0; i < 40; ++i) {
        k_grid.push_back(1e-3 * std::pow(10.0 / 1e-3, i / 39.0));
    }
    for (const auto& failure : report.failures) {
        const Graph g = random_graph(failure.n, failure.p, failure.seed);
        const DistanceMatrix p = shortest_paths(g);
        CHECK_FALSE(certify_negative_type(p).valid);
        bool some_k_fails = false;
        for (double k : k_grid) {
            if (!certify_weight(exp_weight(p, k)).valid) {
                some_k_fails = true;
                break;
            }
        }
        CHECK(some_k_fails);
    }
}

TEST_CASE("verdict bookkeeping invariants") {
    Rng rng(515);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = random_connected_graph(rng, 3, 14);
        const WeightMatrix w = exp_weight(shortest_paths(g), rng.uniform(0.1, 2.0));
        const SpectralVerdict v = certify_weight(w);
        REQUIRE(v.eigenvalues.size() == static_cast<std::size_t>(g.size()));
        for (std::size_t i = 1; i < v.eigenvalues.size(); ++i) {
            CHECK(v.eigenvalues[i] >= v.eigenvalues[i - 1]);
        }
        CHECK(std::abs(v.eigenvalues[v.zero_index]) <= v.tolerance);
        double smallest_other = std::numeric_limits<double>::infinity();
        for (int i = 0; i < static_cast<int>(v.eigenvalues.size()); ++i) {
            if (i != v.zero_index) smallest_other = std::min(smallest_other, v.eigenvalues[i]);
        }
        CHECK(v.min_nonforced == smallest_other);
        CHECK(v.valid == (v.min_nonforced > v.tolerance));
        CHECK(v.tolerance_rel == kDefaultTolRel);
    }
}

TEST_CASE("custom tolerance can flip a marginal verdict") {
    // the triple eigenvalue of the K_{2,3} weight sits near 0.39; a huge
    // relative tolerance reclassifies everything as forced-zero territory
    const WeightMatrix w = exp_weight(shortest_paths(make_complete_bipartite(2, 3)), 1.0);
    CHECK(certify_weight(w, 1e-9).valid);
    CHECK_FALSE(certify_weight(w, 0.9).valid);
}
