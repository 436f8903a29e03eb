#include <doctest.h>

#include "netcorr/errors.hpp"
#include "netcorr/graph.hpp"
#include "netcorr/weights.hpp"
#include "test_support.hpp"

using namespace netcorr;
using namespace netcorr::testing;

TEST_CASE("exponential weights are entrywise exp(-k d)") {
    const DistanceMatrix p = shortest_paths(make_complete_bipartite(2, 3));
    const WeightMatrix w = exp_weight(p, 0.25);
    REQUIRE(w.size() == 5);
    CHECK(w.k == 0.25);
    CHECK(w.source == WeightSource::shortest_path);
    CHECK(w.labels == p.labels);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            CHECK(w.values(i, j) ==
                  doctest::Approx(std::exp(-0.25 * p.values(i, j))).epsilon(1e-15));
        }
    }
    // distance 1 and 2 map to the two strict off-diagonal levels
    CHECK(w.values(0, 2) == doctest::Approx(0.77880078307140487).epsilon(1e-14));
    CHECK(w.values(0, 1) == doctest::Approx(0.60653065971263342).epsilon(1e-14));
    CHECK(w.values(0, 0) == 1.0);
}

TEST_CASE("weights inherit symmetry and stay in (0, 1]") {
    Rng rng(808);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = random_connected_graph(rng, 3, 14);
        const WeightMatrix w = exp_weight(shortest_paths(g), rng.uniform(0.05, 3.0));
        CHECK((w.values - w.values.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(w.values.minCoeff() > 0.0);
        CHECK(w.values.maxCoeff() <= 1.0);
        CHECK(w.values.diagonal().minCoeff() == 1.0);
    }
}

TEST_CASE("larger k decays weights faster") {
    const DistanceMatrix p = shortest_paths(make_path(5));
    const WeightMatrix slow = exp_weight(p, 0.1);
    const WeightMatrix fast = exp_weight(p, 2.0);
    CHECK(fast.values(0, 4) < slow.values(0, 4));
}

TEST_CASE("source kind follows the distance kind") {
    const Graph g = make_path(4);
    CHECK(exp_weight(shortest_paths(g), 1.0).source == WeightSource::shortest_path);
    CHECK(exp_weight(effective_resistance(g), 1.0).source == WeightSource::resistance);
}

TEST_CASE("nonpositive k is rejected") {
    const DistanceMatrix p = shortest_paths(make_path(3));
    CHECK_THROWS_AS(exp_weight(p, 0.0), InputError);
    CHECK_THROWS_AS(exp_weight(p, -1.0), InputError);
}

TEST_CASE("entrywise product law: exp(-k1 d) * exp(-k2 d) = exp(-(k1+k2) d)") {
    Rng rng(606);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = random_connected_graph(rng, 3, 12);
        const DistanceMatrix d =
            trial % 2 == 0 ? shortest_paths(g) : effective_resistance(g);
        const double k1 = rng.uniform(0.05, 2.0);
        const double k2 = rng.uniform(0.05, 2.0);
        const Eigen::MatrixXd product =
            exp_weight(d, k1).values.cwiseProduct(exp_weight(d, k2).values);
        CHECK((product - exp_weight(d, k1 + k2).values).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("larger distances always get smaller weights") {
    Rng rng(707);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_connected_graph(rng, 4, 12);
        const DistanceMatrix d = shortest_paths(g);
        const WeightMatrix w = exp_weight(d, rng.uniform(0.1, 2.0));
        const int n = g.size();
        for (int a = 0; a < n * n; ++a) {
            const int i = a / n;
            const int j = a % n;
            const int r = rng.uniform_int(0, n - 1);
            const int c = rng.uniform_int(0, n - 1);
            if (d.values(i, j) > d.values(r, c)) {
                CHECK(w.values(i, j) < w.values(r, c));
            }
        }
    }
}

TEST_CASE("identity weight") {
    const WeightMatrix w = identity_weight(4);
    CHECK(w.source == WeightSource::identity);
    CHECK_FALSE(w.k.has_value());
    CHECK((w.values - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(identity_weight(1), InputError);
}
