#include <doctest.h>

#include "netcorr/errors.hpp"
#include "netcorr/metrics.hpp"
#include "netcorr/spectral.hpp"
#include "test_support.hpp"

using namespace netcorr;
using namespace netcorr::testing;

TEST_CASE("effective resistance closed forms") {
    SUBCASE("single edge is one Ohm") {
        const DistanceMatrix omega = effective_resistance(parse_edge_list("a b"));
        CHECK(omega.values(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(omega.kind == DistanceKind::resistance);
    }
    SUBCASE("triangle: 1 Ohm in parallel with 2 Ohms") {
        const DistanceMatrix omega = effective_resistance(make_complete(3));
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const double expected = i == j ? 0.0 : 2.0 / 3.0;
                CHECK(omega.values(i, j) == doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }
    SUBCASE("complete graph: 2/n between every pair") {
        const DistanceMatrix omega = effective_resistance(make_complete(7));
        CHECK(omega.values(2, 5) == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
    }
    SUBCASE("path graph: resistors in series") {
        const DistanceMatrix omega = effective_resistance(make_path(6));
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                CHECK(omega.values(i, j) == doctest::Approx(std::abs(i - j)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("effective resistance matches the grounded-solver oracle") {
    Rng rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_connected_graph(rng, 2, 14);
        const DistanceMatrix omega = effective_resistance(g);
        const Eigen::MatrixXd expected = oracle_resistance(g);
        CHECK((omega.values - expected).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("effective resistance is a metric and of negative type") {
    Rng rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected_graph(rng, 3, 16);
        const DistanceMatrix omega = effective_resistance(g);
        const int n = g.size();
        CHECK((omega.values - omega.values.transpose()).cwiseAbs().maxCoeff() == 0.0);
        for (int i = 0; i < n; ++i) {
            CHECK(omega.values(i, i) == 0.0);
            for (int j = 0; j < n; ++j) {
                if (i != j) CHECK(omega.values(i, j) > 0.0);
                for (int k = 0; k < n; ++k) {
                    CHECK(omega.values(i, j) <=
                          omega.values(i, k) + omega.values(k, j) + 1e-12);
                }
            }
        }
        CHECK(certify_negative_type(omega).valid);
    }
}

TEST_CASE("effective resistance requires a connected graph") {
    CHECK_THROWS_AS(effective_resistance(parse_edge_list("a b\nc d")), DisconnectedError);
}

TEST_CASE("resistance never exceeds shortest-path distance") {
    Rng rng(404);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = random_connected_graph(rng, 3, 14);
        const DistanceMatrix omega = effective_resistance(g);
        const DistanceMatrix p = shortest_paths(g);
        CHECK((omega.values - p.values).maxCoeff() <= 1e-10);
    }
}

TEST_CASE("embedding distances") {
    SUBCASE("two points on an axis") {
        Embedding e;
        e.labels = {"a", "b"};
        e.coordinates.resize(2, 3);
        e.coordinates << 0, 0, 0, 3, 4, 0;
        const DistanceMatrix d = embedding_distances(e);
        CHECK(d.values(0, 1) == doctest::Approx(5.0).epsilon(1e-15));
        CHECK(d.kind == DistanceKind::embedding);
        CHECK_FALSE(has_zero_offdiagonal(d));
    }
    SUBCASE("coincident rows give zero off-diagonal entries, flagged not rejected") {
        Embedding e;
        e.labels = {"a", "b", "c"};
        e.coordinates.resize(3, 2);
        e.coordinates << 1, 2, 1, 2, 0, 0;
        const DistanceMatrix d = embedding_distances(e);
        CHECK(d.values(0, 1) == 0.0);
        CHECK(has_zero_offdiagonal(d));
    }
    SUBCASE("rigid motions leave distances unchanged") {
        Rng rng(909);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = rng.uniform_int(3, 12);
            const int dim = rng.uniform_int(1, 6);
            Embedding e;
            for (int i = 0; i < n; ++i) e.labels.push_back("p" + std::to_string(i));
            e.coordinates = random_cloud(rng, n, dim);
            Embedding moved = e;
            moved.coordinates =
                (e.coordinates * random_rotation(rng, dim)).rowwise() +
                Eigen::RowVectorXd::Constant(dim, rng.uniform(-5.0, 5.0));
            const DistanceMatrix before = embedding_distances(e);
            const DistanceMatrix after = embedding_distances(moved);
            CHECK((before.values - after.values).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("commute-time embedding realizes effective resistance") {
    Rng rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected_graph(rng, 2, 16);
        const Embedding e = commute_time_embedding(g);
        CHECK(e.size() == g.size());
        CHECK(e.dimension() == g.size() - 1);
        CHECK(e.labels == g.labels());
        const DistanceMatrix d = embedding_distances(e);
        const DistanceMatrix omega = effective_resistance(g);
        const Eigen::MatrixXd squared = d.values.array().square();
        CHECK((squared - omega.values).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("commute-time embedding of a single edge") {
    const Embedding e = commute_time_embedding(parse_edge_list("a b"));
    REQUIRE(e.dimension() == 1);
    const double gap = std::abs(e.coordinates(0, 0) - e.coordinates(1, 0));
    CHECK(gap * gap == doctest::Approx(1.0).epsilon(1e-12));
}
