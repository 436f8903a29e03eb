#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netcorr/graph.hpp"
#include "netcorr/spectral.hpp"

namespace netcorr {

/// Erdos-Renyi G(n, p) under a fixed, named generator: std::mt19937_64
/// seeded with `seed`, candidate pairs visited in row-major order (i < j),
/// each kept when a 53-bit uniform draw in [0, 1) falls below p. The same
/// seed yields the same graph on every platform. Labels are "n0", "n1", ...
Graph random_graph(int n, double p, std::uint64_t seed);

enum class GraphFamily { erdos_renyi, complete, path };

const char* to_string(GraphFamily family);

struct ScanConfig {
    GraphFamily family = GraphFamily::erdos_renyi;
    int n_min = 4;
    int n_max = 12;
    double p_min = 0.2;       // erdos_renyi only
    double p_max = 0.8;
    double k = 1.0;
    double tol_rel = kDefaultTolRel;
    int trials = 100;
    std::uint64_t seed = 0;
    bool include_k23 = false;  // also certify the complete bipartite 2x3 graph
    int threads = 1;
};

/// One graph whose shortest-path weight matrix failed certification.
/// Erdos-Renyi entries regenerate from (n, p, seed) via random_graph;
/// complete and path entries regenerate from n alone.
struct ScanFailure {
    GraphFamily family = GraphFamily::erdos_renyi;
    bool injected = false;  // the fixed K_{2,3} check, not a sampled trial
    int trial = -1;
    std::uint64_t seed = 0;
    int n = 0;
    double p = 0.0;
    double k = 0.0;
    double min_nonforced = 0.0;
};

struct ScanReport {
    ScanConfig config;
    int trials = 0;
    int skipped_disconnected = 0;
    int certified = 0;                  // trials - skipped_disconnected
    std::vector<ScanFailure> failures;  // sorted by seed, injected entry first
    double failure_rate = 0.0;          // sampled failures / certified
};

/// Samples `trials` graphs from the configured family, certifies the
/// exponential shortest-path weight matrix of each connected sample, and
/// reports every failure with enough data to regenerate it. Disconnected
/// samples are skipped and counted. Trials are distributed over
/// config.threads workers; the report does not depend on the thread count.
ScanReport find_counterexamples(const ScanConfig& config);

}  // namespace netcorr
