#include "netcorr/scan.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <random>
#include <thread>

#include "netcorr/errors.hpp"
#include "netcorr/weights.hpp"

namespace netcorr {

namespace {

// 53-bit uniform draw in [0, 1); keeps graph generation identical across
// platforms, unlike the standard distributions.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 2) {
        throw InputError("random graph needs n >= 2");
    }
    if (!(p > 0.0) || p > 1.0) {
        throw InputError("edge probability must lie in (0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (uniform01(rng) < p) edges.emplace_back(i, j);
        }
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("n" + std::to_string(i));
    return Graph(std::move(labels), std::move(edges));
}

namespace {

struct TrialOutcome {
    bool skipped = false;
    std::optional<ScanFailure> failure;
};

struct TrialPlan {
    std::uint64_t derivation_seed = 0;
};

TrialOutcome run_trial(const ScanConfig& config, int trial, std::uint64_t derivation_seed) {
    std::mt19937_64 rng(derivation_seed);
    const int n = uniform_int(rng, config.n_min, config.n_max);

    double p = 0.0;
    std::uint64_t graph_seed = 0;
    Graph graph = [&]() -> Graph {
        switch (config.family) {
            case GraphFamily::erdos_renyi:
                p = config.p_min + (config.p_max - config.p_min) * uniform01(rng);
                graph_seed = rng();
                return random_graph(n, p, graph_seed);
            case GraphFamily::complete:
                p = 1.0;
                graph_seed = rng();
                return random_graph(n, p, graph_seed);  // G(n, 1) is K_n
            case GraphFamily::path:
                graph_seed = rng();
                return make_path(n);
        }
        throw InputError("unknown graph family");
    }();

    TrialOutcome outcome;
    if (!is_connected(graph)) {
        outcome.skipped = true;
        return outcome;
    }
    const SpectralVerdict verdict =
        certify_weight(exp_weight(shortest_paths(graph), config.k), config.tol_rel);
    if (!verdict.valid) {
        outcome.failure = ScanFailure{config.family, false,   trial,    graph_seed,
                                      n,             p,       config.k, verdict.min_nonforced};
    }
    return outcome;
}

void validate(const ScanConfig& config) {
    if (config.trials < 1) throw InputError("trials must be >= 1");
    if (config.n_min < 2 || config.n_min > config.n_max) {
        throw InputError("need 2 <= n_min <= n_max");
    }
    if (config.family == GraphFamily::erdos_renyi) {
        if (!(config.p_min > 0.0) || config.p_min > config.p_max || config.p_max > 1.0) {
            throw InputError("need 0 < p_min <= p_max <= 1");
        }
    }
    if (!(config.k > 0.0)) throw InputError("scale factor k must be > 0");
    if (config.threads < 1) throw InputError("threads must be >= 1");
}

}  // namespace

ScanReport find_counterexamples(const ScanConfig& config) {
    validate(config);

    // Per-trial seeds are drawn up front from the master seed, so the work
    // split across threads cannot change what any trial computes.
    std::mt19937_64 master(config.seed);
    std::vector<TrialPlan> plans(config.trials);
    for (auto& plan : plans) plan.derivation_seed = master();

    std::vector<TrialOutcome> outcomes(config.trials);
    const int workers = std::min(config.threads, config.trials);
    if (workers <= 1) {
        for (int i = 0; i < config.trials; ++i) {
            outcomes[i] = run_trial(config, i, plans[i].derivation_seed);
        }
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                for (int i = next.fetch_add(1); i < config.trials; i = next.fetch_add(1)) {
                    outcomes[i] = run_trial(config, i, plans[i].derivation_seed);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    ScanReport report;
    report.config = config;
    report.trials = config.trials;
    int sampled_failures = 0;
    for (const auto& outcome : outcomes) {
        if (outcome.skipped) {
            ++report.skipped_disconnected;
        } else if (outcome.failure) {
            report.failures.push_back(*outcome.failure);
            ++sampled_failures;
        }
    }
    report.certified = report.trials - report.skipped_disconnected;

    if (config.include_k23) {
        const Graph k23 = make_complete_bipartite(2, 3);
        const SpectralVerdict verdict =
            certify_weight(exp_weight(shortest_paths(k23), config.k), config.tol_rel);
        if (!verdict.valid) {
            report.failures.push_back(ScanFailure{GraphFamily::complete, true, -1, 0, k23.size(),
                                                  0.0, config.k, verdict.min_nonforced});
        }
    }

    std::stable_sort(report.failures.begin(), report.failures.end(),
                     [](const ScanFailure& a, const ScanFailure& b) {
                         if (a.seed != b.seed) return a.seed < b.seed;
                         return a.trial < b.trial;
                     });
    // The injected check is extra evidence, not a sampled trial, so it does
    // not enter the rate.
    report.failure_rate =
        report.certified > 0 ? static_cast<double>(sampled_failures) / report.certified : 0.0;
    return report;
}

const char* to_string(GraphFamily family) {
    switch (family) {
        case GraphFamily::erdos_renyi: return "er";
        case GraphFamily::complete: return "complete";
        case GraphFamily::path: return "path";
    }
    return "unknown";
}

}  // namespace netcorr
