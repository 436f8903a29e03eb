#include "netcorr/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "netcorr/correlation.hpp"
#include "netcorr/errors.hpp"
#include "netcorr/graph.hpp"
#include "netcorr/io.hpp"
#include "netcorr/metrics.hpp"
#include "netcorr/report.hpp"
#include "netcorr/scan.hpp"
#include "netcorr/spectral.hpp"
#include "netcorr/weights.hpp"

namespace netcorr {

namespace {

struct MetricOpts {
    std::string graph_path;
    std::string metric = "shortest-path";
    double k = 1.0;
    double tol = kDefaultTolRel;
    std::string embedding_path;
    bool commute_time = false;
    std::string output_path;
};

void add_metric_options(CLI::App* cmd, MetricOpts& opts) {
    cmd->add_option("--graph", opts.graph_path, "edge-list file")->required();
    cmd->add_option("--metric", opts.metric,
                    "distance metric behind the weight matrix, or 'identity' for the "
                    "classical correlation")
        ->check(CLI::IsMember({"shortest-path", "resistance", "embedding", "identity"}));
    cmd->add_option("--k", opts.k, "scale factor of the exponential weight exp(-k d)");
    cmd->add_option("--tol", opts.tol, "relative eigenvalue tolerance for certification");
    cmd->add_option("--embedding", opts.embedding_path,
                    "embedding CSV for --metric embedding");
    cmd->add_flag("--commute-time", opts.commute_time,
                  "use the built-in commute-time embedding for --metric embedding");
    cmd->add_option("--output", opts.output_path, "write the report here instead of stdout");
}

// The distance matrix behind the weights, when the metric has one; the
// identity metric goes straight to a weight matrix.
struct MetricSource {
    WeightMatrix w;
    std::optional<DistanceMatrix> d;
    std::string weight_name;
    std::string metric_name;
};

MetricSource resolve_metric(const Graph& g, const MetricOpts& opts) {
    MetricSource source;
    if (opts.metric == "identity") {
        if (!opts.embedding_path.empty() || opts.commute_time) {
            throw InputError("the identity metric takes no embedding");
        }
        source.w = identity_weight(g.size());
        source.w.labels = g.labels();
        source.weight_name = "identity matrix";
        source.metric_name = "identity";
        return source;
    }

    if (opts.metric == "embedding") {
        if (opts.embedding_path.empty() == !opts.commute_time) {
            throw InputError(
                "--metric embedding needs exactly one of --embedding <file> or "
                "--commute-time");
        }
        const Embedding e = opts.commute_time
                                ? commute_time_embedding(g)
                                : load_embedding_csv(opts.embedding_path, &g.labels());
        source.d = embedding_distances(e);
        source.metric_name =
            opts.commute_time ? "embedding (commute-time)" : "embedding (" + opts.embedding_path + ")";
    } else {
        if (!opts.embedding_path.empty() || opts.commute_time) {
            throw InputError("--embedding/--commute-time require --metric embedding");
        }
        if (opts.metric == "shortest-path") {
            source.d = shortest_paths(g);
        } else {
            source.d = effective_resistance(g);
        }
        source.metric_name = opts.metric;
    }
    source.w = exp_weight(*source.d, opts.k);
    source.weight_name = "exp(-" + format_full(opts.k) + " * " + source.metric_name + " distance)";
    return source;
}

void write_graph_header(std::ostream& out, const std::string& path, const Graph& g,
                        const MetricSource& source, double tol) {
    out << "graph: " << path << " (" << g.size() << " nodes, " << g.edges().size()
        << " edges)\n";
    out << "metric: " << source.metric_name << '\n';
    if (source.w.k) out << "k: " << format_full(*source.w.k) << '\n';
    out << "tolerance rel: " << format_full(tol) << '\n';
    if (source.d && has_zero_offdiagonal(*source.d)) {
        out << "warning: coincident embedded nodes (zero off-diagonal distance)\n";
    }
}

// Report writers emit to a buffer first so --output files are all-or-nothing.
int deliver(const std::string& report, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << report;
        return kExitValid;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + output_path + "'");
    file << report;
    return kExitValid;
}

int run_validate(const MetricOpts& opts, std::ostream& out) {
    const Graph g = load_graph(opts.graph_path);
    const MetricSource source = resolve_metric(g, opts);
    const SpectralVerdict weight_verdict = certify_weight(source.w, opts.tol);

    std::ostringstream report;
    write_graph_header(report, opts.graph_path, g, source, opts.tol);
    report << '\n';
    write_verdict_block(report, weight_verdict, source.weight_name);
    if (source.d) {
        const SpectralVerdict metric_verdict = certify_negative_type(*source.d, opts.tol);
        report << '\n';
        write_verdict_block(report, metric_verdict, source.metric_name + " distance matrix");
    }
    deliver(report.str(), opts.output_path, out);
    return weight_verdict.valid ? kExitValid : kExitInvalid;
}

int run_corr(const MetricOpts& opts, const std::string& x_path, const std::string& y_path,
             bool unsafe_override, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(opts.graph_path);
    const MetricSource source = resolve_metric(g, opts);
    const Signal x = load_signal_csv(x_path, g);
    const Signal y = load_signal_csv(y_path, g);
    const SpectralVerdict verdict = certify_weight(source.w, opts.tol);

    std::ostringstream report;
    write_graph_header(report, opts.graph_path, g, source, opts.tol);
    report << "x: " << x_path << '\n';
    report << "y: " << y_path << '\n';
    report << '\n';
    write_verdict_block(report, verdict, source.weight_name);
    report << '\n';

    if (!verdict.valid && !unsafe_override) {
        report << "correlation: refused, the weight matrix is not positive definite on "
                  "the zero-sum subspace (pass --unsafe-override to compute anyway)\n";
        deliver(report.str(), opts.output_path, out);
        err << "error: certificate invalid, correlation could be imaginary or unbounded\n";
        return kExitInvalid;
    }

    const CorrelationResult result = network_pearson(x, y, source.w, verdict, unsafe_override);
    write_correlation_block(report, result);
    deliver(report.str(), opts.output_path, out);
    return verdict.valid ? kExitValid : kExitInvalid;
}

int run_resistance(const std::string& graph_path, const std::string& output_path,
                   std::ostream& out) {
    const Graph g = load_graph(graph_path);
    const DistanceMatrix omega = effective_resistance(g);
    std::ostringstream report;
    write_matrix_csv(report, omega.labels, omega.values);
    return deliver(report.str(), output_path, out);
}

int run_embed(const std::string& graph_path, const std::string& output_path, std::ostream& out) {
    const Graph g = load_graph(graph_path);
    std::ostringstream report;
    write_embedding_csv(report, commute_time_embedding(g));
    return deliver(report.str(), output_path, out);
}

int run_scan(const ScanConfig& config, const std::string& output_path, std::ostream& out) {
    const ScanReport report = find_counterexamples(config);
    std::ostringstream text;
    write_scan_report(text, report);
    return deliver(text.str(), output_path, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"network Pearson correlation with spectral weight certification"};
    app.name("netcorr");
    app.require_subcommand(1);

    MetricOpts validate_opts;
    CLI::App* validate = app.add_subcommand(
        "validate", "certify a weight matrix before any correlation is computed");
    add_metric_options(validate, validate_opts);

    MetricOpts corr_opts;
    std::string x_path;
    std::string y_path;
    bool unsafe_override = false;
    CLI::App* corr =
        app.add_subcommand("corr", "network Pearson correlation of two node signals");
    add_metric_options(corr, corr_opts);
    corr->add_option("--x", x_path, "signal CSV")->required();
    corr->add_option("--y", y_path, "signal CSV")->required();
    corr->add_flag("--unsafe-override", unsafe_override,
                   "compute even when certification fails; non-real results are "
                   "labeled, not silently NaN");

    std::string resistance_graph;
    std::string resistance_output;
    CLI::App* resistance =
        app.add_subcommand("resistance", "effective resistance matrix as CSV");
    resistance->add_option("--graph", resistance_graph, "edge-list file")->required();
    resistance->add_option("--output", resistance_output,
                           "write the matrix here instead of stdout");

    std::string embed_graph;
    std::string embed_output;
    CLI::App* embed = app.add_subcommand(
        "embed", "commute-time embedding (squared distances = effective resistance)");
    embed->add_option("--graph", embed_graph, "edge-list file")->required();
    embed->add_option("--output", embed_output, "write the embedding here instead of stdout");

    ScanConfig scan_config;
    std::string scan_family = "er";
    std::string scan_output;
    CLI::App* scan = app.add_subcommand(
        "scan", "search random graphs for weight matrices that fail certification");
    scan->add_option("--family", scan_family, "graph family to sample")
        ->check(CLI::IsMember({"er", "complete", "path"}));
    scan->add_option("--trials", scan_config.trials, "number of sampled graphs");
    scan->add_option("--seed", scan_config.seed, "master seed; fixes the whole report");
    scan->add_option("--k", scan_config.k, "scale factor of the exponential weight");
    scan->add_option("--tol", scan_config.tol_rel, "relative eigenvalue tolerance");
    scan->add_option("--n-min", scan_config.n_min, "smallest node count");
    scan->add_option("--n-max", scan_config.n_max, "largest node count");
    scan->add_option("--p-min", scan_config.p_min, "smallest edge probability");
    scan->add_option("--p-max", scan_config.p_max, "largest edge probability");
    scan->add_flag("--include-k23", scan_config.include_k23,
                   "also certify the complete bipartite 2x3 graph, a known failure "
                   "at small k");
    scan->add_option("--threads", scan_config.threads, "worker threads");
    scan->add_option("--output", scan_output, "write the report here instead of stdout");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("netcorr");
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitValid : kExitError;
    }

    try {
        if (app.got_subcommand(validate)) return run_validate(validate_opts, out);
        if (app.got_subcommand(corr)) {
            return run_corr(corr_opts, x_path, y_path, unsafe_override, out, err);
        }
        if (app.got_subcommand(resistance)) {
            return run_resistance(resistance_graph, resistance_output, out);
        }
        if (app.got_subcommand(embed)) return run_embed(embed_graph, embed_output, out);
        if (app.got_subcommand(scan)) {
            if (scan_family == "complete") scan_config.family = GraphFamily::complete;
            if (scan_family == "path") scan_config.family = GraphFamily::path;
            return run_scan(scan_config, scan_output, out);
        }
        err << "error: no subcommand\n";
        return kExitError;
    } catch (const CertificateError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const NegativeVarianceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace netcorr
