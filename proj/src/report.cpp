#include "netcorr/report.hpp"

#include <cstdio>
#include <ostream>

namespace netcorr {

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

const char* describe(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::weight_definite:
            return "weight matrix positive definite on the zero-sum subspace";
        case CertificateKind::metric_negative_type:
            return "distance matrix of negative type";
    }
    return "unknown";
}

}  // namespace

void write_verdict_block(std::ostream& out, const SpectralVerdict& v,
                         std::string_view source) {
    out << "certificate: " << describe(v.kind) << '\n';
    out << "source: " << source << '\n';
    out << "nodes: " << v.eigenvalues.size() << '\n';
    out << "tolerance: " << format_full(v.tolerance) << " (relative "
        << format_full(v.tolerance_rel) << ")\n";
    out << "centered eigenvalues: ";
    for (std::size_t i = 0; i < v.eigenvalues.size(); ++i) {
        if (i) out << ',';
        out << format_full(v.eigenvalues[i]);
    }
    out << '\n';
    out << "forced zero index: " << v.zero_index << '\n';
    out << "min non-forced eigenvalue: " << format_full(v.min_nonforced) << '\n';
    out << "verdict: " << (v.valid ? "valid" : "INVALID") << '\n';
}

void write_correlation_block(std::ostream& out, const CorrelationResult& r) {
    out << "correlation kind: " << to_string(r.kind) << '\n';
    if (r.kind == CorrelationKind::real) {
        out << "rho: " << format_full(r.rho) << '\n';
    } else {
        out << "rho: undefined (" << to_string(r.kind) << " correlation)\n";
    }
    out << "numerator: " << format_full(r.numerator) << '\n';
    out << "var x: " << format_full(r.var_x) << '\n';
    out << "var y: " << format_full(r.var_y) << '\n';
    out << "sigma x: " << format_full(r.sigma_x) << '\n';
    out << "sigma y: " << format_full(r.sigma_y) << '\n';
}

void write_scan_report(std::ostream& out, const ScanReport& report) {
    const ScanConfig& c = report.config;
    out << "scan: exponential weight certification sweep\n";
    out << "family: " << to_string(c.family) << '\n';
    out << "trials: " << c.trials << '\n';
    out << "n: " << c.n_min << ".." << c.n_max << '\n';
    if (c.family == GraphFamily::erdos_renyi) {
        out << "p: " << format_full(c.p_min) << ".." << format_full(c.p_max) << '\n';
    }
    out << "k: " << format_full(c.k) << '\n';
    out << "tolerance rel: " << format_full(c.tol_rel) << '\n';
    out << "seed: " << c.seed << '\n';
    out << "injected known counterexample: " << (c.include_k23 ? "yes" : "no") << '\n';
    out << '\n';
    out << "certified: " << report.certified << '\n';
    out << "skipped disconnected: " << report.skipped_disconnected << '\n';
    out << "failures: " << report.failures.size() << '\n';
    out << "failure rate: " << format_full(report.failure_rate) << '\n';
    if (!report.failures.empty()) {
        out << '\n';
        out << "injected,trial,seed,family,n,p,k,min_nonforced\n";
        for (const auto& f : report.failures) {
            out << (f.injected ? 1 : 0) << ',' << f.trial << ',' << f.seed << ','
                << to_string(f.family) << ',' << f.n << ',' << format_full(f.p) << ','
                << format_full(f.k) << ',' << format_full(f.min_nonforced) << '\n';
        }
    }
}

}  // namespace netcorr
