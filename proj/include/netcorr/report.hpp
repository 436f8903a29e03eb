#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "netcorr/correlation.hpp"
#include "netcorr/scan.hpp"
#include "netcorr/spectral.hpp"

namespace netcorr {

/// 17 significant digits, enough for any double to round-trip exactly.
std::string format_full(double v);

/// Key/value block for a certificate: where the matrix came from, verdict,
/// thresholds and the full spectrum as one CSV line.
void write_verdict_block(std::ostream& out, const SpectralVerdict& v, std::string_view source);

void write_correlation_block(std::ostream& out, const CorrelationResult& r);

/// Deterministic scan report: configuration echo, counts, and one CSV row
/// per failure. Byte-identical for identical configurations.
void write_scan_report(std::ostream& out, const ScanReport& report);

}  // namespace netcorr
