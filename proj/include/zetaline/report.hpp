#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zetaline/scan.hpp"

namespace zetaline {

enum class ReportFormat { csv, json, plot };

ReportFormat report_format_from_string(const std::string& name);

// csv: the nine fixed columns, one row per record, mids and radii as
// shortest round-trip decimals, so identical records serialize to identical
// bytes. json: the same fields per record (plus reason when set). plot:
// per-quantity blocks of "t computed_mid bound_mid" rows separated by blank
// lines, gnuplot-ready.
void emit_report(const std::vector<VerificationRecord>& records,
                 ReportFormat format, std::ostream& out);
void emit_report(const std::vector<VerificationRecord>& records,
                 ReportFormat format, const std::string& path);

// Inverse of the csv emitter at double fidelity; verdicts and quantities
// round-trip exactly, reasons are not part of the csv schema.
std::vector<VerificationRecord> parse_csv_report(std::istream& in);

}  // namespace zetaline
