#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "latframe/criterion.hpp"
#include "latframe/invariants.hpp"
#include "latframe/lattice.hpp"

namespace latframe {

// Outcome of the --oracle cross-checks. A failed check never reaches this
// struct: it raises SelfCheckFailure instead. subgroup_scan_skipped records
// that the brute-force scan was refused because r^{2d} exceeded the bound.
struct OracleReport {
    bool verified = false;
    bool subgroup_scan_skipped = false;
};

struct AnalysisReport {
    Lattice lattice;
    LatticeInvariants invariants;
    FrameDecision decision;
    std::string tool_version;
    std::optional<OracleReport> oracle;
};

// Inline form: rows separated by ';', entries by ','. The matrix must be
// square of even dimension; expect_d, when given, must match rows/2.
Lattice parse_lattice_inline(const std::string& text,
                             std::optional<std::size_t> expect_d = std::nullopt);

// Structured form: {"d": <int>, "matrix": [[...], ...], "nonrational": bool}
// with entries either integer literals or strings "p/q".
Lattice parse_lattice_json(const nlohmann::json& doc);

// Renders the generator in the inline text form, canonical entries.
std::string render_matrix_inline(const RatMatrix& m);

// Full pipeline: invariants + frame decision, plus the oracle cross-checks
// when run_oracle is set. Refuses the brute-force subgroup scan when
// r^{2d} > 10^6 (the scan is marked skipped, not failed).
AnalysisReport analyze(const Lattice& lattice, bool run_oracle = false);

nlohmann::ordered_json report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

// One entry per input, order preserving; a failing entry carries its error
// message and does not abort the rest.
struct BatchEntry {
    std::optional<AnalysisReport> report;
    std::string error;

    bool ok() const { return report.has_value(); }
};

std::vector<BatchEntry> run_batch(const nlohmann::json& documents, bool run_oracle = false);

} // namespace latframe
