#include "latframe/report.hpp"

#include <sstream>

#include "latframe/errors.hpp"
#include "latframe/smith.hpp"
#include "latframe/version.hpp"

namespace latframe {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* kInfinite = "infinite";

// refusal bound for the brute-force subgroup scan
const long kScanLimit = 1000000;

RatMatrix matrix_from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) {
        throw ParseError("matrix has no rows");
    }
    const std::size_t n = rows.size();
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw DimensionError("matrix must be square of size 2d x 2d");
        }
    }
    if (n % 2 != 0) {
        throw DimensionError("matrix must have even dimension 2d");
    }
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return m;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    parts.push_back(current);
    return parts;
}

ordered_json rational_json(const Rational& x) {
    return to_string(x);
}

ordered_json integer_list_json(const std::vector<Integer>& xs) {
    ordered_json arr = ordered_json::array();
    for (const Integer& x : xs) arr.push_back(to_string(x));
    return arr;
}

ordered_json matrix_json(const RatMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::string join_integers(const std::vector<Integer>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += to_string(xs[i]);
    }
    return out;
}

// Cross-checks behind --oracle. Any mismatch is an internal error, never a
// report field: these identities hold for every valid input.
OracleReport run_oracle_checks(const Lattice& lattice, const LatticeInvariants& inv) {
    OracleReport oracle;

    const SkewMatrix theta = associated_skew_matrix(lattice);
    const IntMatrix scaled = to_integer(scale(theta.entries(), Rational(*inv.r)));

    // Smith normal form route: elementary divisors must pair up as
    // (h_1, h_1, ..., h_d, h_d).
    const SmithNormalForm snf = smith_normal_form(scaled);
    if (snf.u * scaled * snf.v != snf.s || !is_unimodular(snf.u) || !is_unimodular(snf.v)) {
        throw SelfCheckFailure("smith normal form factorization failed");
    }
    for (std::size_t i = 0; i < inv.d; ++i) {
        if (snf.s(2 * i, 2 * i) != inv.h[i] || snf.s(2 * i + 1, 2 * i + 1) != inv.h[i]) {
            throw SelfCheckFailure("elementary divisors disagree with the invariant factors");
        }
    }

    // |det(M^-1 G)| must equal the subgroup index n^2.
    const RatMatrix& g = *inv.omega_subgroup_generator;
    const Rational index_det = abs(det(g) / det(lattice.generator()));
    if (index_det != Rational(*inv.index)) {
        throw SelfCheckFailure("subgroup generator determinant disagrees with the index");
    }

    // Brute-force membership scan over the coordinate box [0, r)^{2d},
    // refused when the box is too large.
    const std::size_t dim = 2 * inv.d;
    Integer box = pow_integer(*inv.r, static_cast<unsigned long>(dim));
    if (box > kScanLimit) {
        oracle.subgroup_scan_skipped = true;
        oracle.verified = true;
        return oracle;
    }
    // integer forms of both sides: membership is r | (r*theta*k), the span
    // side is r_i | (R^-1 k)_i since M^-1 G = R * diag(r_i, r_i)
    const Integer& r = *inv.r;
    const IntMatrix rinv = to_integer(inverse(to_rational(*inv.snf_transform)));
    const unsigned long r_ul = mpz_get_ui(r.get_mpz_t());
    IntVector k(dim, Integer(0));
    while (true) {
        bool in_subgroup = true;
        for (std::size_t i = 0; i < dim && in_subgroup; ++i) {
            Integer acc = 0;
            for (std::size_t j = 0; j < dim; ++j) acc += scaled(i, j) * k[j];
            if (acc % r != 0) in_subgroup = false;
        }
        bool in_span = true;
        for (std::size_t i = 0; i < dim && in_span; ++i) {
            Integer acc = 0;
            for (std::size_t j = 0; j < dim; ++j) acc += rinv(i, j) * k[j];
            if (acc % inv.r_i[i % inv.d] != 0) in_span = false;
        }
        if (in_span != in_subgroup) {
            throw SelfCheckFailure("subgroup scan disagrees with the generator span");
        }
        // odometer
        std::size_t pos = 0;
        while (pos < dim) {
            k[pos] += 1;
            if (k[pos] < r_ul) break;
            k[pos] = 0;
            ++pos;
        }
        if (pos == dim) break;
    }
    oracle.verified = true;
    return oracle;
}

} // namespace

Lattice parse_lattice_inline(const std::string& text, std::optional<std::size_t> expect_d) {
    std::vector<std::vector<Rational>> rows;
    for (const std::string& row_text : split(text, ';')) {
        std::vector<Rational> row;
        for (const std::string& cell : split(row_text, ',')) {
            row.push_back(parse_rational(cell));
        }
        rows.push_back(std::move(row));
    }
    RatMatrix m = matrix_from_rows(rows);
    if (expect_d && m.rows() != 2 * *expect_d) {
        throw DimensionError("matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " but d=" +
                             std::to_string(*expect_d) + " requires " +
                             std::to_string(2 * *expect_d) + " rows");
    }
    return Lattice(std::move(m));
}

Lattice parse_lattice_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw ParseError("lattice document must be an object");
    }
    if (!doc.contains("d") || !doc["d"].is_number_integer()) {
        throw ParseError("lattice document needs an integer field 'd'");
    }
    const long long d_field = doc["d"].get<long long>();
    if (d_field < 1) {
        throw ParseError("field 'd' must be a positive integer");
    }
    if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
        throw ParseError("lattice document needs a 'matrix' array");
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : doc["matrix"]) {
        if (!row.is_array()) {
            throw ParseError("'matrix' must be an array of rows");
        }
        std::vector<Rational> parsed;
        for (const auto& cell : row) {
            if (cell.is_number_integer()) {
                parsed.push_back(Rational(Integer(static_cast<long>(cell.get<long long>()))));
            } else if (cell.is_string()) {
                parsed.push_back(parse_rational(cell.get<std::string>()));
            } else {
                throw ParseError("matrix entries must be integers or strings like \"p/q\"");
            }
        }
        rows.push_back(std::move(parsed));
    }
    bool nonrational = false;
    if (doc.contains("nonrational")) {
        if (!doc["nonrational"].is_boolean()) {
            throw ParseError("field 'nonrational' must be a boolean");
        }
        nonrational = doc["nonrational"].get<bool>();
    }
    RatMatrix m = matrix_from_rows(rows);
    if (m.rows() != 2 * static_cast<std::size_t>(d_field)) {
        throw DimensionError("matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " but d=" +
                             std::to_string(d_field) + " requires " +
                             std::to_string(2 * d_field) + " rows");
    }
    return Lattice(std::move(m), nonrational);
}

std::string render_matrix_inline(const RatMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += to_string(m(i, j));
        }
    }
    return out;
}

AnalysisReport analyze(const Lattice& lattice, bool run_oracle) {
    AnalysisReport report{lattice, compute_invariants(lattice),
                          FrameDecision{}, LATFRAME_VERSION, std::nullopt};
    report.decision = schwartz_frame_criterion(report.invariants);
    if (run_oracle && report.invariants.rational) {
        report.oracle = run_oracle_checks(lattice, report.invariants);
    } else if (run_oracle) {
        // nothing to cross-check for a declared non-rational lattice
        OracleReport oracle;
        oracle.verified = true;
        oracle.subgroup_scan_skipped = true;
        report.oracle = oracle;
    }
    return report;
}

nlohmann::ordered_json report_to_json(const AnalysisReport& report) {
    const LatticeInvariants& inv = report.invariants;
    ordered_json out;
    out["d"] = inv.d;
    out["matrix"] = matrix_json(report.lattice.generator());
    out["rational"] = inv.rational;
    out["covol"] = rational_json(inv.covol);
    if (inv.rational) {
        out["order_r"] = to_string(*inv.r);
        out["invariant_factors"] = integer_list_json(inv.h);
        out["r_i"] = integer_list_json(inv.r_i);
        out["n_gamma"] = to_string(*inv.n_gamma);
        out["index"] = to_string(*inv.index);
        out["quotient"] = integer_list_json(inv.quotient);
        out["homogeneity_degree"] = to_string(*inv.homogeneity_degree);
    } else {
        out["order_r"] = nullptr;
        out["invariant_factors"] = nullptr;
        out["r_i"] = nullptr;
        out["n_gamma"] = kInfinite;
        out["index"] = kInfinite;
        out["quotient"] = nullptr;
        out["homogeneity_degree"] = kInfinite;
    }
    out["rc_upper_bound"] = rational_json(inv.rc_upper_bound);
    out["threshold"] = rational_json(report.decision.threshold);
    out["margin"] = rational_json(report.decision.margin);
    out["status"] = to_string(report.decision.status);
    out["k"] = to_string(report.decision.window_bound_k);
    out["k_coarse"] = to_string(report.decision.window_bound_coarse);
    if (inv.omega_subgroup_generator) {
        out["omega_subgroup_basis"] = matrix_json(*inv.omega_subgroup_generator);
    } else {
        out["omega_subgroup_basis"] = nullptr;
    }
    out["tool_version"] = report.tool_version;
    if (report.oracle) {
        out["verified"] = report.oracle->verified;
        out["subgroup_scan"] = report.oracle->subgroup_scan_skipped ? "skipped" : "ok";
    }
    return out;
}

std::string report_to_text(const AnalysisReport& report) {
    const LatticeInvariants& inv = report.invariants;
    std::ostringstream out;
    auto line = [&out](const char* key, const std::string& value) {
        out << key << value << "\n";
    };
    line("d:                  ", std::to_string(inv.d));
    line("matrix:             ", render_matrix_inline(report.lattice.generator()));
    line("rational:           ", inv.rational ? "true" : "false");
    line("covol:              ", to_string(inv.covol));
    line("order_r:            ", inv.rational ? to_string(*inv.r) : "n/a");
    line("invariant_factors:  ", inv.rational ? join_integers(inv.h) : "n/a");
    line("r_i:                ", inv.rational ? join_integers(inv.r_i) : "n/a");
    line("n_gamma:            ", inv.rational ? to_string(*inv.n_gamma) : kInfinite);
    line("index:              ", inv.rational ? to_string(*inv.index) : kInfinite);
    line("quotient:           ", inv.rational ? join_integers(inv.quotient) : "n/a");
    line("homogeneity_degree: ", inv.rational ? to_string(*inv.homogeneity_degree) : kInfinite);
    line("rc_upper_bound:     ", to_string(inv.rc_upper_bound));
    line("threshold:          ", to_string(report.decision.threshold));
    line("margin:             ", to_string(report.decision.margin));
    line("status:             ", to_string(report.decision.status));
    line("k:                  ", to_string(report.decision.window_bound_k));
    line("k_coarse:           ", to_string(report.decision.window_bound_coarse));
    line("omega_subgroup_basis: ",
         inv.omega_subgroup_generator ? render_matrix_inline(*inv.omega_subgroup_generator)
                                      : std::string("n/a"));
    line("tool_version:       ", report.tool_version);
    if (report.oracle) {
        line("verified:           ", report.oracle->verified ? "true" : "false");
        line("subgroup_scan:      ", report.oracle->subgroup_scan_skipped ? "skipped" : "ok");
    }
    return out.str();
}

std::vector<BatchEntry> run_batch(const nlohmann::json& documents, bool run_oracle) {
    if (!documents.is_array()) {
        throw ParseError("batch document must be an array of lattice documents");
    }
    std::vector<BatchEntry> entries;
    entries.reserve(documents.size());
    for (const auto& doc : documents) {
        BatchEntry entry;
        try {
            entry.report = analyze(parse_lattice_json(doc), run_oracle);
        } catch (const InvalidInput& e) {
            entry.error = e.what();
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

} // namespace latframe
