#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latframe/errors.hpp"
#include "latframe/report.hpp"
#include "latframe/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitSelfCheck = 3;

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw latframe::ParseError("cannot open input file '" + path + "'");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw latframe::ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

void print_report(const latframe::AnalysisReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << latframe::report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << latframe::report_to_text(report);
    }
}

int run_single(const latframe::Lattice& lattice, const std::string& format, bool oracle) {
    print_report(latframe::analyze(lattice, oracle), format);
    return kExitOk;
}

int run_batch_file(const std::string& path, const std::string& format, bool oracle) {
    const auto entries = latframe::run_batch(load_json_file(path), oracle);
    bool any_failed = false;
    if (format == "json") {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& entry : entries) {
            if (entry.ok()) {
                out.push_back(latframe::report_to_json(*entry.report));
            } else {
                out.push_back({{"error", entry.error}});
                any_failed = true;
            }
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            std::cout << "-- entry " << i << " --\n";
            if (entries[i].ok()) {
                std::cout << latframe::report_to_text(*entries[i].report);
            } else {
                std::cout << "error: " << entries[i].error << "\n";
                any_failed = true;
            }
        }
    }
    return any_failed ? kExitInvalidInput : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact frame-theoretic invariants of time-frequency lattices"};
    app.set_version_flag("--version", std::string("latframe ") + LATFRAME_VERSION);

    auto* analyze_cmd = app.add_subcommand(
        "analyze", "compute lattice invariants and the Schwartz frame decision");
    std::string input_path;
    std::string inline_matrix;
    std::string batch_path;
    std::string format = "text";
    long long d_opt = 0;
    bool oracle = false;
    analyze_cmd->add_option("--input", input_path,
                            "JSON document with fields d, matrix, optional nonrational");
    analyze_cmd->add_option("--matrix", inline_matrix,
                            "inline generator: rows split by ';', entries by ','");
    analyze_cmd->add_option("--d", d_opt, "half-dimension d (checked against --matrix)");
    analyze_cmd->add_option("--batch", batch_path, "JSON array of lattice documents");
    analyze_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->add_flag("--oracle", oracle,
                          "run the normal-form cross-check and bounded subgroup scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    if (!analyze_cmd->parsed()) {
        std::cout << app.help();
        return kExitOk;
    }

    try {
        const int given = (!input_path.empty()) + (!inline_matrix.empty()) + (!batch_path.empty());
        if (given != 1) {
            throw latframe::ParseError("give exactly one of --input, --matrix, --batch");
        }
        if (!batch_path.empty()) {
            return run_batch_file(batch_path, format, oracle);
        }
        if (!inline_matrix.empty()) {
            std::optional<std::size_t> expect_d;
            if (d_opt != 0) {
                if (d_opt < 1) {
                    throw latframe::ParseError("--d must be a positive integer");
                }
                expect_d = static_cast<std::size_t>(d_opt);
            }
            return run_single(latframe::parse_lattice_inline(inline_matrix, expect_d),
                              format, oracle);
        }
        return run_single(latframe::parse_lattice_json(load_json_file(input_path)),
                          format, oracle);
    } catch (const latframe::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const latframe::SelfCheckFailure& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitSelfCheck;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitSelfCheck;
    }
}
