#include "qsums/harness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

using namespace qsums;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

unsigned default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 4 : n;
}

std::optional<JWindow> parse_j_window(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    try {
        long lo = std::stol(text.substr(0, colon));
        long hi = std::stol(text.substr(colon + 1));
        return JWindow::fixed(lo, hi);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int write_report(const Report& report, const std::string& out_path,
                 Format format, bool deterministic) {
    if (out_path.empty() || out_path == "-") {
        emit_report(report, std::cout, format, deterministic);
        return kExitOk;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kExitUsage;
    }
    emit_report(report, os, format, deterministic);
    if (!os.good()) {
        std::cerr << "error: write failed for '" << out_path << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

int finish(const Report& report, const std::string& out_path,
           const std::string& format_name, bool deterministic) {
    Format format = (format_name == "csv") ? Format::Csv : Format::Json;
    int io = write_report(report, out_path, format, deterministic);
    if (io != kExitOk) return io;
    std::cerr << "summary: " << report.holds << " hold, " << report.fails
              << " fail, " << report.skipped << " skipped\n";
    return report.fails > 0 ? kExitClaimFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of q-binomial sum divisibility claims"};
    app.set_config("--config", "", "Read options from a config file (flags win)");
    app.require_subcommand(1);

    // --- verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Sweep claims over a parameter grid");
    std::vector<std::string> claim_names;
    bool verify_all = false;
    SweepRanges ranges;
    std::string j_window_text;
    unsigned workers = default_workers();
    std::string format_name = "json";
    std::string out_path;
    bool deterministic = false;
    std::size_t limit = 0;

    verify->add_option("--claims", claim_names,
                       "Comma-separated claim ids (see list-claims)")
        ->delimiter(',');
    verify->add_flag("--all", verify_all, "Verify every claim");
    verify->add_option("--n-max", ranges.n_max, "Upper bound for size parameters")
        ->check(CLI::PositiveNumber);
    verify->add_option("--m-max", ranges.m_max,
                       "Upper bound for the cycle length of ns-claims")
        ->check(CLI::PositiveNumber);
    verify->add_option("--r-max", ranges.r_max, "Upper bound for the exponent r")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--s-max", ranges.s_max, "Upper bound for the exponent s")
        ->check(CLI::PositiveNumber);
    verify->add_option("--t-max", ranges.t_max, "Upper bound for the exponent t")
        ->check(CLI::PositiveNumber);
    verify->add_option("--a-max", ranges.a_max, "Upper bound for the exponent a")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--j-window", j_window_text,
                       "Fixed j interval LO:HI (theorem claims clamp to their "
                       "band; default: band, widened by 2 for conjectures)");
    verify->add_option("--workers", workers, "Worker thread count")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out_path, "Output path (default: stdout)");
    verify->add_flag("--deterministic", deterministic,
                     "Omit wall-clock fields; identical runs give identical bytes");
    verify->add_option("--limit", limit,
                       "Evaluate only the first N grid points (lexicographic)");

    // --- oracles ----------------------------------------------------------------
    auto* oracles = app.add_subcommand(
        "oracles", "Check the proved kernel identities over their grids");
    std::vector<std::string> oracle_names;
    bool oracles_all = false;
    OracleRanges oracle_ranges;
    std::optional<long> oracle_n_max, oracle_r_max, oracle_m_max;
    oracles->add_option("--which", oracle_names,
                        "Comma-separated oracle names (see list-claims)")
        ->delimiter(',');
    oracles->add_flag("--all", oracles_all, "Run every oracle");
    oracles->add_option("--n-max", oracle_n_max,
                        "Override the size bound of every selected oracle");
    oracles->add_option("--r-max", oracle_r_max,
                        "Override the exponent bound of every selected oracle");
    oracles->add_option("--m-max", oracle_m_max,
                        "Override the cycle-length bound of the cyclic oracles");
    oracles->add_option("--workers", workers, "Worker thread count")
        ->check(CLI::PositiveNumber);
    oracles->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    oracles->add_option("--out", out_path, "Output path (default: stdout)");
    oracles->add_flag("--deterministic", deterministic,
                      "Omit wall-clock fields from the report");

    // --- list-claims ------------------------------------------------------------
    auto* list = app.add_subcommand(
        "list-claims", "Print every claim id with its reference and shape");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (list->parsed()) {
        for (const auto& info : all_claims()) {
            std::printf("%-18s %-28s %s\n", info.name, info.reference,
                        info.conjecture ? "[conjecture]" : "[theorem]");
            std::printf("                   params: %s\n", info.shape);
            std::printf("                   %s\n", info.statement);
        }
        std::printf("\noracles: ");
        bool first = true;
        for (const auto& info : all_oracles()) {
            std::printf("%s%s", first ? "" : ", ", info.name);
            first = false;
        }
        std::printf("\n");
        return kExitOk;
    }

    if (verify->parsed()) {
        std::vector<ClaimId> ids;
        if (verify_all) {
            for (const auto& info : all_claims()) ids.push_back(info.id);
        } else {
            for (const auto& name : claim_names) {
                auto id = claim_from_name(name);
                if (!id) {
                    std::cerr << "error: unknown claim '" << name
                              << "' (see list-claims)\n";
                    return kExitUsage;
                }
                ids.push_back(*id);
            }
        }
        if (ids.empty()) {
            std::cerr << "error: no claims selected (use --claims or --all)\n";
            return kExitUsage;
        }
        if (!j_window_text.empty()) {
            auto w = parse_j_window(j_window_text);
            if (!w) {
                std::cerr << "error: --j-window expects LO:HI integers\n";
                return kExitUsage;
            }
            ranges.j_window = *w;
        }
        if (limit > 0) ranges.limit = limit;
        std::size_t total = sweep_grid_size(ids, ranges);
        std::cerr << "grid: " << total << " points"
                  << (ranges.limit && *ranges.limit < total
                          ? " (evaluating " + std::to_string(*ranges.limit) + ")"
                          : "")
                  << ", workers: " << workers << "\n";
        Report report = run_sweep(ids, ranges, workers);
        return finish(report, out_path, format_name, deterministic);
    }

    // oracles subcommand
    std::vector<OracleKind> kinds;
    if (oracles_all || oracle_names.empty()) {
        for (const auto& info : all_oracles()) kinds.push_back(info.kind);
    } else {
        for (const auto& name : oracle_names) {
            auto kind = oracle_from_name(name);
            if (!kind) {
                std::cerr << "error: unknown oracle '" << name
                          << "' (see list-claims)\n";
                return kExitUsage;
            }
            kinds.push_back(*kind);
        }
    }
    if (oracle_n_max) {
        oracle_ranges.pfaff_n_max = *oracle_n_max;
        oracle_ranges.limit_n_max = *oracle_n_max;
        oracle_ranges.srec_n_max = *oracle_n_max;
        oracle_ranges.multi_n_max = *oracle_n_max;
        oracle_ranges.closed_n_max = *oracle_n_max;
    }
    if (oracle_r_max) {
        oracle_ranges.srec_r_max = *oracle_r_max;
        oracle_ranges.multi_r_max = *oracle_r_max;
    }
    if (oracle_m_max) oracle_ranges.multi_m_max = *oracle_m_max;
    Report report = run_oracles(kinds, oracle_ranges, workers);
    return finish(report, out_path, format_name, deterministic);
}
