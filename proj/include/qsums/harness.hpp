#pragma once

#include "qsums/expressions.hpp"
#include "qsums/oracles.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsums {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Status { Holds, Fails, Skipped };
std::string_view status_name(Status s);

enum class Format { Json, Csv };

struct QuotientSummary {
    long low_exp = 0;
    long degree = 0;
    std::size_t coefficient_count = 0;  ///< nonzero terms of the quotient
    BigInt eval_at_one;
};

/// Failure witness carried by a result row.
struct Witness {
    std::string kind;  ///< "nonzero_remainder" | "non_integer_step" | "not_polynomial"
    LaurentPoly poly;  ///< remainder (or the offending quotient)
};

struct ClaimResult {
    std::string claim;  ///< ClaimId wire name, or oracle name for oracle rows
    ParamTuple params;
    Status status = Status::Holds;
    std::string skip_reason;  ///< engaged iff status == Skipped
    bool integrality = false;
    std::optional<bool> nonneg;  ///< recorded for conjecture-mode claims
    std::optional<QuotientSummary> quotient_summary;
    std::optional<Witness> witness;  ///< engaged iff status == Fails
    double elapsed_ms = 0.0;
};

struct Report {
    std::string tool_version = kToolVersion;
    /// Echo of the requested grid, stable key order.
    std::map<std::string, std::string> grid;
    /// Sorted lexicographically by (claim, params); independent of worker
    /// scheduling.
    std::vector<ClaimResult> results;
    std::size_t holds = 0, fails = 0, skipped = 0;

    void sort_and_count();
};

/// j-range policy. Theorem-mode claims always stay inside their band
/// [0, band_upper] (intersected with a fixed window when one is given);
/// conjecture-mode claims use the fixed window as-is, or the band widened by
/// the margins when no fixed window is given.
struct JWindow {
    std::optional<long> lo, hi;  ///< fixed interval when engaged
    long below = 2, above = 2;   ///< band-relative margins otherwise

    static JWindow fixed(long lo, long hi);
    static JWindow band_margin(long below, long above);
    /// Concrete inclusive j-interval for one claim instance; an empty
    /// interval is returned as (1, 0).
    std::pair<long, long> resolve(bool conjecture, long band_upper) const;
    std::string to_string() const;
};

/// Inclusive parameter bounds shared by every claim in a sweep. Size
/// parameters run from 1 to n_max, cycle lengths from 1 to m_max, exponents
/// r/s/t/a from their per-claim minimum to the given maximum.
struct SweepRanges {
    long n_max = 4;
    long m_max = 3;
    long r_max = 2;
    long s_max = 2;
    long t_max = 2;
    long a_max = 2;
    JWindow j_window;
    std::optional<std::size_t> limit;  ///< deterministic lexicographic truncation
};

/// Per-oracle grid bounds; defaults are the desk-scale verification grids.
struct OracleRanges {
    long pfaff_n_max = 8;
    long limit_n_max = 10;
    long srec_n_max = 10;
    long srec_r_max = 4;
    long multi_m_max = 3;
    long multi_n_max = 5;
    long multi_r_max = 2;
    long closed_n_max = 12;
};

/// Number of grid points the sweep would evaluate (before any limit).
std::size_t sweep_grid_size(const std::vector<ClaimId>& claims,
                            const SweepRanges& ranges);

/// Evaluates every grid point exactly once and returns the deterministic
/// report. Parity-invalid tuples are recorded as skipped. `workers` >= 1.
Report run_sweep(const std::vector<ClaimId>& claims, const SweepRanges& ranges,
                 unsigned workers);

/// Runs identity oracles over their grids. All rows must hold; a failing row
/// indicates a kernel bug.
Report run_oracles(const std::vector<OracleKind>& which,
                   const OracleRanges& ranges, unsigned workers);

/// Serialization. Deterministic mode omits wall-clock fields (header
/// timestamp and per-row timings) so identical inputs give identical bytes.
void emit_report(const Report& report, std::ostream& os, Format format,
                 bool deterministic);
std::string report_to_string(const Report& report, Format format,
                             bool deterministic);

}  // namespace qsums
