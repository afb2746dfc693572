#include "qsums/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qsums {

using ordered_json = nlohmann::ordered_json;

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::Skipped: return "skipped";
    }
    return "unknown";
}

JWindow JWindow::fixed(long lo, long hi) {
    JWindow w;
    w.lo = lo;
    w.hi = hi;
    return w;
}

JWindow JWindow::band_margin(long below, long above) {
    JWindow w;
    w.below = below;
    w.above = above;
    return w;
}

std::pair<long, long> JWindow::resolve(bool conjecture, long upper) const {
    if (lo && hi) {
        if (conjecture) return {*lo, *hi};
        return {std::max(0L, *lo), std::min(upper, *hi)};
    }
    if (conjecture) return {-below, upper + above};
    return {0, upper};
}

std::string JWindow::to_string() const {
    std::ostringstream os;
    if (lo && hi)
        os << *lo << ":" << *hi;
    else
        os << "band-" << below << ":band+" << above;
    return os.str();
}

void Report::sort_and_count() {
    std::stable_sort(results.begin(), results.end(),
                     [](const ClaimResult& a, const ClaimResult& b) {
                         if (a.claim != b.claim) return a.claim < b.claim;
                         return a.params.lex_less(b.params);
                     });
    holds = fails = skipped = 0;
    for (const auto& r : results) {
        switch (r.status) {
            case Status::Holds: ++holds; break;
            case Status::Fails: ++fails; break;
            case Status::Skipped: ++skipped; break;
        }
    }
}

namespace {

void run_parallel(unsigned workers, std::size_t count,
                  const std::function<void(std::size_t)>& work) {
    if (count == 0) return;
    unsigned n = std::max(1u, workers);
    n = static_cast<unsigned>(
        std::min<std::size_t>(n, count));
    if (n == 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto loop = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) work(i);
    };
    std::vector<std::thread> pool;
    pool.reserve(n - 1);
    for (unsigned i = 0; i + 1 < n; ++i) pool.emplace_back(loop);
    loop();
    for (auto& t : pool) t.join();
}

QuotientSummary summarize(const LaurentPoly& q) {
    QuotientSummary s;
    if (!q.is_zero()) {
        s.low_exp = q.low_exp();
        s.degree = q.degree();
    }
    s.coefficient_count = q.term_count();
    s.eval_at_one = q.eval_at_one();
    return s;
}

struct Task {
    ClaimId id;
    ParamTuple params;
};

ClaimResult evaluate_point(const Task& task) {
    const ClaimInfo& info = claim_info(task.id);
    ClaimResult res;
    res.claim = info.name;
    res.params = task.params;
    auto t0 = std::chrono::steady_clock::now();
    if (auto reason = validate_params(task.id, task.params)) {
        res.status = Status::Skipped;
        res.skip_reason = *reason;
    } else {
        ClaimVerdict v = evaluate_claim(task.id, task.params);
        res.integrality = v.integral;
        if (info.conjecture) res.nonneg = v.nonneg;
        if (v.integral) {
            res.quotient_summary = summarize(*v.quotient);
            if (info.requires_polynomial && !*v.polynomial) {
                res.status = Status::Fails;
                res.witness = Witness{"not_polynomial", *v.quotient};
            } else {
                res.status = Status::Holds;
            }
        } else {
            res.status = Status::Fails;
            res.witness =
                Witness{v.failure->kind == DivisionFailure::Kind::NonIntegerStep
                            ? "non_integer_step"
                            : "nonzero_remainder",
                        v.failure->remainder};
        }
    }
    res.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return res;
}

// Odometer over [1, n_max]^m, first coordinate slowest.
template <typename Fn>
void for_each_cycle(long m, long n_max, std::vector<long>& ns, Fn&& fn) {
    if (static_cast<long>(ns.size()) == m) {
        fn();
        return;
    }
    for (long v = 1; v <= n_max; ++v) {
        ns.push_back(v);
        for_each_cycle(m, n_max, ns, fn);
        ns.pop_back();
    }
}

// Grid points for one claim, in the deterministic lexicographic order
// (|ns|, ns, r, s, t, a, j).
std::vector<ParamTuple> build_points(ClaimId id, const SweepRanges& g) {
    const bool conj = claim_info(id).conjecture;
    std::vector<ParamTuple> points;
    auto push_j = [&](ParamTuple p) {
        auto [jl, jh] = g.j_window.resolve(conj, band_upper(id, p));
        for (long j = jl; j <= jh; ++j) {
            p.j = j;
            points.push_back(p);
        }
    };
    switch (id) {
        case ClaimId::THM_1_1:
            for (long n = 1; n <= g.n_max; ++n)
                for (long r = 1; r <= g.r_max; ++r)
                    push_j({.ns = {n}, .r = r});
            break;
        case ClaimId::THM_1_2:
        case ClaimId::THM_5_4:
        case ClaimId::CONJ_6_3:
        case ClaimId::CONJ_6_4: {
            std::vector<long> ns;
            for (long m = 1; m <= g.m_max; ++m)
                for_each_cycle(m, g.n_max, ns, [&] {
                    for (long r = 0; r <= g.r_max; ++r)
                        push_j({.ns = ns, .r = r});
                });
            break;
        }
        case ClaimId::THM_1_3:
            for (long n = 1; n <= g.n_max; ++n)
                for (long r = 0; r <= g.r_max; ++r)
                    for (long s = 1; s <= g.s_max; ++s)
                        push_j({.ns = {n}, .r = r, .s = s});
            break;
        case ClaimId::COR_5_1:
            for (long m = 1; m <= g.n_max; ++m)
                for (long n = 1; n <= g.n_max; ++n)
                    for (long r = 1; r <= g.r_max; ++r)
                        for (long a = 0; a <= g.a_max; ++a)
                            push_j({.ns = {m, n}, .r = r, .a = a});
            break;
        case ClaimId::COR_5_2:
            for (long l = 1; l <= g.n_max; ++l)
                for (long m = 1; m <= g.n_max; ++m)
                    for (long n = 1; n <= g.n_max; ++n)
                        for (long r = 1; r <= g.r_max; ++r)
                            for (long a = 0; a <= g.a_max; ++a)
                                push_j({.ns = {l, m, n}, .r = r, .a = a});
            break;
        case ClaimId::COR_5_3:
            for (long n = 1; n <= g.n_max; ++n)
                for (long r = 1; r <= g.r_max; ++r)
                    for (long s = 1; s <= g.s_max; ++s)
                        for (long a = 0; a <= g.a_max; ++a)
                            push_j({.ns = {n}, .r = r, .s = s, .a = a});
            break;
        case ClaimId::COR_5_5:
            for (long m = 1; m <= g.n_max; ++m)
                for (long n = 1; n <= g.n_max; ++n)
                    for (long r = 1; r <= g.r_max; ++r)
                        for (long s = 1; s <= g.s_max; ++s)
                            for (long a = 0; a <= g.a_max; ++a)
                                push_j({.ns = {m, n}, .r = r, .s = s, .a = a});
            break;
        case ClaimId::COR_5_5_NARAYANA:
        case ClaimId::CONJ_6_2:
            for (long n = 1; n <= g.n_max; ++n)
                for (long r = 1; r <= g.r_max; ++r)
                    for (long a = 0; a <= g.a_max; ++a)
                        push_j({.ns = {n}, .r = r, .a = a});
            break;
        case ClaimId::CONJ_6_1:
            for (long m = 1; m <= g.n_max; ++m)
                for (long n = 1; n <= g.n_max; ++n)
                    for (long r = 0; r <= g.r_max; ++r)
                        for (long s = 1; s <= g.s_max; ++s)
                            for (long t = 1; t <= g.t_max; ++t)
                                push_j({.ns = {m, n}, .r = r, .s = s, .t = t});
            break;
        case ClaimId::CONG_5_2:
            for (long n = 1; n <= g.n_max; ++n)
                for (long r = 1; r <= g.r_max; ++r)
                    push_j({.ns = {n}, .r = r});
            break;
    }
    return points;
}

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += ",";
        out += n;
    }
    return out;
}

}  // namespace

std::size_t sweep_grid_size(const std::vector<ClaimId>& claims,
                            const SweepRanges& ranges) {
    std::size_t total = 0;
    for (ClaimId id : claims) total += build_points(id, ranges).size();
    return total;
}

Report run_sweep(const std::vector<ClaimId>& claims, const SweepRanges& ranges,
                 unsigned workers) {
    std::vector<ClaimId> ids = claims;
    std::sort(ids.begin(), ids.end(), [](ClaimId a, ClaimId b) {
        return std::string_view(claim_info(a).name) < claim_info(b).name;
    });
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<Task> tasks;
    for (ClaimId id : ids)
        for (auto& p : build_points(id, ranges))
            tasks.push_back({id, std::move(p)});
    const std::size_t total = tasks.size();
    if (ranges.limit && tasks.size() > *ranges.limit)
        tasks.resize(*ranges.limit);

    Report report;
    std::vector<std::string> names;
    for (ClaimId id : ids) names.push_back(claim_info(id).name);
    report.grid["claims"] = join_names(names);
    report.grid["n_max"] = std::to_string(ranges.n_max);
    report.grid["m_max"] = std::to_string(ranges.m_max);
    report.grid["r_max"] = std::to_string(ranges.r_max);
    report.grid["s_max"] = std::to_string(ranges.s_max);
    report.grid["t_max"] = std::to_string(ranges.t_max);
    report.grid["a_max"] = std::to_string(ranges.a_max);
    report.grid["j_window"] = ranges.j_window.to_string();
    report.grid["grid_points_total"] = std::to_string(total);
    report.grid["grid_points_evaluated"] = std::to_string(tasks.size());

    report.results.resize(tasks.size());
    run_parallel(workers, tasks.size(), [&](std::size_t i) {
        report.results[i] = evaluate_point(tasks[i]);
    });
    report.sort_and_count();
    return report;
}

namespace {

struct OracleTask {
    OracleKind kind;
    ParamTuple params;
};

ClaimResult evaluate_oracle(const OracleTask& task) {
    const ParamTuple& p = task.params;
    ClaimResult res;
    res.claim = oracle_info(task.kind).name;
    res.params = p;
    auto t0 = std::chrono::steady_clock::now();
    OracleOutcome out;
    switch (task.kind) {
        case OracleKind::PfaffSaalschutz:
            out = check_pfaff_saalschutz(p.ns[0], p.ns[1], p.ns[2], *p.k);
            break;
        case OracleKind::LimitIdentity:
            out = check_limit_identity(p.ns[0], p.ns[1], *p.k);
            break;
        case OracleKind::SRecurrence:
            out = check_S_recurrence(p.ns[0], p.r);
            break;
        case OracleKind::MultiRecurrence:
            out = check_S_recursions_multi(p.ns, p.r, p.j);
            break;
        case OracleKind::ReciprocalSymmetry:
            out = check_reciprocal_symmetry(p.ns, p.r);
            break;
        case OracleKind::ClosedForms:
            out = check_closed_forms(p.ns[0]);
            break;
    }
    res.integrality = out.ok;
    res.status = out.ok ? Status::Holds : Status::Fails;
    if (!out.ok) res.witness = Witness{"nonzero_residual", out.residual};
    res.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return res;
}

std::vector<OracleTask> build_oracle_points(OracleKind kind,
                                            const OracleRanges& g) {
    std::vector<OracleTask> points;
    switch (kind) {
        case OracleKind::PfaffSaalschutz:
            for (long n1 = 1; n1 <= g.pfaff_n_max; ++n1)
                for (long n2 = 1; n2 <= g.pfaff_n_max; ++n2)
                    for (long n3 = 1; n3 <= g.pfaff_n_max; ++n3)
                        for (long k = 0; k <= std::min({n1, n2, n3}); ++k)
                            points.push_back(
                                {kind, {.ns = {n1, n2, n3}, .k = k}});
            break;
        case OracleKind::LimitIdentity:
            for (long n1 = 1; n1 <= g.limit_n_max; ++n1)
                for (long n2 = 1; n2 <= g.limit_n_max; ++n2)
                    for (long k = 0; k <= std::min(n1, n2); ++k)
                        points.push_back({kind, {.ns = {n1, n2}, .k = k}});
            break;
        case OracleKind::SRecurrence:
            for (long n = 1; n <= g.srec_n_max; ++n)
                for (long r = 1; r <= g.srec_r_max; ++r)
                    points.push_back({kind, {.ns = {n}, .r = r}});
            break;
        case OracleKind::MultiRecurrence: {
            std::vector<long> ns;
            for (long m = 2; m <= g.multi_m_max; ++m)
                for_each_cycle(m, g.multi_n_max, ns, [&] {
                    for (long r = 0; r <= g.multi_r_max; ++r)
                        for (long j = 1; j <= m; ++j)
                            points.push_back({kind, {.ns = ns, .r = r, .j = j}});
                });
            break;
        }
        case OracleKind::ReciprocalSymmetry: {
            std::vector<long> ns;
            for (long m = 2; m <= g.multi_m_max; ++m)
                for_each_cycle(m, g.multi_n_max, ns, [&] {
                    for (long r = 0; r <= g.multi_r_max; ++r)
                        points.push_back({kind, {.ns = ns, .r = r}});
                });
            break;
        }
        case OracleKind::ClosedForms:
            for (long n = 1; n <= g.closed_n_max; ++n)
                points.push_back({kind, {.ns = {n}}});
            break;
    }
    return points;
}

}  // namespace

Report run_oracles(const std::vector<OracleKind>& which,
                   const OracleRanges& ranges, unsigned workers) {
    std::vector<OracleKind> kinds = which;
    std::sort(kinds.begin(), kinds.end(), [](OracleKind a, OracleKind b) {
        return std::string_view(oracle_info(a).name) < oracle_info(b).name;
    });
    kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());

    std::vector<OracleTask> tasks;
    for (OracleKind kind : kinds)
        for (auto& t : build_oracle_points(kind, ranges))
            tasks.push_back(std::move(t));

    Report report;
    std::vector<std::string> names;
    for (OracleKind kind : kinds) names.push_back(oracle_info(kind).name);
    report.grid["oracles"] = join_names(names);
    report.grid["pfaff_n_max"] = std::to_string(ranges.pfaff_n_max);
    report.grid["limit_n_max"] = std::to_string(ranges.limit_n_max);
    report.grid["srec_n_max"] = std::to_string(ranges.srec_n_max);
    report.grid["srec_r_max"] = std::to_string(ranges.srec_r_max);
    report.grid["multi_m_max"] = std::to_string(ranges.multi_m_max);
    report.grid["multi_n_max"] = std::to_string(ranges.multi_n_max);
    report.grid["multi_r_max"] = std::to_string(ranges.multi_r_max);
    report.grid["closed_n_max"] = std::to_string(ranges.closed_n_max);
    report.grid["grid_points_total"] = std::to_string(tasks.size());
    report.grid["grid_points_evaluated"] = std::to_string(tasks.size());

    report.results.resize(tasks.size());
    run_parallel(workers, tasks.size(), [&](std::size_t i) {
        report.results[i] = evaluate_oracle(tasks[i]);
    });
    report.sort_and_count();
    return report;
}

// --- serialization ----------------------------------------------------------

namespace {

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "0x" << std::hex << h;
    return os.str();
}

ordered_json poly_to_json(const LaurentPoly& p) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return ordered_json{{"min_exp", p.min_exp()}, {"coeffs", std::move(coeffs)}};
}

// Witness truncation: long remainders keep only ten coefficients from each
// end plus a hash of the full canonical form.
ordered_json witness_to_json(const Witness& w) {
    ordered_json j;
    j["kind"] = w.kind;
    const auto& coeffs = w.poly.coeffs();
    if (w.poly.term_count() <= 50) {
        j["remainder"] = poly_to_json(w.poly);
        return j;
    }
    ordered_json lo = ordered_json::array(), hi = ordered_json::array();
    for (std::size_t i = 0; i < 10; ++i) lo.push_back(coeffs[i].str());
    for (std::size_t i = coeffs.size() - 10; i < coeffs.size(); ++i)
        hi.push_back(coeffs[i].str());
    std::string canonical = std::to_string(w.poly.min_exp()) + ":";
    for (const auto& c : coeffs) canonical += c.str() + ",";
    j["remainder_summary"] = ordered_json{
        {"min_exp", w.poly.min_exp()},
        {"degree", w.poly.degree()},
        {"term_count", w.poly.term_count()},
        {"low_coeffs", std::move(lo)},
        {"high_coeffs", std::move(hi)},
        {"fnv1a64", fnv1a64_hex(canonical)},
    };
    return j;
}

ordered_json params_to_json(const ParamTuple& p) {
    ordered_json j;
    j["ns"] = p.ns;
    j["r"] = p.r;
    if (p.s) j["s"] = *p.s;
    if (p.t) j["t"] = *p.t;
    if (p.a) j["a"] = *p.a;
    if (p.k) j["k"] = *p.k;
    j["j"] = p.j;
    return j;
}

std::string timestamp_utc() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void emit_json(const Report& report, std::ostream& os, bool deterministic) {
    ordered_json j;
    j["tool_version"] = report.tool_version;
    if (!deterministic) j["generated_at"] = timestamp_utc();
    ordered_json grid;
    for (const auto& [k, v] : report.grid) grid[k] = v;
    j["grid"] = std::move(grid);
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.results) {
        ordered_json row;
        row["claim"] = r.claim;
        row["params"] = params_to_json(r.params);
        row["status"] = std::string(status_name(r.status));
        if (r.status == Status::Skipped) row["skip_reason"] = r.skip_reason;
        row["integrality"] = r.integrality;
        if (r.nonneg) row["nonneg"] = *r.nonneg;
        if (r.quotient_summary) {
            const auto& s = *r.quotient_summary;
            row["quotient_summary"] = ordered_json{
                {"low_exp", s.low_exp},
                {"degree", s.degree},
                {"coefficient_count", s.coefficient_count},
                {"eval_at_one", s.eval_at_one.str()},
            };
        }
        if (r.witness) row["witness"] = witness_to_json(*r.witness);
        if (!deterministic) row["elapsed_ms"] = r.elapsed_ms;
        rows.push_back(std::move(row));
    }
    j["results"] = std::move(rows);
    j["summary"] = ordered_json{{"holds", report.holds},
                                {"fails", report.fails},
                                {"skipped", report.skipped},
                                {"total", report.results.size()}};
    os << j.dump(2) << "\n";
}

void emit_csv(const Report& report, std::ostream& os) {
    os << "claim,params,status,integrality,nonneg,low_exp,degree,eval_at_one\n";
    for (const auto& r : report.results) {
        os << r.claim << "," << r.params.to_string() << ","
           << status_name(r.status) << "," << (r.integrality ? "true" : "false")
           << ",";
        if (r.nonneg) os << (*r.nonneg ? "true" : "false");
        os << ",";
        if (r.quotient_summary) {
            const auto& s = *r.quotient_summary;
            os << s.low_exp << "," << s.degree << "," << s.eval_at_one.str();
        } else {
            os << ",,";
        }
        os << "\n";
    }
}

}  // namespace

void emit_report(const Report& report, std::ostream& os, Format format,
                 bool deterministic) {
    if (format == Format::Json)
        emit_json(report, os, deterministic);
    else
        emit_csv(report, os);
}

std::string report_to_string(const Report& report, Format format,
                             bool deterministic) {
    std::ostringstream os;
    emit_report(report, os, format, deterministic);
    return os.str();
}

}  // namespace qsums
