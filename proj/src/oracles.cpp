#include "qsums/oracles.hpp"

#include "qsums/expressions.hpp"
#include "qsums/qcore.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qsums {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

LaurentPoly one() { return LaurentPoly::constant(1); }

// [x] extended by the convention [0] = 0 (only the telescoping check needs it).
LaurentPoly q_int_or_zero(long x) {
    return x >= 1 ? q_int(x) : LaurentPoly();
}

// Raw cyclic numerator sum, pre-division:
// sum_{k=1..n1} [2k][k]^(2r) q^(j k^2 - (r+1)k) C(n_1..n_m; k).
LaurentPoly raw_cyclic_sum(std::span<const long> ns, long r, long j) {
    LaurentPoly sum;
    for (long k = 1; k <= ns.front(); ++k) {
        LaurentPoly prod = product_C(ns, k);
        if (prod.is_zero()) continue;
        sum += (q_int(2 * k) * q_int(k).pow(2 * r) * prod)
                   .shifted(j * k * k - (r + 1) * k);
    }
    return sum;
}

}  // namespace

OracleOutcome OracleOutcome::residual_of(const LaurentPoly& lhs,
                                         const LaurentPoly& rhs) {
    LaurentPoly diff = lhs - rhs;
    return {diff.is_zero(), std::move(diff)};
}

OracleOutcome check_pfaff_saalschutz(long n1, long n2, long n3, long k) {
    require(n1 >= 1 && n2 >= 1 && n3 >= 1, "pfaff: n_i must be >= 1");
    require(k >= 0 && k <= std::min({n1, n2, n3}), "pfaff: need 0 <= k <= min");
    LaurentPoly lhs = q_binomial(n1 + n2, n1 + k) * q_binomial(n2 + n3, n2 + k) *
                      q_binomial(n3 + n1, n3 + k);
    LaurentPoly rhs;
    for (long s = 0; s <= n1 - k; ++s) {
        // 1/(q;q)_x = 0 for x < 0: skip the term.
        if (n2 - k - s < 0 || n3 - k - s < 0) continue;
        LaurentPoly den = q_pochhammer(s) * q_pochhammer(s + 2 * k) *
                          q_pochhammer(n1 - k - s) * q_pochhammer(n2 - k - s) *
                          q_pochhammer(n3 - k - s);
        LaurentPoly term = exact_div_checked(
            q_pochhammer(n1 + n2 + n3 - k - s), den, "pfaff term");
        rhs += term.shifted(s * s + 2 * k * s);
    }
    return OracleOutcome::residual_of(lhs, rhs);
}

OracleOutcome check_limit_identity(long n1, long n2, long k) {
    require(n1 >= 1 && n2 >= 1, "limit identity: n_i must be >= 1");
    require(k >= 0 && k <= std::min(n1, n2), "limit identity: need 0 <= k <= min");
    LaurentPoly lhs = q_binomial(n1 + n2, n1 + k) * q_binomial(n1 + n2, n2 + k);
    LaurentPoly rhs;
    for (long s = 0; s <= n1 - k; ++s) {
        if (n2 - k - s < 0) continue;
        LaurentPoly den = q_pochhammer(s) * q_pochhammer(s + 2 * k) *
                          q_pochhammer(n1 - k - s) * q_pochhammer(n2 - k - s);
        LaurentPoly term =
            exact_div_checked(q_pochhammer(n1 + n2), den, "limit identity term");
        rhs += term.shifted(s * s + 2 * k * s);
    }
    return OracleOutcome::residual_of(lhs, rhs);
}

OracleOutcome check_S_recurrence(long n, long r) {
    require(n >= 1, "S recurrence: n must be >= 1");
    require(r >= 1, "S recurrence: r must be >= 1");
    // Per-k kernel identity.
    for (long k = 1; k <= n; ++k) {
        LaurentPoly lhs =
            (q_int(k).pow(2) * q_binomial(2 * n, n + k)).shifted(n - k);
        LaurentPoly rhs = q_int(n).pow(2) * q_binomial(2 * n, n + k) -
                          q_int(2 * n) * q_int(2 * n - 1) *
                              q_binomial(2 * n - 2, n + k - 1);
        if (!(lhs == rhs)) return OracleOutcome::residual_of(lhs, rhs);
    }
    // Summed recurrence; S_{r-1}(0) is the empty sum.
    LaurentPoly prev_shrunk =
        (n >= 2) ? sum_S_r(n - 1, r - 1) : LaurentPoly();
    LaurentPoly rhs = q_int(n).pow(2) * sum_S_r(n, r - 1) -
                      (q_int(2 * n) * q_int(2 * n - 1) * prev_shrunk).shifted(r);
    return OracleOutcome::residual_of(sum_S_r(n, r), rhs);
}

OracleOutcome check_S_recursions_multi(std::span<const long> ns, long r, long j) {
    require(ns.size() >= 2, "multi recurrence: need m >= 2");
    require(j >= 1 && j <= static_cast<long>(ns.size()),
            "multi recurrence: need 1 <= j <= m");
    require(r >= 0, "multi recurrence: r must be >= 0");
    const long n1 = ns[0], n2 = ns[1];

    ExactDivision lhs = thm_1_2(ns, r, j);
    if (!lhs.ok()) return {false, lhs.failure().remainder};

    LaurentPoly rhs;
    for (long l = 1; l <= n1; ++l) {
        LaurentPoly weight;
        std::vector<long> sub;
        if (ns.size() >= 3) {
            weight = q_binomial(n1 - 1, l - 1) * q_binomial(n2 + ns[2], n2 - l);
            sub.push_back(l);
            sub.insert(sub.end(), ns.begin() + 2, ns.end());
        } else {
            weight = q_binomial(n1 - 1, l - 1) * q_binomial(n2, l);
            sub.push_back(l);
        }
        if (weight.is_zero()) continue;
        ExactDivision inner = thm_1_2(sub, r, j - 1);
        if (!inner.ok()) return {false, inner.failure().remainder};
        rhs += weight.shifted(l * l) * inner.quotient();
    }
    return OracleOutcome::residual_of(lhs.quotient(), rhs);
}

OracleOutcome check_reciprocal_symmetry(std::span<const long> ns, long r) {
    require(ns.size() >= 2, "reciprocal symmetry: need m >= 2");
    require(r >= 0, "reciprocal symmetry: r must be >= 0");
    const long m = static_cast<long>(ns.size());
    long cyclic = 0;
    for (long i = 0; i < m; ++i)
        cyclic += ns[static_cast<std::size_t>(i)] *
                  ns[static_cast<std::size_t>((i + 1) % m)];
    LaurentPoly lhs = raw_cyclic_sum(ns, r, 0);
    LaurentPoly rhs =
        raw_cyclic_sum(ns, r, m).subst_q_inverse().shifted(cyclic - 2 * r - 1);
    return OracleOutcome::residual_of(lhs, rhs);
}

OracleOutcome check_closed_forms(long n) {
    require(n >= 1, "closed forms: n must be >= 1");
    for (long k = 1; k <= n; ++k) {
        LaurentPoly lhs = (q_int(2 * k) * q_binomial(2 * n, n - k)).shifted(n - k);
        LaurentPoly rhs =
            q_int_or_zero(n - k + 1) * q_binomial(2 * n, n - k + 1) -
            q_int_or_zero(n - k) * q_binomial(2 * n, n - k);
        if (!(lhs == rhs)) return OracleOutcome::residual_of(lhs, rhs);
    }
    LaurentPoly central = q_binomial(2 * n, n);
    OracleOutcome s0 =
        OracleOutcome::residual_of(sum_S_r(n, 0), q_int(n) * central);
    if (!s0.ok) return s0;
    return OracleOutcome::residual_of(sum_S_r(n, 1), q_int(n).pow(2) * central);
}

const std::vector<OracleInfo>& all_oracles() {
    static const std::vector<OracleInfo> table = {
        {OracleKind::PfaffSaalschutz, "pfaff_saalschutz",
         "q-Pfaff-Saalschutz summation: triple bracket product equals the "
         "shifted multinomial sum"},
        {OracleKind::LimitIdentity, "limit_identity",
         "two-bracket product identity (the large-n3 limit of "
         "pfaff_saalschutz)"},
        {OracleKind::SRecurrence, "s_recurrence",
         "S_r(n) = [n]^2 S_{r-1}(n) - q^r [2n][2n-1] S_{r-1}(n-1) and its "
         "per-k kernel"},
        {OracleKind::MultiRecurrence, "multi_recurrence",
         "cyclic-sum recurrences lowering j by one (m >= 3 and m = 2 forms)"},
        {OracleKind::ReciprocalSymmetry, "reciprocal_symmetry",
         "raw cyclic sum at j=0 equals the q->1/q image at j=m times a "
         "monomial"},
        {OracleKind::ClosedForms, "closed_forms",
         "S_0(n) = [n] C(2n,n), S_1(n) = [n]^2 C(2n,n), and the telescoping "
         "summand identity"},
    };
    return table;
}

const OracleInfo& oracle_info(OracleKind kind) {
    for (const auto& info : all_oracles())
        if (info.kind == kind) return info;
    throw std::logic_error("oracle_info: unknown kind");
}

std::optional<OracleKind> oracle_from_name(std::string_view name) {
    for (const auto& info : all_oracles())
        if (name == info.name) return info.kind;
    return std::nullopt;
}

}  // namespace qsums
