#pragma once

#include "qsums/laurent.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qsums {

// Independent identity checks used as cross-checks on the kernel. These are
// proved identities: a nonzero residual anywhere indicates an arithmetic bug,
// never an open question. Each check evaluates both sides fully and compares
// canonical forms.

/// Pass/fail with the exact residual (left side minus right side; for
/// multi-part checks, the first nonzero difference encountered).
struct OracleOutcome {
    bool ok = true;
    LaurentPoly residual;

    static OracleOutcome pass() { return {}; }
    static OracleOutcome residual_of(const LaurentPoly& lhs, const LaurentPoly& rhs);
};

/// q-Pfaff-Saalschutz: C(n1+n2,n1+k) C(n2+n3,n2+k) C(n3+n1,n3+k) equals
/// sum_{s=0}^{n1-k} q^(s^2+2ks) (q;q)_{n1+n2+n3-k-s} / ((q;q)_s (q;q)_{s+2k}
/// (q;q)_{n1-k-s} (q;q)_{n2-k-s} (q;q)_{n3-k-s}), terms with a negative
/// Pochhammer index skipped. Requires n_i >= 1, 0 <= k <= min.
OracleOutcome check_pfaff_saalschutz(long n1, long n2, long n3, long k);

/// The n3 -> infinity limit: C(n1+n2,n1+k) C(n1+n2,n2+k) equals
/// sum_s q^(s^2+2ks) (q;q)_{n1+n2} / ((q;q)_s (q;q)_{s+2k} (q;q)_{n1-k-s}
/// (q;q)_{n2-k-s}). Requires n_i >= 1, 0 <= k <= min.
OracleOutcome check_limit_identity(long n1, long n2, long k);

/// The S_r recurrence S_r(n) = [n]^2 S_{r-1}(n) - q^r [2n][2n-1] S_{r-1}(n-1)
/// together with its per-k kernel identity
/// [k]^2 C(2n,n+k) q^(n-k) = [n]^2 C(2n,n+k) - [2n][2n-1] C(2n-2,n+k-1).
/// Requires n >= 1, r >= 1.
OracleOutcome check_S_recurrence(long n, long r);

/// The cyclic-sum recurrences lowering j by one, checked by evaluating both
/// sides with the claim evaluators: for m >= 3,
///   S(n_1..n_m; r, j) = sum_{l=1..n1} q^(l^2) C(n1-1,l-1) C(n2+n3,n2-l)
///                       S(l, n3..n_m; r, j-1),
/// and for m = 2,
///   S(n_1,n_2; r, j) = sum_{l=1..n1} q^(l^2) C(n1-1,l-1) C(n2,l) S(l; r, j-1).
/// Requires m >= 2 and 1 <= j <= m.
OracleOutcome check_S_recursions_multi(std::span<const long> ns, long r, long j);

/// Reciprocal symmetry of the raw cyclic sums (pre-division): with
/// sigma_j(q) = sum_{k=1..n1} [2k][k]^(2r) q^(j k^2-(r+1)k) C(n_1..n_m; k),
/// sigma_0(q) = q^(n1n2+...+n_{m-1}n_m+n_m n1 - 2r - 1) sigma_m(q^-1).
/// Requires m >= 2.
OracleOutcome check_reciprocal_symmetry(std::span<const long> ns, long r);

/// Closed forms S_0(n) = [n] C(2n,n) and S_1(n) = [n]^2 C(2n,n), plus the
/// per-k telescoping identity
/// [2k] q^(n-k) C(2n,n-k) = [n-k+1] C(2n,n-k+1) - [n-k] C(2n,n-k).
OracleOutcome check_closed_forms(long n);

/// Identifier for the harness's oracle sweeps.
enum class OracleKind {
    PfaffSaalschutz,
    LimitIdentity,
    SRecurrence,
    MultiRecurrence,
    ReciprocalSymmetry,
    ClosedForms,
};

struct OracleInfo {
    OracleKind kind;
    const char* name;         ///< wire name, e.g. "pfaff_saalschutz"
    const char* description;  ///< one-line statement of the identity
};

const std::vector<OracleInfo>& all_oracles();
const OracleInfo& oracle_info(OracleKind kind);
std::optional<OracleKind> oracle_from_name(std::string_view name);

}  // namespace qsums
