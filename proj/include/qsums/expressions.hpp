#pragma once

#include "qsums/laurent.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsums {

// Evaluators for the divisibility claims of the verified article. Each
// evaluator assembles the full numerator sum, then performs a single exact
// division by the closed-form denominator; divisibility holds only for the
// whole sum, never term by term. Division failures are returned as verdicts.

/// Identifier of a verifiable claim. Closed enumeration; each id maps to
/// exactly one evaluator and one parameter-shape validator.
enum class ClaimId {
    THM_1_1,
    THM_1_2,
    THM_1_3,
    COR_5_1,
    COR_5_2,
    COR_5_3,
    THM_5_4,
    COR_5_5,
    COR_5_5_NARAYANA,
    CONJ_6_1,
    CONJ_6_2,
    CONJ_6_3,
    CONJ_6_4,
    CONG_5_2,
};

/// Integer parameters of one claim instance. `ns` holds the size parameters
/// in claim order (n; m,n; l,m,n; or the cycle n_1..n_m); the optional
/// exponents s, t, a are engaged only for claims that use them. `k` is used
/// by oracle result rows only, never by claims.
struct ParamTuple {
    std::vector<long> ns;
    long r = 0;
    long j = 0;
    std::optional<long> s;
    std::optional<long> t;
    std::optional<long> a;
    std::optional<long> k;

    friend bool operator==(const ParamTuple&, const ParamTuple&) = default;

    /// Deterministic total order: (|ns|, ns, r, s, t, a, k, j).
    bool lex_less(const ParamTuple& other) const;

    /// Compact rendering "ns=[2,1];r=0;j=1" (comma-free, CSV-safe).
    std::string to_string() const;
};

// --- raw sums -------------------------------------------------------------

/// S_r(n) = sum_{k=1..n} [2k] [k]^(2r) q^((r+1)(n-k)) C(2n, n+k).
LaurentPoly sum_S_r(long n, long r);

/// T_r(n) = the same sum with an extra q^(k^2) weight.
LaurentPoly sum_T_r(long n, long r);

/// Cyclic product C(a_1..a_l; k) = prod_{i=1..l} C(a_i + a_{i+1}, a_i + k)
/// with a_{l+1} = a_1. Zero if any factor vanishes. Memoized.
LaurentPoly product_C(std::span<const long> as, long k);

// --- claim evaluators -----------------------------------------------------
// Theorem-range preconditions are enforced (usage errors throw); a returned
// DivisionFailure is a counterexample witness, not an error.

/// (j=0: S_r, j=1: T_r)(n) / ([n]^2 C(2n,n)); predicted polynomial.
ExactDivision thm_1_1(long n, long r, long j);

/// sum_{k=1..n1} [2k][k]^(2r) q^(j k^2 - (r+1)k) C(n_1..n_m; k)
/// / ([n1] C(n1+nm, n1)); predicted Laurent for 0 <= j <= m. This evaluator
/// accepts any integer j (conjecture-mode sweeps use it via CONJ_6_3).
ExactDivision thm_1_2(std::span<const long> ns, long r, long j);

/// sum_{k=1..n} (1+q^k) [k]^r B(n,k)^s q^(j k^2 - (r+s+1)k/2) / C(2n,n).
/// Requires r != s (mod 2) so the exponent is integral; 0 <= j <= s is the
/// theorem band. Accepts any j.
ExactDivision thm_1_3(long n, long r, long s, long j);

/// Restated cyclic claim: [n1-1]! prod_i [n_i+n_{i+1}]! (with n_{m+1} = 0)
/// times sum_{k} [2k][k]^(2r) q^(j k^2-(r+1)k) prod_i C(2 n_i, n_i + k),
/// divided by prod_i [2 n_i]!. Accepts any j; band 0 <= j <= m.
ExactDivision thm_5_4(std::span<const long> ns, long r, long j);

/// gcd([m],[n]) sum_{k=1..m} [2k][k]^(2a) q^(j k^2-(a+1)k)
/// C(m+n,m+k)^r C(m+n,n+k)^r / ([m][n] C(m+n,m)); band j <= 2r.
ExactDivision cor_5_1(long m, long n, long r, long a, long j);

/// As cor_5_1 with factors C(l+m,l+k)^r C(m+n,m+k)^r C(n+l,n+k)^r;
/// band j <= 3r.
ExactDivision cor_5_2(long l, long m, long n, long r, long a, long j);

/// sum_{k=1..n} [2k][k]^(2a) q^(j k^2-(a+1)k) C(2n+1,n+k+1)^r C(2n+1,n+k)^r
/// C(2n,n+k)^s / ([n][n+1] C(2n+1,n)); band j <= 2r+s.
ExactDivision cor_5_3(long n, long r, long s, long a, long j);

/// gcd([m],[n]) [m+n]! [m-1]! [n-1]! sum_{k=1..m} [2k][k]^(2a)
/// q^(j k^2-(a+1)k) C(2m,m+k)^r C(2n,n+k)^s / ([2m]![2n]!); band j <= r+s.
ExactDivision cor_5_5(long m, long n, long r, long s, long a, long j);

/// sum_{k=1..n} [2k][k]^(2a) q^(j k^2-(a+1)k) N_q(2n+1, n+k+1)^r
/// / ([n] C(2n,n)); band j <= 2r. Accepts any j (CONJ_6_2 widens it).
ExactDivision cor_5_5_narayana(long n, long r, long a, long j);

/// Alternating q-Narayana congruence: sum_{k=-n..n} (-1)^k
/// q^(j k^2 + k(k-1)/2) N_q(2n+1, n+k+1)^r / C_n(q); band 0 <= j <= 2r-1.
ExactDivision cong_5_2(long n, long r, long j);

// --- conjecture verdicts ----------------------------------------------------

/// Outcome of a conjecture-mode evaluation: integrality of the exact
/// division, non-negativity of the quotient coefficients, and the witness.
struct ClaimVerdict {
    bool integral = false;
    std::optional<bool> nonneg;      ///< engaged iff integral
    std::optional<bool> polynomial;  ///< engaged iff integral (min_exp >= 0)
    std::optional<LaurentPoly> quotient;
    std::optional<DivisionFailure> failure;

    static ClaimVerdict from(ExactDivision d);
};

/// [m+n]![m]![n]! sum_{k=1..m} (1+q^k)[k]^r q^(j k^2-(r+s+t+1)k/2)
/// B(m,k)^s B(n,k)^t / ([2m]![2n]!). Requires r+s+t odd. Any integer j;
/// predicted non-negative for 0 <= j <= s+t.
ClaimVerdict conj_6_1(long m, long n, long r, long s, long t, long j);

/// cor_5_5_narayana at any integer j; predicted non-negative for j <= 2r.
ClaimVerdict conj_6_2(long n, long r, long a, long j);

/// thm_1_2 at any integer j; predicted non-negative for 0 <= j <= m.
ClaimVerdict conj_6_3(std::span<const long> ns, long r, long j);

/// sum_{k=1..n1} [2k][k]^(2r) q^(j k^2-(r+1)k)
/// prod_i C(n_i+n_{i+1}+1, n_i+k) C(n_i+n_{i+1}+1, n_i+k+1)
/// / ([n1] C(n1+nm,n1) prod_i [n_i+n_{i+1}+1]), cyclic n_{m+1} = n_1.
/// Any integer j; predicted non-negative for 0 <= j <= 2m.
ClaimVerdict conj_6_4(std::span<const long> ns, long r, long j);

// --- claim metadata and dispatch -------------------------------------------

struct ClaimInfo {
    ClaimId id;
    const char* name;       ///< wire name, e.g. "THM_1_1"
    const char* reference;  ///< statement label, e.g. "Theorem 1.1"
    const char* shape;      ///< human-readable parameter shape
    const char* statement;  ///< one-line description of the expression
    bool conjecture;        ///< conjecture-mode (j-window) vs theorem-mode (j-band)
    bool requires_polynomial;  ///< claim asserts a polynomial, not just Laurent
};

const std::vector<ClaimInfo>& all_claims();
const ClaimInfo& claim_info(ClaimId id);
std::optional<ClaimId> claim_from_name(std::string_view name);

/// Parameter-shape check. Returns a reason string when the tuple does not
/// satisfy the claim's preconditions (wrong arity, non-positive sizes,
/// parity violations, out-of-band j for theorem-mode claims).
std::optional<std::string> validate_params(ClaimId id, const ParamTuple& p);

/// Upper end of the claim's j-range: the theorem band for proved claims, the
/// predicted non-negativity band for conjectures. The lower end is 0.
long band_upper(ClaimId id, const ParamTuple& p);

/// Dispatches to the claim's evaluator. Throws std::invalid_argument when
/// validate_params rejects the tuple.
ClaimVerdict evaluate_claim(ClaimId id, const ParamTuple& p);

}  // namespace qsums
