#include "qsums/expressions.hpp"

#include "qsums/qcore.hpp"
#include "qsums/qfamilies.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace qsums {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

LaurentPoly one() { return LaurentPoly::constant(1); }

// Common summand weight [2k][k]^(2r).
LaurentPoly power_weight(long k, long r) {
    return q_int(2 * k) * q_int(k).pow(2 * r);
}

struct SeqKey {
    std::vector<long> as;
    long k = 0;
    bool operator==(const SeqKey&) const = default;
};

struct SeqKeyHash {
    std::size_t operator()(const SeqKey& key) const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](std::size_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        for (long a : key.as) mix(static_cast<std::size_t>(a) + 0x9e37);
        mix(static_cast<std::size_t>(key.k ^ 0x7f4a7c15));
        return h;
    }
};

// Memo for per-k binomial products, shared across (r, j) grid points. Same
// locking discipline as the qcore tables: value computed outside the lock,
// lookups under a reader lock.
class SeqMemo {
public:
    template <typename F>
    LaurentPoly get(std::span<const long> as, long k, F&& compute) {
        SeqKey key{std::vector<long>(as.begin(), as.end()), k};
        {
            std::shared_lock lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        LaurentPoly v = compute();
        std::unique_lock lock(mu_);
        auto [it, inserted] = map_.try_emplace(std::move(key), std::move(v));
        (void)inserted;
        return it->second;
    }

private:
    std::shared_mutex mu_;
    std::unordered_map<SeqKey, LaurentPoly, SeqKeyHash> map_;
};

LaurentPoly gcd_q_int_poly(long m, long n) {
    return q_gcd(q_int_factorization(m), q_int_factorization(n)).expand();
}

}  // namespace

bool ParamTuple::lex_less(const ParamTuple& o) const {
    if (ns.size() != o.ns.size()) return ns.size() < o.ns.size();
    if (ns != o.ns) return ns < o.ns;
    auto v = [](const std::optional<long>& x) { return x.value_or(-1); };
    long s1 = v(s), t1 = v(t), a1 = v(a), k1 = v(k);
    long s2 = v(o.s), t2 = v(o.t), a2 = v(o.a), k2 = v(o.k);
    return std::tie(r, s1, t1, a1, k1, j) < std::tie(o.r, s2, t2, a2, k2, o.j);
}

std::string ParamTuple::to_string() const {
    std::ostringstream os;
    os << "ns=[";
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (i) os << "|";
        os << ns[i];
    }
    os << "];r=" << r;
    if (s) os << ";s=" << *s;
    if (t) os << ";t=" << *t;
    if (a) os << ";a=" << *a;
    if (k) os << ";k=" << *k;
    os << ";j=" << j;
    return os.str();
}

LaurentPoly sum_S_r(long n, long r) {
    require(n >= 1, "sum_S_r: n must be >= 1");
    require(r >= 0, "sum_S_r: r must be >= 0");
    LaurentPoly sum;
    for (long k = 1; k <= n; ++k)
        sum += power_weight(k, r).shifted((r + 1) * (n - k)) * q_binomial(2 * n, n + k);
    return sum;
}

LaurentPoly sum_T_r(long n, long r) {
    require(n >= 1, "sum_T_r: n must be >= 1");
    require(r >= 0, "sum_T_r: r must be >= 0");
    LaurentPoly sum;
    for (long k = 1; k <= n; ++k)
        sum += power_weight(k, r).shifted((r + 1) * (n - k) + k * k) *
               q_binomial(2 * n, n + k);
    return sum;
}

LaurentPoly product_C(std::span<const long> as, long k) {
    require(!as.empty(), "product_C: empty sequence");
    static SeqMemo memo;
    return memo.get(as, k, [&] {
        LaurentPoly p = one();
        for (std::size_t i = 0; i < as.size(); ++i) {
            long next = (i + 1 < as.size()) ? as[i + 1] : as[0];
            p *= q_binomial(as[i] + next, as[i] + k);
            if (p.is_zero()) break;
        }
        return p;
    });
}

ExactDivision thm_1_1(long n, long r, long j) {
    require(n >= 1, "thm_1_1: n must be >= 1");
    require(r >= 1, "thm_1_1: r must be >= 1");
    require(j == 0 || j == 1, "thm_1_1: j must be 0 or 1");
    LaurentPoly num = (j == 0) ? sum_S_r(n, r) : sum_T_r(n, r);
    return exact_div(num, q_int(n).pow(2) * q_binomial(2 * n, n));
}

ExactDivision thm_1_2(std::span<const long> ns, long r, long j) {
    require(!ns.empty(), "thm_1_2: empty cycle");
    for (long v : ns) require(v >= 1, "thm_1_2: cycle entries must be >= 1");
    require(r >= 0, "thm_1_2: r must be >= 0");
    long n1 = ns.front(), nm = ns.back();
    LaurentPoly num;
    for (long k = 1; k <= n1; ++k) {
        LaurentPoly prod = product_C(ns, k);
        if (prod.is_zero()) continue;
        num += power_weight(k, r).shifted(j * k * k - (r + 1) * k) * prod;
    }
    return exact_div(num, q_int(n1) * q_binomial(n1 + nm, n1));
}

ExactDivision thm_1_3(long n, long r, long s, long j) {
    require(n >= 1, "thm_1_3: n must be >= 1");
    require(r >= 0, "thm_1_3: r must be >= 0");
    require(s >= 1, "thm_1_3: s must be >= 1");
    require((r + s) % 2 == 1, "thm_1_3: r and s must have opposite parity");
    const long half = (r + s + 1) / 2;
    LaurentPoly num;
    for (long k = 1; k <= n; ++k) {
        LaurentPoly term = (one() + LaurentPoly::monomial(1, k)) * q_int(k).pow(r) *
                           catalan_triangle(n, k).pow(s);
        num += term.shifted(j * k * k - half * k);
    }
    return exact_div(num, q_binomial(2 * n, n));
}

ExactDivision thm_5_4(std::span<const long> ns, long r, long j) {
    require(!ns.empty(), "thm_5_4: empty cycle");
    for (long v : ns) require(v >= 1, "thm_5_4: cycle entries must be >= 1");
    require(r >= 0, "thm_5_4: r must be >= 0");
    const long n1 = ns.front();
    LaurentPoly prefactor = q_factorial(n1 - 1);
    LaurentPoly den = one();
    for (std::size_t i = 0; i < ns.size(); ++i) {
        long next = (i + 1 < ns.size()) ? ns[i + 1] : 0;
        prefactor *= q_factorial(ns[i] + next);
        den *= q_factorial(2 * ns[i]);
    }
    static SeqMemo memo;
    LaurentPoly sum;
    for (long k = 1; k <= n1; ++k) {
        LaurentPoly prod = memo.get(ns, k, [&] {
            LaurentPoly p = one();
            for (long v : ns) {
                p *= q_binomial(2 * v, v + k);
                if (p.is_zero()) break;
            }
            return p;
        });
        if (prod.is_zero()) continue;
        sum += power_weight(k, r).shifted(j * k * k - (r + 1) * k) * prod;
    }
    return exact_div(prefactor * sum, den);
}

ExactDivision cor_5_1(long m, long n, long r, long a, long j) {
    require(m >= 1 && n >= 1, "cor_5_1: m, n must be >= 1");
    require(r >= 1, "cor_5_1: r must be >= 1");
    require(a >= 0, "cor_5_1: a must be >= 0");
    LaurentPoly sum;
    for (long k = 1; k <= m; ++k) {
        LaurentPoly prod =
            q_binomial(m + n, m + k).pow(r) * q_binomial(m + n, n + k).pow(r);
        if (prod.is_zero()) continue;
        sum += power_weight(k, a).shifted(j * k * k - (a + 1) * k) * prod;
    }
    return exact_div(gcd_q_int_poly(m, n) * sum,
                     q_int(m) * q_int(n) * q_binomial(m + n, m));
}

ExactDivision cor_5_2(long l, long m, long n, long r, long a, long j) {
    require(l >= 1 && m >= 1 && n >= 1, "cor_5_2: l, m, n must be >= 1");
    require(r >= 1, "cor_5_2: r must be >= 1");
    require(a >= 0, "cor_5_2: a must be >= 0");
    LaurentPoly sum;
    for (long k = 1; k <= m; ++k) {
        LaurentPoly prod = q_binomial(l + m, l + k).pow(r) *
                           q_binomial(m + n, m + k).pow(r) *
                           q_binomial(n + l, n + k).pow(r);
        if (prod.is_zero()) continue;
        sum += power_weight(k, a).shifted(j * k * k - (a + 1) * k) * prod;
    }
    return exact_div(gcd_q_int_poly(m, n) * sum,
                     q_int(m) * q_int(n) * q_binomial(m + n, m));
}

ExactDivision cor_5_3(long n, long r, long s, long a, long j) {
    require(n >= 1, "cor_5_3: n must be >= 1");
    require(r >= 1 && s >= 1, "cor_5_3: r, s must be >= 1");
    require(a >= 0, "cor_5_3: a must be >= 0");
    LaurentPoly sum;
    for (long k = 1; k <= n; ++k) {
        LaurentPoly prod = q_binomial(2 * n + 1, n + k + 1).pow(r) *
                           q_binomial(2 * n + 1, n + k).pow(r) *
                           q_binomial(2 * n, n + k).pow(s);
        if (prod.is_zero()) continue;
        sum += power_weight(k, a).shifted(j * k * k - (a + 1) * k) * prod;
    }
    return exact_div(sum, q_int(n) * q_int(n + 1) * q_binomial(2 * n + 1, n));
}

ExactDivision cor_5_5(long m, long n, long r, long s, long a, long j) {
    require(m >= 1 && n >= 1, "cor_5_5: m, n must be >= 1");
    require(r >= 1 && s >= 1, "cor_5_5: r, s must be >= 1");
    require(a >= 0, "cor_5_5: a must be >= 0");
    LaurentPoly sum;
    for (long k = 1; k <= m; ++k) {
        LaurentPoly prod =
            q_binomial(2 * m, m + k).pow(r) * q_binomial(2 * n, n + k).pow(s);
        if (prod.is_zero()) continue;
        sum += power_weight(k, a).shifted(j * k * k - (a + 1) * k) * prod;
    }
    LaurentPoly pre = gcd_q_int_poly(m, n) * q_factorial(m + n) *
                      q_factorial(m - 1) * q_factorial(n - 1);
    return exact_div(pre * sum, q_factorial(2 * m) * q_factorial(2 * n));
}

ExactDivision cor_5_5_narayana(long n, long r, long a, long j) {
    require(n >= 1, "cor_5_5_narayana: n must be >= 1");
    require(r >= 1, "cor_5_5_narayana: r must be >= 1");
    require(a >= 0, "cor_5_5_narayana: a must be >= 0");
    LaurentPoly sum;
    for (long k = 1; k <= n; ++k) {
        LaurentPoly nar = q_narayana(2 * n + 1, n + k + 1).pow(r);
        if (nar.is_zero()) continue;
        sum += power_weight(k, a).shifted(j * k * k - (a + 1) * k) * nar;
    }
    return exact_div(sum, q_int(n) * q_binomial(2 * n, n));
}

ExactDivision cong_5_2(long n, long r, long j) {
    require(n >= 1, "cong_5_2: n must be >= 1");
    require(r >= 1, "cong_5_2: r must be >= 1");
    require(j >= 0 && j <= 2 * r - 1, "cong_5_2: need 0 <= j <= 2r-1");
    LaurentPoly sum;
    for (long k = -n; k <= n; ++k) {
        LaurentPoly nar = q_narayana(2 * n + 1, n + k + 1).pow(r);
        if (nar.is_zero()) continue;
        long sign = (k % 2 != 0) ? -1 : 1;
        sum += LaurentPoly::monomial(sign, j * k * k + k * (k - 1) / 2) * nar;
    }
    return exact_div(sum, q_catalan(n));
}

ClaimVerdict ClaimVerdict::from(ExactDivision d) {
    ClaimVerdict v;
    if (d.ok()) {
        v.integral = true;
        v.nonneg = d.quotient().has_nonneg_coeffs();
        v.polynomial = d.quotient().is_polynomial();
        v.quotient = d.quotient();
    } else {
        v.failure = d.failure();
    }
    return v;
}

ClaimVerdict conj_6_1(long m, long n, long r, long s, long t, long j) {
    require(m >= 1 && n >= 1, "conj_6_1: m, n must be >= 1");
    require(s >= 1 && t >= 1, "conj_6_1: s, t must be >= 1");
    require(r >= 0, "conj_6_1: r must be >= 0");
    require((r + s + t) % 2 == 1, "conj_6_1: r+s+t must be odd");
    const long half = (r + s + t + 1) / 2;
    LaurentPoly sum;
    for (long k = 1; k <= std::min(m, n); ++k) {
        // B(n,k) vanishes for k > n, so the sum stops at min(m, n).
        LaurentPoly prod = catalan_triangle(m, k).pow(s) * catalan_triangle(n, k).pow(t);
        LaurentPoly term =
            (one() + LaurentPoly::monomial(1, k)) * q_int(k).pow(r) * prod;
        sum += term.shifted(j * k * k - half * k);
    }
    LaurentPoly pre = q_factorial(m + n) * q_factorial(m) * q_factorial(n);
    return ClaimVerdict::from(
        exact_div(pre * sum, q_factorial(2 * m) * q_factorial(2 * n)));
}

ClaimVerdict conj_6_2(long n, long r, long a, long j) {
    return ClaimVerdict::from(cor_5_5_narayana(n, r, a, j));
}

ClaimVerdict conj_6_3(std::span<const long> ns, long r, long j) {
    return ClaimVerdict::from(thm_1_2(ns, r, j));
}

ClaimVerdict conj_6_4(std::span<const long> ns, long r, long j) {
    require(!ns.empty(), "conj_6_4: empty cycle");
    for (long v : ns) require(v >= 1, "conj_6_4: cycle entries must be >= 1");
    require(r >= 0, "conj_6_4: r must be >= 0");
    const long n1 = ns.front(), nm = ns.back();
    LaurentPoly den = q_int(n1) * q_binomial(n1 + nm, n1);
    for (std::size_t i = 0; i < ns.size(); ++i) {
        long next = (i + 1 < ns.size()) ? ns[i + 1] : ns[0];
        den *= q_int(ns[i] + next + 1);
    }
    static SeqMemo memo;
    LaurentPoly sum;
    for (long k = 1; k <= n1; ++k) {
        LaurentPoly prod = memo.get(ns, k, [&] {
            LaurentPoly p = one();
            for (std::size_t i = 0; i < ns.size(); ++i) {
                long next = (i + 1 < ns.size()) ? ns[i + 1] : ns[0];
                p *= q_binomial(ns[i] + next + 1, ns[i] + k) *
                     q_binomial(ns[i] + next + 1, ns[i] + k + 1);
                if (p.is_zero()) break;
            }
            return p;
        });
        if (prod.is_zero()) continue;
        sum += power_weight(k, r).shifted(j * k * k - (r + 1) * k) * prod;
    }
    return ClaimVerdict::from(exact_div(sum, den));
}

// --- metadata ---------------------------------------------------------------

const std::vector<ClaimInfo>& all_claims() {
    static const std::vector<ClaimInfo> table = {
        {ClaimId::THM_1_1, "THM_1_1", "Theorem 1.1",
         "ns=[n] (n>=1); r>=1; j in {0,1}",
         "sum_{k=1..n} [2k][k]^(2r) q^((r+1)(n-k)+j*k^2) C(2n,n+k) over "
         "[n]^2*C(2n,n) is a polynomial",
         false, true},
        {ClaimId::THM_1_2, "THM_1_2", "Theorem 1.2",
         "ns=[n_1..n_m] (n_i>=1); r>=0; 0<=j<=m",
         "sum_{k=1..n_1} [2k][k]^(2r) q^(j*k^2-(r+1)k) prod_i "
         "C(n_i+n_{i+1},n_i+k) over [n_1]*C(n_1+n_m,n_1) is Laurent",
         false, false},
        {ClaimId::THM_1_3, "THM_1_3", "Theorem 1.3",
         "ns=[n] (n>=1); r>=0; s>=1 with r+s odd; 0<=j<=s",
         "sum_{k=1..n} (1+q^k)[k]^r B(n,k)^s q^(j*k^2-(r+s+1)k/2) over "
         "C(2n,n) is Laurent",
         false, false},
        {ClaimId::COR_5_1, "COR_5_1", "Corollary 5.1",
         "ns=[m,n] (>=1); r>=1; a>=0; 0<=j<=2r",
         "gcd([m],[n])/([m][n]) * C(m+n,m)^-1 * sum_{k=1..m} [2k][k]^(2a) "
         "q^(j*k^2-(a+1)k) C(m+n,m+k)^r C(m+n,n+k)^r is Laurent",
         false, false},
        {ClaimId::COR_5_2, "COR_5_2", "Corollary 5.2",
         "ns=[l,m,n] (>=1); r>=1; a>=0; 0<=j<=3r",
         "gcd([m],[n])/([m][n]) * C(m+n,m)^-1 * sum_{k=1..m} [2k][k]^(2a) "
         "q^(j*k^2-(a+1)k) C(l+m,l+k)^r C(m+n,m+k)^r C(n+l,n+k)^r is Laurent",
         false, false},
        {ClaimId::COR_5_3, "COR_5_3", "Corollary 5.3",
         "ns=[n] (n>=1); r>=1; s>=1; a>=0; 0<=j<=2r+s",
         "1/([n][n+1]) * C(2n+1,n)^-1 * sum_{k=1..n} [2k][k]^(2a) "
         "q^(j*k^2-(a+1)k) C(2n+1,n+k+1)^r C(2n+1,n+k)^r C(2n,n+k)^s is Laurent",
         false, false},
        {ClaimId::THM_5_4, "THM_5_4", "Theorem 5.4",
         "ns=[n_1..n_m] (n_i>=1); r>=0; 0<=j<=m",
         "[n_1-1]! prod_i [n_i+n_{i+1}]!/[2n_i]! (n_{m+1}=0) * sum_{k=1..n_1} "
         "[2k][k]^(2r) q^(j*k^2-(r+1)k) prod_i C(2n_i,n_i+k) is Laurent",
         false, false},
        {ClaimId::COR_5_5, "COR_5_5", "Corollary 5.5",
         "ns=[m,n] (>=1); r>=1; s>=1; a>=0; 0<=j<=r+s",
         "gcd([m],[n])[m+n]![m-1]![n-1]!/([2m]![2n]!) * sum_{k=1..m} "
         "[2k][k]^(2a) q^(j*k^2-(a+1)k) C(2m,m+k)^r C(2n,n+k)^s is Laurent",
         false, false},
        {ClaimId::COR_5_5_NARAYANA, "COR_5_5_NARAYANA", "Corollary 5.6 (q-Narayana)",
         "ns=[n] (n>=1); r>=1; a>=0; 0<=j<=2r",
         "1/[n] * C(2n,n)^-1 * sum_{k=1..n} [2k][k]^(2a) q^(j*k^2-(a+1)k) "
         "N_q(2n+1,n+k+1)^r is Laurent",
         false, false},
        {ClaimId::CONJ_6_1, "CONJ_6_1", "Conjecture 6.1",
         "ns=[m,n] (>=1); s,t>=1; r>=0 with r+s+t odd; any j",
         "[m+n]![m]![n]!/([2m]![2n]!) * sum_{k=1..m} (1+q^k)[k]^r "
         "q^(j*k^2-(r+s+t+1)k/2) B(m,k)^s B(n,k)^t is Laurent; non-negative "
         "for 0<=j<=s+t",
         true, false},
        {ClaimId::CONJ_6_2, "CONJ_6_2", "Conjecture 6.2",
         "ns=[n] (n>=1); r>=1; a>=0; any j",
         "the COR_5_5_NARAYANA expression at any integer j is Laurent; "
         "non-negative for 0<=j<=2r",
         true, false},
        {ClaimId::CONJ_6_3, "CONJ_6_3", "Conjecture 6.3",
         "ns=[n_1..n_m] (n_i>=1); r>=0; any j",
         "the THM_1_2 expression at any integer j is Laurent; non-negative "
         "for 0<=j<=m",
         true, false},
        {ClaimId::CONJ_6_4, "CONJ_6_4", "Conjecture 6.4",
         "ns=[n_1..n_m] (n_i>=1); r>=0; any j",
         "1/([n_1]C(n_1+n_m,n_1)) prod_i [n_i+n_{i+1}+1]^-1 * sum_{k=1..n_1} "
         "[2k][k]^(2r) q^(j*k^2-(r+1)k) prod_i C(n_i+n_{i+1}+1,n_i+k) "
         "C(n_i+n_{i+1}+1,n_i+k+1) is Laurent; non-negative for 0<=j<=2m",
         true, false},
        {ClaimId::CONG_5_2, "CONG_5_2", "Congruence (5.2)",
         "ns=[n] (n>=1); r>=1; 0<=j<=2r-1",
         "sum_{k=-n..n} (-1)^k q^(j*k^2+k(k-1)/2) N_q(2n+1,n+k+1)^r is "
         "divisible by the q-Catalan number C_n(q)",
         false, false},
    };
    return table;
}

const ClaimInfo& claim_info(ClaimId id) {
    for (const auto& info : all_claims())
        if (info.id == id) return info;
    throw std::logic_error("claim_info: unknown id");
}

std::optional<ClaimId> claim_from_name(std::string_view name) {
    for (const auto& info : all_claims())
        if (name == info.name) return info.id;
    return std::nullopt;
}

namespace {

std::optional<std::string> check_shape(const ParamTuple& p, std::size_t arity,
                                       long r_min, bool need_s, bool need_t,
                                       bool need_a) {
    if (arity > 0 && p.ns.size() != arity)
        return "expected " + std::to_string(arity) + " size parameter(s)";
    if (arity == 0 && p.ns.empty()) return std::string("empty cycle");
    for (long v : p.ns)
        if (v < 1) return std::string("size parameters must be >= 1");
    if (p.r < r_min)
        return "r must be >= " + std::to_string(r_min);
    if (need_s && (!p.s || *p.s < 1)) return std::string("s must be >= 1");
    if (need_t && (!p.t || *p.t < 1)) return std::string("t must be >= 1");
    if (need_a && (!p.a || *p.a < 0)) return std::string("a must be >= 0");
    return std::nullopt;
}

}  // namespace

long band_upper(ClaimId id, const ParamTuple& p) {
    switch (id) {
        case ClaimId::THM_1_1: return 1;
        case ClaimId::THM_1_2: return static_cast<long>(p.ns.size());
        case ClaimId::THM_1_3: return p.s.value_or(0);
        case ClaimId::COR_5_1: return 2 * p.r;
        case ClaimId::COR_5_2: return 3 * p.r;
        case ClaimId::COR_5_3: return 2 * p.r + p.s.value_or(0);
        case ClaimId::THM_5_4: return static_cast<long>(p.ns.size());
        case ClaimId::COR_5_5: return p.r + p.s.value_or(0);
        case ClaimId::COR_5_5_NARAYANA: return 2 * p.r;
        case ClaimId::CONJ_6_1: return p.s.value_or(0) + p.t.value_or(0);
        case ClaimId::CONJ_6_2: return 2 * p.r;
        case ClaimId::CONJ_6_3: return static_cast<long>(p.ns.size());
        case ClaimId::CONJ_6_4: return 2 * static_cast<long>(p.ns.size());
        case ClaimId::CONG_5_2: return 2 * p.r - 1;
    }
    throw std::logic_error("band_upper: unknown id");
}

std::optional<std::string> validate_params(ClaimId id, const ParamTuple& p) {
    std::optional<std::string> err;
    switch (id) {
        case ClaimId::THM_1_1: err = check_shape(p, 1, 1, false, false, false); break;
        case ClaimId::THM_1_2: err = check_shape(p, 0, 0, false, false, false); break;
        case ClaimId::THM_1_3:
            err = check_shape(p, 1, 0, true, false, false);
            if (!err && (p.r + *p.s) % 2 == 0)
                err = "parity: r and s must have opposite parity";
            break;
        case ClaimId::COR_5_1: err = check_shape(p, 2, 1, false, false, true); break;
        case ClaimId::COR_5_2: err = check_shape(p, 3, 1, false, false, true); break;
        case ClaimId::COR_5_3: err = check_shape(p, 1, 1, true, false, true); break;
        case ClaimId::THM_5_4: err = check_shape(p, 0, 0, false, false, false); break;
        case ClaimId::COR_5_5: err = check_shape(p, 2, 1, true, false, true); break;
        case ClaimId::COR_5_5_NARAYANA:
            err = check_shape(p, 1, 1, false, false, true);
            break;
        case ClaimId::CONJ_6_1:
            err = check_shape(p, 2, 0, true, true, false);
            if (!err && (p.r + *p.s + *p.t) % 2 == 0)
                err = "parity: r+s+t must be odd";
            break;
        case ClaimId::CONJ_6_2: err = check_shape(p, 1, 1, false, false, true); break;
        case ClaimId::CONJ_6_3: err = check_shape(p, 0, 0, false, false, false); break;
        case ClaimId::CONJ_6_4: err = check_shape(p, 0, 0, false, false, false); break;
        case ClaimId::CONG_5_2: err = check_shape(p, 1, 1, false, false, false); break;
    }
    if (err) return err;
    if (!claim_info(id).conjecture) {
        long hi = band_upper(id, p);
        if (p.j < 0 || p.j > hi)
            return "j outside theorem band [0, " + std::to_string(hi) + "]";
    }
    return std::nullopt;
}

ClaimVerdict evaluate_claim(ClaimId id, const ParamTuple& p) {
    if (auto err = validate_params(id, p))
        throw std::invalid_argument("evaluate_claim(" +
                                    std::string(claim_info(id).name) +
                                    "): " + *err);
    switch (id) {
        case ClaimId::THM_1_1:
            return ClaimVerdict::from(thm_1_1(p.ns[0], p.r, p.j));
        case ClaimId::THM_1_2:
            return ClaimVerdict::from(thm_1_2(p.ns, p.r, p.j));
        case ClaimId::THM_1_3:
            return ClaimVerdict::from(thm_1_3(p.ns[0], p.r, *p.s, p.j));
        case ClaimId::COR_5_1:
            return ClaimVerdict::from(cor_5_1(p.ns[0], p.ns[1], p.r, *p.a, p.j));
        case ClaimId::COR_5_2:
            return ClaimVerdict::from(
                cor_5_2(p.ns[0], p.ns[1], p.ns[2], p.r, *p.a, p.j));
        case ClaimId::COR_5_3:
            return ClaimVerdict::from(cor_5_3(p.ns[0], p.r, *p.s, *p.a, p.j));
        case ClaimId::THM_5_4:
            return ClaimVerdict::from(thm_5_4(p.ns, p.r, p.j));
        case ClaimId::COR_5_5:
            return ClaimVerdict::from(
                cor_5_5(p.ns[0], p.ns[1], p.r, *p.s, *p.a, p.j));
        case ClaimId::COR_5_5_NARAYANA:
            return ClaimVerdict::from(cor_5_5_narayana(p.ns[0], p.r, *p.a, p.j));
        case ClaimId::CONJ_6_1:
            return conj_6_1(p.ns[0], p.ns[1], p.r, *p.s, *p.t, p.j);
        case ClaimId::CONJ_6_2:
            return conj_6_2(p.ns[0], p.r, *p.a, p.j);
        case ClaimId::CONJ_6_3:
            return conj_6_3(p.ns, p.r, p.j);
        case ClaimId::CONJ_6_4:
            return conj_6_4(p.ns, p.r, p.j);
        case ClaimId::CONG_5_2:
            return ClaimVerdict::from(cong_5_2(p.ns[0], p.r, p.j));
    }
    throw std::logic_error("evaluate_claim: unknown id");
}

}  // namespace qsums
