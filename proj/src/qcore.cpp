#include "qsums/qcore.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qsums {

namespace {

// Shared memo table. Values are computed outside the lock (a rare duplicate
// computation yields an identical value), then published under the writer
// lock; lookups take the reader lock only, so concurrent sweep workers do
// not contend.
template <typename Key, typename Hash = std::hash<Key>>
class Memo {
public:
    template <typename F>
    LaurentPoly get(const Key& key, F&& compute) {
        {
            std::shared_lock lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        LaurentPoly value = compute();
        std::unique_lock lock(mu_);
        auto [it, inserted] = map_.try_emplace(key, std::move(value));
        (void)inserted;
        return it->second;
    }

private:
    std::shared_mutex mu_;
    std::unordered_map<Key, LaurentPoly, Hash> map_;
};

struct PairHash {
    std::size_t operator()(const std::pair<long, long>& p) const {
        return std::hash<long>()(p.first * 1000003L + p.second);
    }
};

LaurentPoly one() { return LaurentPoly::constant(1); }

}  // namespace

LaurentPoly q_int(long n) {
    if (n < 1) throw std::invalid_argument("q_int: n must be >= 1");
    return LaurentPoly(0, std::vector<BigInt>(static_cast<std::size_t>(n), 1));
}

LaurentPoly q_pochhammer(long n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer: n must be >= 0");
    static Memo<long> memo;
    return memo.get(n, [n] {
        LaurentPoly p = one();
        for (long i = 1; i <= n; ++i)
            p *= LaurentPoly::constant(1) - LaurentPoly::monomial(1, i);
        return p;
    });
}

LaurentPoly q_factorial(long n) {
    if (n < 0) throw std::invalid_argument("q_factorial: n must be >= 0");
    static Memo<long> memo;
    return memo.get(n, [n] {
        LaurentPoly p = one();
        for (long i = 1; i <= n; ++i) p *= q_int(i);
        return p;
    });
}

LaurentPoly q_binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return LaurentPoly();
    if (k == 0 || k == n) return one();
    static Memo<std::pair<long, long>, PairHash> memo;
    return memo.get({n, k}, [n, k] {
        return exact_div_checked(q_pochhammer(n),
                                 q_pochhammer(k) * q_pochhammer(n - k),
                                 "q_binomial");
    });
}

LaurentPoly cyclotomic(long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be >= 1");
    static Memo<long> memo;
    return memo.get(d, [d] {
        // q^d - 1 over the product of Phi_e for proper divisors e of d.
        LaurentPoly num = LaurentPoly::monomial(1, d) - one();
        LaurentPoly den = one();
        for (long e = 1; e < d; ++e)
            if (d % e == 0) den *= cyclotomic(e);
        return exact_div_checked(num, den, "cyclotomic");
    });
}

CyclotomicFactorization::CyclotomicFactorization(std::map<long, long> factors)
    : factors_(std::move(factors)) {
    for (const auto& [d, e] : factors_) {
        if (d < 1 || e < 1)
            throw std::invalid_argument("CyclotomicFactorization: bad entry");
    }
}

LaurentPoly CyclotomicFactorization::expand() const {
    LaurentPoly p = LaurentPoly::constant(1);
    for (const auto& [d, e] : factors_) p *= cyclotomic(d).pow(e);
    return p;
}

std::string CyclotomicFactorization::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, e] : factors_) {
        if (!first) os << "*";
        first = false;
        os << "Phi" << d << "^" << e;
    }
    return os.str();
}

CyclotomicFactorization q_binomial_cyclotomic(long m, long k) {
    if (k < 0 || m < 0 || k > m)
        throw std::invalid_argument("q_binomial_cyclotomic: need 0 <= k <= m");
    std::map<long, long> f;
    for (long d = 2; d <= m; ++d)
        if (k / d + (m - k) / d < m / d) f[d] = 1;
    return CyclotomicFactorization(std::move(f));
}

CyclotomicFactorization q_int_factorization(long n) {
    if (n < 1) throw std::invalid_argument("q_int_factorization: n must be >= 1");
    std::map<long, long> f;
    for (long d = 2; d <= n; ++d)
        if (n % d == 0) f[d] = 1;
    return CyclotomicFactorization(std::move(f));
}

CyclotomicFactorization q_gcd(const CyclotomicFactorization& a,
                              const CyclotomicFactorization& b) {
    std::map<long, long> f;
    for (const auto& [d, e] : a.factors()) {
        auto it = b.factors().find(d);
        if (it != b.factors().end()) f[d] = std::min(e, it->second);
    }
    return CyclotomicFactorization(std::move(f));
}

}  // namespace qsums
