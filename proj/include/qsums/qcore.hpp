#pragma once

#include "qsums/laurent.hpp"

#include <map>
#include <string>

namespace qsums {

/// q-integer [n] = 1 + q + ... + q^(n-1). Requires n >= 1.
LaurentPoly q_int(long n);

/// q-shifted factorial (q;q)_n = (1-q)(1-q^2)...(1-q^n). Requires n >= 0;
/// (q;q)_0 = 1. Callers implementing the 1/(q;q)_n = 0 convention for n < 0
/// must skip such terms themselves.
LaurentPoly q_pochhammer(long n);

/// q-factorial [n]! = [n][n-1]...[1]. Requires n >= 0; [0]! = 1.
LaurentPoly q_factorial(long n);

/// Gaussian binomial coefficient. Total on all integer inputs: zero whenever
/// k < 0, k > n, or n < 0, otherwise (q;q)_n / ((q;q)_k (q;q)_(n-k)) computed
/// by exact division. Memoized.
LaurentPoly q_binomial(long n, long k);

/// d-th cyclotomic polynomial, computed as (q^d - 1) divided by the product
/// of the proper-divisor cyclotomics. Requires d >= 1. Memoized.
LaurentPoly cyclotomic(long d);

/// A product of cyclotomic polynomials, prod_d Phi_d(q)^(e_d), stored as the
/// multiset {d -> e_d} with every stored exponent >= 1.
class CyclotomicFactorization {
public:
    CyclotomicFactorization() = default;
    explicit CyclotomicFactorization(std::map<long, long> factors);

    const std::map<long, long>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    /// Multiplies the factors back out.
    LaurentPoly expand() const;

    /// Rendering like "Phi2^1*Phi3^1"; "1" for the empty product.
    std::string to_string() const;

    friend bool operator==(const CyclotomicFactorization&,
                           const CyclotomicFactorization&) = default;

private:
    std::map<long, long> factors_;
};

/// Cyclotomic factorization of the q-binomial coefficient C(m, k) for
/// 0 <= k <= m: the indices d in [2, m] with
/// floor(k/d) + floor((m-k)/d) < floor(m/d), each with exponent 1.
CyclotomicFactorization q_binomial_cyclotomic(long m, long k);

/// Cyclotomic factorization of [n]: one factor Phi_d for each divisor
/// d > 1 of n. Requires n >= 1.
CyclotomicFactorization q_int_factorization(long n);

/// gcd on factorizations: entrywise minimum of exponents. Exact because
/// distinct cyclotomics are coprime.
CyclotomicFactorization q_gcd(const CyclotomicFactorization& a,
                              const CyclotomicFactorization& b);

}  // namespace qsums
