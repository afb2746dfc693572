#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsums/qcore.hpp"
#include "testutil.hpp"

#include <numeric>
#include <stdexcept>

using namespace qsums;

namespace {

const LaurentPoly one = LaurentPoly::constant(1);
const LaurentPoly q = LaurentPoly::monomial(1, 1);

BigInt int_binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    BigInt num = 1, den = 1;
    for (long i = 1; i <= k; ++i) {
        num *= n - k + i;
        den *= i;
    }
    return num / den;
}

}  // namespace

TEST_CASE("q_int") {
    CHECK(q_int(1) == one);
    CHECK(q_int(3) == one + q + q * q);
    CHECK(q_int(9).eval_at_one() == 9);
    CHECK_THROWS_AS(q_int(0), std::invalid_argument);
    CHECK_THROWS_AS(q_int(-2), std::invalid_argument);
}

TEST_CASE("q_pochhammer") {
    CHECK(q_pochhammer(0) == one);
    CHECK(q_pochhammer(2) == (one - q) * (one - q * q));
    // expanded by hand: (1-q)(1-q^2)(1-q^3) = 1-q-q^2+q^4+q^5-q^6
    LaurentPoly expected = one - q - q.pow(2) + q.pow(4) + q.pow(5) - q.pow(6);
    CHECK(q_pochhammer(3) == expected);
    CHECK_THROWS_AS(q_pochhammer(-1), std::invalid_argument);
}

TEST_CASE("q_factorial") {
    CHECK(q_factorial(0) == one);
    // (1)(1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3
    CHECK(q_factorial(3) == one + LaurentPoly::monomial(2, 1) +
                                LaurentPoly::monomial(2, 2) + q.pow(3));
    CHECK(q_factorial(5).eval_at_one() == 120);
    CHECK_THROWS_AS(q_factorial(-1), std::invalid_argument);
}

TEST_CASE("q_binomial frozen examples") {
    CHECK(q_binomial(4, 2) ==
          one + q + LaurentPoly::monomial(2, 2) + q.pow(3) + q.pow(4));
    for (long n = 0; n <= 10; ++n) CHECK(q_binomial(n, 0) == one);
    CHECK(q_binomial(3, 5).is_zero());
    CHECK(q_binomial(3, -1).is_zero());
    CHECK(q_binomial(-2, 1).is_zero());
}

TEST_CASE("q_binomial matches the Pascal-recurrence oracle up to n = 25") {
    for (long n = 0; n <= 25; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(testref::equal(testref::binom(n, k), q_binomial(n, k)));
}

TEST_CASE("q_binomial symmetry and Pascal recurrences") {
    for (long n = 1; n <= 25; ++n) {
        for (long k = 0; k <= n; ++k) {
            CHECK(q_binomial(n, k) == q_binomial(n, n - k));
            CHECK(q_binomial(n, k) ==
                  q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shifted(k));
            CHECK(q_binomial(n, k) ==
                  q_binomial(n - 1, k - 1).shifted(n - k) + q_binomial(n - 1, k));
        }
    }
}

TEST_CASE("q_binomial is a non-negative polynomial; q=1 gives binomials") {
    for (long n = 0; n <= 20; ++n)
        for (long k = 0; k <= n; ++k) {
            LaurentPoly b = q_binomial(n, k);
            CHECK(b.is_polynomial());
            CHECK(b.has_nonneg_coeffs());
            CHECK(b.eval_at_one() == int_binomial(n, k));
        }
}

TEST_CASE("q_binomial reciprocal law") {
    for (long n = 1; n <= 15; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(q_binomial(n, k).subst_q_inverse().shifted(k * (n - k)) ==
                  q_binomial(n, k));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == q - one);
    CHECK(cyclotomic(2) == one + q);
    CHECK(cyclotomic(6) == one - q + q.pow(2));
    CHECK(cyclotomic(8) == one + q.pow(4));
    CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

TEST_CASE("product of cyclotomics over divisors gives q^n - 1") {
    for (long n = 1; n <= 60; ++n) {
        LaurentPoly prod = one;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic(d);
        CHECK(prod == LaurentPoly::monomial(1, n) - one);
    }
}

TEST_CASE("q_binomial_cyclotomic examples") {
    CyclotomicFactorization f = q_binomial_cyclotomic(4, 2);
    CHECK(f.factors() == std::map<long, long>{{3, 1}, {4, 1}});
    CHECK(f.expand() == q_binomial(4, 2));

    CHECK(q_binomial_cyclotomic(7, 0).empty());
    CHECK(q_binomial_cyclotomic(7, 0).expand() == one);

    CyclotomicFactorization f21 = q_binomial_cyclotomic(2, 1);
    CHECK(f21.factors() == std::map<long, long>{{2, 1}});
    CHECK(f21.expand() == one + q);

    CHECK_THROWS_AS(q_binomial_cyclotomic(3, 5), std::invalid_argument);
}

TEST_CASE("q_binomial_cyclotomic expands to the q-binomial up to m = 25") {
    for (long m = 0; m <= 25; ++m)
        for (long k = 0; k <= m; ++k)
            CHECK(q_binomial_cyclotomic(m, k).expand() == q_binomial(m, k));
}

TEST_CASE("factorization constant terms are +-1") {
    for (long m = 1; m <= 12; ++m)
        for (long k = 0; k <= m; ++k) {
            LaurentPoly p = q_binomial_cyclotomic(m, k).expand();
            BigInt c0 = p.coeff(0);
            CHECK((c0 == 1 || c0 == -1));
        }
}

TEST_CASE("q_int_factorization and q_gcd") {
    CHECK(q_int_factorization(4).factors() == std::map<long, long>{{2, 1}, {4, 1}});
    CHECK(q_int_factorization(6).factors() ==
          std::map<long, long>{{2, 1}, {3, 1}, {6, 1}});
    CHECK(q_int_factorization(1).empty());

    // gcd([4],[6]) = [2]
    CyclotomicFactorization g = q_gcd(q_int_factorization(4), q_int_factorization(6));
    CHECK(g.factors() == std::map<long, long>{{2, 1}});
    CHECK(g.expand() == one + q);

    for (long n = 1; n <= 12; ++n) {
        CyclotomicFactorization f = q_int_factorization(n);
        CHECK(f.expand() == q_int(n));
        CHECK(q_gcd(f, f) == f);
    }
}

TEST_CASE("gcd of central binomial and q-integer is trivial") {
    for (long n = 1; n <= 20; ++n)
        CHECK(q_gcd(q_binomial_cyclotomic(2 * n, n), q_int_factorization(n)).empty());
}

TEST_CASE("gcd of q-integers is the q-integer of the gcd") {
    for (long m = 1; m <= 40; ++m)
        for (long n = 1; n <= 40; ++n)
            CHECK(q_gcd(q_int_factorization(m), q_int_factorization(n)).expand() ==
                  q_int(std::gcd(m, n)));
}

TEST_CASE("factorization rendering") {
    CHECK(q_gcd(q_int_factorization(4), q_int_factorization(6)).to_string() == "Phi2^1");
    CHECK(q_int_factorization(6).to_string() == "Phi2^1*Phi3^1*Phi6^1");
    CHECK(q_binomial_cyclotomic(5, 0).to_string() == "1");
}

TEST_CASE("factorization rejects bad entries") {
    CHECK_THROWS_AS(CyclotomicFactorization(std::map<long, long>{{2, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(CyclotomicFactorization(std::map<long, long>{{0, 1}}),
                    std::invalid_argument);
}
