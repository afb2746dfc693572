#include "qsums/qfamilies.hpp"

#include "qsums/qcore.hpp"

#include <stdexcept>

namespace qsums {

LaurentPoly catalan_triangle(long n, long k) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("catalan_triangle: need 1 <= k <= n");
    return exact_div_checked(q_int(k) * q_binomial(2 * n, n - k), q_int(n),
                             "catalan_triangle");
}

LaurentPoly q_catalan(long n) {
    if (n < 0) throw std::invalid_argument("q_catalan: n must be >= 0");
    return exact_div_checked(q_binomial(2 * n, n), q_int(n + 1), "q_catalan");
}

LaurentPoly q_narayana(long n, long k) {
    if (n < 1) throw std::invalid_argument("q_narayana: n must be >= 1");
    LaurentPoly num = q_binomial(n, k) * q_binomial(n, k - 1);
    if (num.is_zero()) return num;
    return exact_div_checked(num, q_int(n), "q_narayana");
}

LaurentPoly q_super_catalan(long m, long n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("q_super_catalan: need m, n >= 1");
    return exact_div_checked(q_factorial(2 * m) * q_factorial(2 * n),
                             q_factorial(m + n) * q_factorial(m) * q_factorial(n),
                             "q_super_catalan");
}

}  // namespace qsums
