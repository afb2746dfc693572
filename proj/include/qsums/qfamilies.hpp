#pragma once

#include "qsums/laurent.hpp"

namespace qsums {

// Named polynomial families. Each is defined by its exact-division route, so
// constructing a value re-proves the "is a polynomial" fact; a division
// failure here throws, it is never a recorded verdict.

/// q-Catalan triangle entry B(n,k) = ([k]/[n]) C(2n, n-k), 1 <= k <= n.
LaurentPoly catalan_triangle(long n, long k);

/// q-Catalan number C_n(q) = (1/[n+1]) C(2n, n), n >= 0.
LaurentPoly q_catalan(long n);

/// q-Narayana number N_q(n,k) = (1/[n]) C(n,k) C(n,k-1) for n >= 1; zero for
/// k outside [1, n] via the binomial's zero branch.
LaurentPoly q_narayana(long n, long k);

/// q-super Catalan number [2m]![2n]! / ([m+n]![m]![n]!), m, n >= 1.
LaurentPoly q_super_catalan(long m, long n);

}  // namespace qsums
