"""Exact q-binomial sum arithmetic and divisibility verification.

The heavy lifting lives in the compiled extension ``_qsums``; this package
re-exports its surface. Reports come back as JSON or CSV text; parse JSON
with :func:`json.loads`.
"""

from ._qsums import (  # noqa: F401
    ClaimVerdict,
    CyclotomicFactorization,
    DivisionFailure,
    LaurentPoly,
    __version__,
    catalan_triangle,
    cong_5_2,
    conj_6_1,
    conj_6_2,
    conj_6_3,
    conj_6_4,
    cor_5_1,
    cor_5_2,
    cor_5_3,
    cor_5_5,
    cor_5_5_narayana,
    cyclotomic,
    evaluate_claim,
    exact_div,
    list_claims,
    list_oracles,
    product_C,
    q_binomial,
    q_binomial_cyclotomic,
    q_catalan,
    q_factorial,
    q_gcd,
    q_int,
    q_int_factorization,
    q_narayana,
    q_pochhammer,
    q_super_catalan,
    run_oracles,
    run_sweep,
    sum_S_r,
    sum_T_r,
    thm_1_1,
    thm_1_2,
    thm_1_3,
    thm_5_4,
)
