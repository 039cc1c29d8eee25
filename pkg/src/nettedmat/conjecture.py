"""Conjectured quadratic factorization of the characteristic polynomial.

For the generalized Fibonacci matrix the characteristic polynomial
det(T - x I) appears to factor into quadratics x^2 +- V_k x +- 1 whose
middle coefficients are companion-sequence values V_k = lucas(m, k), with
signs and indices cycling with n mod 4.  conjectured_charpoly builds that
product exactly as stated in its recursion; verify_conjecture compares it
coefficient by coefficient against the characteristic polynomial computed
from the matrix.
"""

from __future__ import annotations

from .fibmat import build_T
from .matrices import charpoly
from .polynomials import Poly
from .reports import make_report, witness
from .sequences import lucas


def _quadratic(c0, c1, var):
    return Poly((c0, c1, 1), var)


def conjectured_charpoly(n, m, var="x"):
    """The conjectured value of det(T - x I) as a Poly, lowest degree first.

    Base cases run through n = 3; from there each step multiplies the
    polynomial four below by a pair of quadratics whose V indices advance
    by four, in one of four sign patterns chosen by n mod 4.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    v = lambda k: lucas(m, k)
    seq = [
        Poly((1,), var),
        Poly((1, -1), var),
        _quadratic(-1, -v(1), var),
        Poly((-1,), var) * Poly((1, 1), var) * _quadratic(1, -v(2), var),
    ]
    for k in range(4, n + 1):
        if k % 4 == 0:
            j = (k - 4) // 4
            pair = (_quadratic(-1, v(4 * j + 1), var),
                    _quadratic(-1, -v(4 * j + 3), var))
        elif k % 4 == 1:
            j = (k - 1) // 4
            pair = (_quadratic(1, v(4 * j - 2), var),
                    _quadratic(1, -v(4 * j), var))
        elif k % 4 == 2:
            j = (k - 2) // 4
            pair = (_quadratic(-1, v(4 * j - 1), var),
                    _quadratic(-1, -v(4 * j + 1), var))
        else:
            j = (k - 3) // 4
            pair = (_quadratic(1, v(4 * j), var),
                    _quadratic(1, -v(4 * j + 2), var))
        seq.append(pair[0] * pair[1] * seq[k - 4])
    return seq[n]


def verify_conjecture(n, m, claim_id="conj6", info=None):
    """Computed det(T - x I) against the conjectured product."""
    computed = charpoly(build_T(n, m))
    conjectured = conjectured_charpoly(n, m)
    wit = []
    top = max(computed.degree, conjectured.degree)
    for k in range(top + 1):
        want = conjectured.coefficient(k)
        got = computed.coefficient(k)
        if got != want:
            wit.append(witness(f"x^{k}", want, got))
    out = dict(info or {})
    out.update(n=n, m=m, degree=computed.degree)
    return make_report(claim_id, out, wit)
