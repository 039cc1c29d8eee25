"""Mod-p behavior of generalized Fibonacci matrix powers.

Everything here revolves around the entry point e = entry_point(m, p), the
least index with p | U_e.  T^e collapses to the scalar U_{e-1}^(n-1) mod p,
T^(4e) is the identity, and the intermediate powers follow parity rules in
n and e.  Further statements tie T^(p-1) and T^(p+1) to which of U_{p-1},
U_{p+1} the prime divides, and to integer roots of x^2 - m x - 1 mod p.

Each verifier reduces the exact matrix powers and reports entry-level
witnesses.  One printed scalar form for odd entry points disagrees with
both the computed matrices and the parity form derived from the scalar
collapse; when the computed power matches the derived form but not the
printed one, the report carries status discrepancy-documented instead of
fail, with the two scalars side by side.  Primes dividing m^2 + 4 get a
flag in every report's params, since the theory splits on that case.
"""

from __future__ import annotations

from .fibmat import build_T
from .matrices import Matrix, pow_mod
from .reports import (DISCREPANCY_DOCUMENTED, HYPOTHESIS_NOT_SATISFIED,
                      make_report, witness)
from .sequences import entry_point, fibonacci_pair, pair_period


def _scalar_of(mat, p):
    """c with mat == c*I mod p, or None; mat must already be reduced."""
    lead = mat.rows[0][0]
    n = mat.nrows
    for i in range(n):
        for j in range(n):
            want = lead if i == j else 0
            if mat.rows[i][j] != want:
                return None
    return lead


def _scalar_matrix(n, c, p):
    c %= p
    return Matrix(tuple(tuple(c if i == j else 0 for j in range(n))
                        for i in range(n)))


def _matrix_witnesses(tag, actual, expected):
    out = []
    n = actual.nrows
    for i in range(n):
        for j in range(n):
            a = actual.rows[i][j]
            w = expected.rows[i][j]
            if a != w:
                out.append(witness(f"{tag},i={i + 1},j={j + 1}", w, a))
    return out


def _base_params(n, m, p, **extra):
    out = {"n": n, "m": m, "p": p,
           "divides_D": "true" if (m * m + 4) % p == 0 else "false"}
    out.update(extra)
    return out


def verify_entry_point_theorem(n, m, p):
    """The five entry-point statements as separate Reports.

    i   T^e is the scalar U_{e-1}^(n-1) mod p.
    ii  The parity form of that scalar: for n = 2k the power is
        (-1)^((k+1)e) U_{e-1}, for n = 2k+1 it is (-1)^(ke).
    iii T^(4e) == I.
    iv  T^(2e) == I when e is even (hypothesis not satisfied otherwise).
    v   For odd e (and odd p) the printed square-root form for T^(2e),
        r^(n-1) or (-r)^(n-1) with r = U_{(e+1)/2} / U_{(e-1)/2} mod p,
        checked against the derived parity form (-1)^(e(n-1)).
    """
    e = entry_point(m, p)
    u_prev = fibonacci_pair(m, e - 1, p)[0]
    t = build_T(n, m)
    te = pow_mod(t, e, p)
    t2e = (te * te) % p
    t4e = (t2e * t2e) % p
    ident = Matrix.identity(n)
    reports = []

    expected = _scalar_matrix(n, pow(u_prev, n - 1, p), p)
    reports.append(make_report(
        "thm5.1.i", _base_params(n, m, p, e=e),
        _matrix_witnesses("T^e", te, expected)))

    if n % 2 == 0:
        k = n // 2
        scalar = u_prev if (k + 1) * e % 2 == 0 else -u_prev
    else:
        k = (n - 1) // 2
        scalar = 1 if k * e % 2 == 0 else -1
    expected = _scalar_matrix(n, scalar, p)
    reports.append(make_report(
        "thm5.1.ii", _base_params(n, m, p, e=e),
        _matrix_witnesses("T^e", te, expected)))

    reports.append(make_report(
        "thm5.1.iii", _base_params(n, m, p, e=e),
        _matrix_witnesses("T^(4e)", t4e, ident)))

    if e % 2 == 0:
        reports.append(make_report(
            "thm5.1.iv", _base_params(n, m, p, e=e),
            _matrix_witnesses("T^(2e)", t2e, ident)))
    else:
        reports.append(make_report(
            "thm5.1.iv", _base_params(n, m, p, e=e),
            [witness("hypothesis", "even entry point", f"e={e}")],
            status=HYPOTHESIS_NOT_SATISFIED))

    if e % 2 == 1 and p != 2:
        u_half, u_half_next = fibonacci_pair(m, (e - 1) // 2, p)
        r = u_half_next * pow(u_half, -1, p) % p
        printed = pow(r if e % 4 == 3 else -r, n - 1, p)
        derived = pow(-1, e * (n - 1), p)
        params = _base_params(n, m, p, e=e, r=r,
                              printed_scalar=printed,
                              derived_scalar=derived)
        actual = _scalar_of(t2e, p)
        if t2e == _scalar_matrix(n, printed, p):
            reports.append(make_report("thm5.1.v", params, []))
        elif t2e == _scalar_matrix(n, derived, p):
            reports.append(make_report(
                "thm5.1.v", params,
                [witness("T^(2e) scalar", printed,
                         actual if actual is not None else t2e)],
                status=DISCREPANCY_DOCUMENTED,
                note="computed power matches the derived parity scalar, "
                     "not the printed square-root form"))
        else:
            reports.append(make_report(
                "thm5.1.v", params,
                _matrix_witnesses("T^(2e)", t2e,
                                  _scalar_matrix(n, printed, p))))
    else:
        reason = (witness("hypothesis", "odd entry point", f"e={e}")
                  if e % 2 == 0 else
                  witness("hypothesis", "odd prime", f"p={p}"))
        reports.append(make_report(
            "thm5.1.v", _base_params(n, m, p, e=e), [reason],
            status=HYPOTHESIS_NOT_SATISFIED))
    return reports


def verify_up_theorems(n, m, p, claim_id="thm5.2"):
    """T^(p-1) == I when p | U_{p-1}; T^(p+1) == +-I (sign by parity of n)
    when p | U_{p+1}.

    When p divides both neighbors (equivalently p | m for odd p), the two
    sign claims collide: the power is I while the printed form for even n
    says -I.  The computed I is consistent with the p | U_{p-1} branch, so
    that case is reported as a documented discrepancy, not a failure.
    """
    u_before = fibonacci_pair(m, p - 1, p)[0]
    u_after = fibonacci_pair(m, p + 1, p)[0]
    div_before = u_before == 0
    div_after = u_after == 0
    params = _base_params(n, m, p,
                          divides_before="true" if div_before else "false",
                          divides_after="true" if div_after else "false")
    if not div_before and not div_after:
        return make_report(
            claim_id, params,
            [witness("hypothesis", "p divides U[p-1] or U[p+1]",
                     f"remainders {u_before},{u_after}")],
            status=HYPOTHESIS_NOT_SATISFIED)
    t = build_T(n, m)
    ident = Matrix.identity(n)
    fail_wit = []
    disc_wit = []
    if div_before:
        fail_wit.extend(
            _matrix_witnesses("T^(p-1)", pow_mod(t, p - 1, p), ident))
    if div_after:
        expected = ident if n % 2 == 1 else _scalar_matrix(n, -1, p)
        got = pow_mod(t, p + 1, p)
        if got != expected:
            if div_before and n % 2 == 0 and got == ident:
                disc_wit.append(witness("T^(p+1) scalar", (-1) % p, 1))
            else:
                fail_wit.extend(_matrix_witnesses("T^(p+1)", got, expected))
    if fail_wit:
        return make_report(claim_id, params, fail_wit + disc_wit)
    if disc_wit:
        return make_report(
            claim_id, params, disc_wit, status=DISCREPANCY_DOCUMENTED,
            note="both divisibility hypotheses hold (p divides m); the "
                 "computed power is I, matching the U[p-1] branch")
    return make_report(claim_id, params, [])


def _root_of_char_poly(m, p):
    for x in range(p):
        if (x * x - m * x - 1) % p == 0:
            return x
    return None


def verify_pair_period_lemma(m, p, claim_id="lem5.3"):
    """If x^2 - m x - 1 has a root mod p and p does not divide m^2 + 4,
    the period of (U_k, U_{k+1}) mod p divides p - 1."""
    root = _root_of_char_poly(m, p)
    d_ok = (m * m + 4) % p != 0
    params = {"m": m, "p": p,
              "divides_D": "false" if d_ok else "true",
              "root": root if root is not None else "none"}
    if root is None or not d_ok:
        return make_report(
            claim_id, params,
            [witness("hypothesis",
                     "split characteristic and p coprime to m^2+4",
                     f"root={params['root']},divides_D={params['divides_D']}")],
            status=HYPOTHESIS_NOT_SATISFIED)
    period = pair_period(m, p)
    params["period"] = period
    wit = []
    if (p - 1) % period != 0:
        wit.append(witness("period", f"divisor of {p - 1}", period))
    return make_report(claim_id, params, wit)


def verify_root_theorem(n, m, p, claim_id="thm5.4"):
    """Same hypothesis as the period lemma; concludes T^(p-1) == I."""
    root = _root_of_char_poly(m, p)
    d_ok = (m * m + 4) % p != 0
    params = _base_params(n, m, p, root=root if root is not None else "none")
    if root is None or not d_ok:
        return make_report(
            claim_id, params,
            [witness("hypothesis",
                     "split characteristic and p coprime to m^2+4",
                     f"root={params['root']},divides_D={params['divides_D']}")],
            status=HYPOTHESIS_NOT_SATISFIED)
    got = pow_mod(build_T(n, m), p - 1, p)
    return make_report(
        claim_id, params,
        _matrix_witnesses("T^(p-1)", got, Matrix.identity(n)))


def _prime_factors(k):
    out = []
    q = 2
    while q * q <= k:
        if k % q == 0:
            out.append(q)
            while k % q == 0:
                k //= q
        q += 1
    if k > 1:
        out.append(k)
    return out


def order_mod_p(n, m, p):
    """Multiplicative order of T mod p, refined down from 4 * entry point."""
    t = build_T(n, m)
    ident = Matrix.identity(n)
    k = 4 * entry_point(m, p)
    if pow_mod(t, k, p) != ident:
        raise ArithmeticError(f"T^(4e) is not the identity mod {p}")
    for q in _prime_factors(k):
        while k % q == 0 and pow_mod(t, k // q, p) == ident:
            k //= q
    return k


def verify_order(n, m, p, claim_id="ord5"):
    """T has finite order mod p dividing 4 * entry_point(m, p); the report
    records the exact order."""
    e = entry_point(m, p)
    t = build_T(n, m)
    ident = Matrix.identity(n)
    full = pow_mod(t, 4 * e, p)
    params = _base_params(n, m, p, e=e)
    if full != ident:
        return make_report(claim_id, params,
                           _matrix_witnesses("T^(4e)", full, ident))
    order = order_mod_p(n, m, p)
    params["order"] = order
    return make_report(claim_id, params, [])
