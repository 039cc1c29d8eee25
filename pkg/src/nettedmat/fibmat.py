"""Generalized Fibonacci matrices and their verified identities.

build_T(n, m) is the n-by-n matrix with entry (i, j) equal to
m^(i+j-n-1) * C(i-1, n-j), zero where the binomial vanishes (the weight
exponent is nonnegative exactly there, so entries stay polynomial in m).
Its powers interleave the sequence U_k = fibonacci(m, k): T is netted, a
fixed alternating seed vector pushes powers along the U sequence, rows and
columns 1, 2, n of T^e have closed forms in U, and the inverse is again
binomial.  Each verifier replays one of those statements against exact
arithmetic and returns a Report.
"""

from __future__ import annotations

from .binomials import binom
from .matrices import Matrix, powers
from .reports import make_report, witness
from .sequences import fibonacci


def build_T(n, m=1):
    """The generalized Fibonacci matrix; m may be an int or a Poly."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            c = binom(i - 1, n - j)
            row.append(c * m ** (i + j - n - 1) if c else 0)
        rows.append(row)
    return Matrix(rows)


def build_w(n, m=1):
    """Seed vector with component j equal to (-1)^(n+1-j) * U_{n-j}."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return tuple(
        fibonacci(m, n - j) if (n + 1 - j) % 2 == 0 else -fibonacci(m, n - j)
        for j in range(1, n + 1))


def build_T_inverse(n, m=1):
    """Closed-form inverse: entry (i, j) is
    (-1)^(n+i+j+1) * m^(n+1-i-j) * C(n-i, j-1), zero with the binomial."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            c = binom(n - i, j - 1)
            if c:
                v = c * m ** (n + 1 - i - j)
                row.append(-v if (n + i + j + 1) % 2 else v)
            else:
                row.append(0)
        rows.append(row)
    return Matrix(rows)


def verify_power_vector(n, m, e_max, claim_id="thm3.2", info=None):
    """Check that T^(e+1) applied to the seed vector yields consecutive
    U values: component i equals U_{(n-1)e + i - 1}, for e = 0..e_max."""
    t = build_T(n, m)
    vec = build_w(n, m)
    wit = []
    for e in range(e_max + 1):
        vec = t * vec
        for i in range(1, n + 1):
            expected = fibonacci(m, (n - 1) * e + i - 1)
            if vec[i - 1] != expected:
                wit.append(witness(f"e={e},i={i}", expected, vec[i - 1]))
    out = dict(info or {})
    out.update(n=n, m=m, e_max=e_max)
    return make_report(claim_id, out, wit)


def _term(coef, *factors):
    """coef times a product of powers; a zero coefficient short-circuits so
    exponents only need to be nonnegative when the term is actually present."""
    if not coef:
        return 0
    val = coef
    for base, exp in factors:
        if exp < 0:
            raise ArithmeticError("negative exponent in a live term")
        val = val * base ** exp
    return val


def closed_form_entry(n, m, e, i, j):
    """Entry (i, j) of T^e by closed form, for cells on row or column 1, 2, n.

    Interior cells (rows and columns 3..n-1 on both axes) have no implemented
    closed form and raise ValueError.  Overlapping cases agree, so dispatch
    order is immaterial; last row and column reduce to first row and column
    at exponent e + 1.
    """
    if e < 1:
        raise ValueError("e must be at least 1")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("entry outside the matrix")
    u_prev, u_cur, u_next = (fibonacci(m, e - 1), fibonacci(m, e),
                             fibonacci(m, e + 1))
    if i == 1:
        return _term(binom(n - 1, j - 1), (u_prev, n - j), (u_cur, j - 1))
    if j == 1:
        return _term(1, (u_prev, n - i), (u_cur, i - 1))
    if i == 2:
        return (_term(binom(n - 2, j - 1), (u_prev, n - j - 1), (u_cur, j))
                + _term(binom(n - 2, j - 2), (u_prev, n - j),
                        (u_cur, j - 2), (u_next, 1)))
    if j == 2:
        return (_term(n - i, (u_prev, n - i - 1), (u_cur, i))
                + _term(i - 1, (u_prev, n - i),
                        (u_cur, i - 2), (u_next, 1)))
    if i == n:
        return closed_form_entry(n, m, e + 1, 1, j)
    if j == n:
        return closed_form_entry(n, m, e + 1, i, 1)
    raise ValueError(f"no closed form for interior cell ({i},{j})")


def _covered_cells(n):
    lines = {1, 2, n}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i in lines or j in lines:
                yield i, j


def verify_closed_forms(n, m, e_max, claim_id="prop3.6", info=None):
    """Closed forms against exact powers on rows and columns 1, 2, n."""
    t = build_T(n, m)
    wit = []
    cells = 0
    for e, pw in powers(t, e_max):
        rows = pw.rows
        for i, j in _covered_cells(n):
            cells += 1
            expected = closed_form_entry(n, m, e, i, j)
            actual = rows[i - 1][j - 1]
            if actual != expected:
                wit.append(witness(f"e={e},i={i},j={j}", expected, actual))
    out = dict(info or {})
    out.update(n=n, m=m, e_max=e_max, cells=cells)
    return make_report(claim_id, out, wit)


def verify_inverse(n, m, claim_id="thm4.2", info=None):
    """build_T_inverse is a two-sided inverse of build_T."""
    t = build_T(n, m)
    ti = build_T_inverse(n, m)
    ident = Matrix.identity(n)
    wit = []
    for tag, prod in (("T*Tinv", t * ti), ("Tinv*T", ti * t)):
        if prod != ident:
            for i in range(n):
                for j in range(n):
                    if prod.rows[i][j] != ident.rows[i][j]:
                        wit.append(witness(f"{tag},i={i + 1},j={j + 1}",
                                           ident.rows[i][j],
                                           prod.rows[i][j]))
    out = dict(info or {})
    out.update(n=n, m=m)
    return make_report(claim_id, out, wit)


def verify_corollary_identities(n, m, l_max, p_max=None, info=None):
    """The four summation identities plus the row-sum remark, as Reports.

    Identity 1: the seed-vector combination of row i of T telescopes to
    U_{i-1}; identity 2 is the same through the literal double sum for T^2.
    Identities 3 and 4 slide a window of U values against first-row and
    second-row closed-form coefficients of T^l; the remark contracts any
    row of T^l against a shifted U window.  Identity 4's j = 1 and j = n
    terms are used in the equivalent product form that stays in the
    coefficient ring (the raw display divides by U_{l-1} or multiplies
    U_l^{-1}, which is indeterminate at l = 0, 1).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if p_max is None:
        p_max = l_max
    u = lambda k: fibonacci(m, k)
    t = build_T(n, m)
    rows = t.rows
    base = dict(info or {})
    base.update(n=n, m=m)
    out = []

    wit = []
    for i in range(1, n + 1):
        lhs = 0
        for j in range(1, n + 1):
            term = rows[i - 1][j - 1] * u(n - j)
            lhs = lhs + term if (n + 1 - j) % 2 == 0 else lhs - term
        if lhs != u(i - 1):
            wit.append(witness(f"i={i}", u(i - 1), lhs))
    out.append(make_report("cor3.4.1", dict(base, tuples=n), wit))

    wit = []
    for i in range(1, n + 1):
        lhs = 0
        for j in range(1, n + 1):
            inner = sum(rows[i - 1][k - 1] * rows[k - 1][j - 1]
                        for k in range(1, n + 1))
            term = inner * u(n - j)
            lhs = lhs + term if (n + 1 - j) % 2 == 0 else lhs - term
        if lhs != u(n + i - 2):
            wit.append(witness(f"i={i}", u(n + i - 2), lhs))
    out.append(make_report("cor3.4.2", dict(base, tuples=n), wit))

    wit = []
    tuples = 0
    for l in range(l_max + 1):
        for p in range(p_max + 1):
            tuples += 1
            lhs = sum(
                _term(binom(n - 1, j - 1), (u(l - 1), n - j),
                      (u(l), j - 1)) * u((n - 1) * p + j - 1)
                for j in range(1, n + 1))
            expected = u((n - 1) * (l + p))
            if lhs != expected:
                wit.append(witness(f"l={l},p={p}", expected, lhs))
    out.append(make_report(
        "cor3.4.3", dict(base, l_max=l_max, p_max=p_max, tuples=tuples), wit))

    wit = []
    tuples = 0
    for l in range(l_max + 1):
        for p in range(p_max + 1):
            tuples += 1
            sign = 1 if l % 2 == 0 else -1
            lhs = (u((n - 1) * p) * _term(1, (u(l - 1), n - 2)) * u(l)
                   + u((n - 1) * p + n - 1) * _term(1, (u(l), n - 2))
                   * u(l + 1))
            for j in range(2, n):
                mixed = (u(l) * u(l) * binom(n - 1, j - 1)
                         + sign * binom(n - 2, j - 2))
                lhs = lhs + _term(mixed, (u(l - 1), n - j - 1),
                                  (u(l), j - 2)) * u((n - 1) * p + j - 1)
            expected = u((n - 1) * (l + p) + 1)
            if lhs != expected:
                wit.append(witness(f"l={l},p={p}", expected, lhs))
    out.append(make_report(
        "cor3.4.4", dict(base, l_max=l_max, p_max=p_max, tuples=tuples), wit))

    wit = []
    tuples = 0
    pw = Matrix.identity(n)
    for l in range(l_max + 1):
        if l:
            pw = pw * t
        for p in range(p_max + 1):
            for i in range(1, n + 1):
                tuples += 1
                lhs = sum(u((n - 1) * p + j - 1) * pw.rows[i - 1][j - 1]
                          for j in range(1, n + 1))
                expected = u((n - 1) * (l + p) + i - 1)
                if lhs != expected:
                    wit.append(witness(f"l={l},p={p},i={i}", expected, lhs))
    out.append(make_report(
        "rem3.5", dict(base, l_max=l_max, p_max=p_max, tuples=tuples), wit))
    return out
