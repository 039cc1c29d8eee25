"""Bivariate window series and the matrix-power generating identity.

The entries of T^e, laid out as coefficients of x^(i-1) y^(j-1), form the
window of a rational series N/D with

    N = (U_{e-1} + U_e y)^n
    D = U_{e-1} + U_e y - x (U_e + U_{e+1} y)

verify_genfunc multiplies the window by D and compares against N through
total degree (n-1, n-1): every product coefficient inside the window must
match, including the vanishing of all x^a terms for a >= 1.  For e >= 2 the
constant term of D is nonzero, so D can be inverted as a series over the
rationals and the identity cross-checked from the other side.
"""

from __future__ import annotations

from fractions import Fraction

from .binomials import binom
from .fibmat import build_T
from .matrices import powers
from .reports import HYPOTHESIS_NOT_SATISFIED, make_report, witness
from .sequences import fibonacci


class BiSeries:
    """Dense rectangular window of a series in two variables.

    coeffs[a][b] is the x^a y^b coefficient; everything outside the stored
    window is zero.  Equality pads to a common shape, and multiplication
    takes an explicit output window so truncation is always deliberate.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        rows = tuple(tuple(r) for r in coeffs)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("window must be rectangular and nonempty")
        self.coeffs = rows

    @property
    def deg_x(self):
        return len(self.coeffs) - 1

    @property
    def deg_y(self):
        return len(self.coeffs[0]) - 1

    def coefficient(self, a, b):
        if 0 <= a <= self.deg_x and 0 <= b <= self.deg_y:
            return self.coeffs[a][b]
        return 0

    def mul(self, other, deg_x, deg_y):
        """Product truncated to the window (deg_x, deg_y)."""
        out = [[0] * (deg_y + 1) for _ in range(deg_x + 1)]
        for u, row in enumerate(self.coeffs):
            if u > deg_x:
                break
            for v, c in enumerate(row):
                if v > deg_y:
                    break
                if not c:
                    continue
                for s, orow in enumerate(other.coeffs):
                    a = u + s
                    if a > deg_x:
                        break
                    for t, w in enumerate(orow):
                        b = v + t
                        if b > deg_y:
                            break
                        if w:
                            out[a][b] += c * w
        return BiSeries(out)

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        dx = max(self.deg_x, other.deg_x)
        dy = max(self.deg_y, other.deg_y)
        return all(
            self.coefficient(a, b) == other.coefficient(a, b)
            for a in range(dx + 1) for b in range(dy + 1))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"BiSeries({[list(r) for r in self.coeffs]!r})"


def series_from_matrix(mat):
    """The power window: coefficient of x^(i-1) y^(j-1) is entry (i, j)."""
    return BiSeries(mat.rows)


def series_from_power(n, m, e):
    return series_from_matrix(build_T(n, m) ** e)


def _denominator(m, e):
    u_prev, u_cur, u_next = (fibonacci(m, e - 1), fibonacci(m, e),
                             fibonacci(m, e + 1))
    return BiSeries(((u_prev, u_cur), (-u_cur, -u_next)))


def _numerator(m, e, n, deg_y):
    u_prev, u_cur = fibonacci(m, e - 1), fibonacci(m, e)
    row = []
    for b in range(deg_y + 1):
        c = binom(n, b)
        row.append(c * u_prev ** (n - b) * u_cur ** b if c else 0)
    return BiSeries((row,))


def _invert_window(series, deg_x, deg_y):
    """Series inverse over Fraction; the constant term must be nonzero."""
    lead = series.coefficient(0, 0)
    if not lead:
        raise ZeroDivisionError("constant term is zero")
    lead = Fraction(lead)
    out = [[Fraction(0)] * (deg_y + 1) for _ in range(deg_x + 1)]
    for a in range(deg_x + 1):
        for b in range(deg_y + 1):
            acc = Fraction(1 if a == 0 and b == 0 else 0)
            for u in range(min(a, series.deg_x) + 1):
                for v in range(min(b, series.deg_y) + 1):
                    if u == 0 and v == 0:
                        continue
                    c = series.coefficient(u, v)
                    if c:
                        acc -= c * out[a - u][b - v]
            out[a][b] = acc / lead
    return BiSeries(out)


def verify_genfunc(n, m, e_max, claim_id="thm4.1", info=None):
    """Window times denominator equals numerator, for e = 1..e_max."""
    deg = n - 1
    wit = []
    cells = 0
    for e, pw in powers(build_T(n, m), e_max):
        window = series_from_matrix(pw)
        lhs = window.mul(_denominator(m, e), deg, deg)
        rhs = _numerator(m, e, n, deg)
        for a in range(deg + 1):
            for b in range(deg + 1):
                cells += 1
                got = lhs.coefficient(a, b)
                want = rhs.coefficient(a, b)
                if got != want:
                    wit.append(witness(f"e={e},x^{a}*y^{b}", want, got))
    out = dict(info or {})
    out.update(n=n, m=m, e_max=e_max, cells=cells)
    return make_report(claim_id, out, wit)


def verify_genfunc_inversion(n, m, e_max, claim_id="thm4.1.inv", info=None):
    """Cross-check by inverting the denominator: D^-1 * N reproduces the
    window.  Needs e >= 2 (nonzero constant term) and an integer weight."""
    if not isinstance(m, int):
        raise TypeError("series inversion runs over the rationals; "
                        "m must be an int")
    out = dict(info or {})
    out.update(n=n, m=m, e_max=e_max)
    if e_max < 2:
        return make_report(
            claim_id, out,
            [witness("e range", "e_max >= 2", e_max)],
            status=HYPOTHESIS_NOT_SATISFIED)
    deg = n - 1
    wit = []
    cells = 0
    for e, pw in powers(build_T(n, m), e_max):
        if e < 2:
            continue
        window = series_from_matrix(pw)
        inv = _invert_window(_denominator(m, e), deg, deg)
        back = inv.mul(_numerator(m, e, n, deg), deg, deg)
        for a in range(deg + 1):
            for b in range(deg + 1):
                cells += 1
                got = back.coefficient(a, b)
                want = window.coefficient(a, b)
                if got != want:
                    wit.append(witness(f"e={e},x^{a}*y^{b}", want, got))
    out["cells"] = cells
    return make_report(claim_id, out, wit)
