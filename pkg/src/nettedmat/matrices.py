"""Exact dense matrices over the integers, rationals, or polynomial rings.

Entries are ints, fractions.Fraction, or Poly values; all arithmetic is
exact.  The characteristic polynomial uses the trace recurrence (Newton's
identities), whose interim divisions by 1..n are asserted exact, with the
power-sum traces read off a baby-step/giant-step power table so only about
2*sqrt(n) full matrix products are needed.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polynomials import Poly, exact_div

try:
    from gmpy2 import mpz as _mpz
except ImportError:
    _mpz = None


class ShapeError(ValueError):
    """Operand dimensions do not line up."""


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ShapeError("matrix must have at least one row and column")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ShapeError("ragged rows")
        self.rows = rows

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n))
                         for i in range(n)))

    @classmethod
    def zero(cls, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        return cls(tuple((0,) * ncols for _ in range(nrows)))

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.rows == other.rows
        return NotImplemented

    def __add__(self, other):
        self._need_same_shape(other)
        return Matrix(tuple(tuple(a + b for a, b in zip(ra, rb))
                            for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other):
        self._need_same_shape(other)
        return Matrix(tuple(tuple(a - b for a, b in zip(ra, rb))
                            for ra, rb in zip(self.rows, other.rows)))

    def __neg__(self):
        return self.map(lambda x: -x)

    def _need_same_shape(self, other):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ShapeError(
                f"{self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ShapeError(
                    f"{self.nrows}x{self.ncols} times "
                    f"{other.nrows}x{other.ncols}")
            return Matrix(_mul_rows(self.rows, other.rows))
        if isinstance(other, (list, tuple)):
            if self.ncols != len(other):
                raise ShapeError(
                    f"{self.nrows}x{self.ncols} times vector of "
                    f"length {len(other)}")
            return tuple(
                sum(a * v for a, v in zip(r, other) if a and v)
                for r in self.rows)
        return self.map(lambda x: x * other)

    def __rmul__(self, other):
        return self.map(lambda x: other * x)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        if self.nrows != self.ncols:
            raise ShapeError("power of a non-square matrix")
        result = Matrix.identity(self.nrows)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __mod__(self, p):
        return self.map(lambda x: x % p)

    def transpose(self):
        return Matrix(tuple(zip(*self.rows))) if self.rows else self

    def trace(self):
        return sum(self.rows[i][i] for i in range(self.nrows))

    def map(self, fn):
        return Matrix(tuple(tuple(fn(x) for x in r) for r in self.rows))

    def __str__(self):
        return "[" + ",".join(
            "[" + ",".join(str(x) for x in r) + "]" for r in self.rows) + "]"

    def __repr__(self):
        return f"Matrix({self.rows!r})"


def _mul_rows(a, b):
    """Raw row-of-rows product; inner loop skips zero left entries."""
    ncols = len(b[0]) if b else 0
    out = []
    for arow in a:
        acc = [0] * ncols
        for s, ais in enumerate(arow):
            if ais:
                brow = b[s]
                for j in range(ncols):
                    bsj = brow[j]
                    if bsj:
                        acc[j] = acc[j] + ais * bsj
        out.append(acc)
    return out


def powers(mat, e_max):
    """Yield (e, mat**e) for e = 1..e_max, one product per step."""
    acc = None
    for e in range(1, e_max + 1):
        acc = mat if acc is None else acc * mat
        yield e, acc


def pow_mod(mat, e, p):
    """mat**e with entries reduced modulo p at every step."""
    if not isinstance(e, int) or e < 0:
        raise ValueError("exponent must be a nonnegative integer")
    if mat.nrows != mat.ncols:
        raise ShapeError("power of a non-square matrix")
    result = Matrix.identity(mat.nrows)
    base = mat % p
    while e:
        if e & 1:
            result = (result * base) % p
        e >>= 1
        if e:
            base = (base * base) % p
    return result


def charpoly(mat, var="x"):
    """det(mat - var*I) as a Poly, lowest degree first.

    Works over Z, Q, and polynomial coefficient rings.  Integer matrices
    are promoted to gmpy2 bignums when available.
    """
    n = mat.nrows
    if n != mat.ncols:
        raise ShapeError("characteristic polynomial of a non-square matrix")
    rows = [list(r) for r in mat.rows]
    use_mpz = _mpz is not None and all(
        type(x) is int for r in rows for x in r)
    if use_mpz:
        rows = [[_mpz(x) for x in r] for r in rows]
    psums = _power_traces(rows, n)
    # det(xI - A) = x^n + c_1 x^{n-1} + ... + c_n with
    # p_k + c_1 p_{k-1} + ... + c_{k-1} p_1 + k c_k = 0
    cs = []
    for k in range(1, n + 1):
        s = psums[k - 1]
        for i, ci in enumerate(cs, start=1):
            s = s + ci * psums[k - i - 1]
        cs.append(exact_div(-s, k))
    coeffs = list(reversed(cs)) + [1]
    if n & 1:
        coeffs = [-c for c in coeffs]
    if use_mpz:
        coeffs = [int(c) for c in coeffs]
    return Poly(coeffs, var)


def _power_traces(rows, n_pow):
    """[tr(A^1), ..., tr(A^n_pow)] from a baby-step/giant-step table."""
    if n_pow == 0:
        return []
    g = max(1, math.isqrt(n_pow))
    babies = [rows]
    for _ in range(g - 1):
        babies.append(_mul_rows(babies[-1], rows))
    q_max = (n_pow - 1) // g
    giants = [None]
    if q_max >= 1:
        giants.append(babies[g - 1])
    for _ in range(q_max - 1):
        giants.append(_mul_rows(giants[-1], babies[g - 1]))
    out = []
    for k in range(1, n_pow + 1):
        q, r = divmod(k - 1, g)
        baby = babies[r]
        if q == 0:
            out.append(sum(baby[i][i] for i in range(len(baby))))
        else:
            giant = giants[q]
            n = len(baby)
            out.append(sum(giant[i][s] * baby[s][i]
                           for i in range(n) for s in range(n)
                           if giant[i][s] and baby[s][i]))
    return out


def nullspace(mat):
    """Primitive integer basis of the right kernel.

    Accepts a Matrix or raw rows with int or Fraction entries.  Each basis
    vector is a tuple of coprime ints whose first nonzero entry is positive.
    Elimination is fraction-free (Bareiss), so intermediate values stay
    integral.
    """
    src = mat.rows if isinstance(mat, Matrix) else tuple(tuple(r) for r in mat)
    if not src:
        return []
    ncols = len(src[0])
    work = []
    for r in src:
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
        row = [int(x * den) for x in r]
        g = math.gcd(*row) if row else 0
        if g > 1:
            row = [x // g for x in row]
        if any(row):
            work.append(row)
    nrows = len(work)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pc = work[r][c]
        rowr = work[r]
        for i in range(r + 1, nrows):
            ric = work[i][c]
            rowi = work[i]
            for j in range(c, ncols):
                rowi[j] = (pc * rowi[j] - ric * rowr[j]) // prev
        pivots.append(c)
        prev = pc
        r += 1
        if r == nrows:
            break
    rank = r
    pivot_set = set(pivots)
    basis = []
    for f in (c for c in range(ncols) if c not in pivot_set):
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for k in range(rank - 1, -1, -1):
            p = pivots[k]
            rowk = work[k]
            s = Fraction(0)
            for j in range(p + 1, ncols):
                if rowk[j] and x[j]:
                    s += rowk[j] * x[j]
            x[p] = -s / rowk[p]
        den = 1
        for v in x:
            den = den * v.denominator // math.gcd(den, v.denominator)
        ints = [int(v * den) for v in x]
        g = math.gcd(*ints)
        if g > 1:
            ints = [v // g for v in ints]
        if next(v for v in ints if v) < 0:
            ints = [-v for v in ints]
        basis.append(tuple(ints))
    return basis
