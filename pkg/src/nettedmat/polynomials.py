"""Dense univariate polynomials over exact coefficient rings.

Coefficients are Python ints, fractions.Fraction, or nested Poly values (for
polynomials in one variable whose coefficients live in another polynomial
ring, e.g. characteristic polynomials in x over Z[m]).  Instances are
immutable; nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction


class Poly:
    """Polynomial stored lowest-degree first; trailing zeros are trimmed."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="x"):
        coeffs = tuple(coeffs)
        n = len(coeffs)
        while n and not coeffs[n - 1]:
            n -= 1
        self.coeffs = coeffs[:n]
        self.var = var

    @classmethod
    def constant(cls, value, var="x"):
        return cls((value,), var)

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    def _other_coeffs(self, other):
        if isinstance(other, Poly):
            if other.var != self.var and other.coeffs and self.coeffs:
                raise TypeError(
                    f"mixed variables {self.var!r} and {other.var!r}")
            return other.coeffs
        return (other,)

    def __add__(self, other):
        oc = self._other_coeffs(other)
        a, b = self.coeffs, oc
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            if c:
                out[i] = out[i] + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        oc = self._other_coeffs(other)
        out = list(self.coeffs)
        if len(out) < len(oc):
            out.extend([0] * (len(oc) - len(out)))
        for i, c in enumerate(oc):
            if c:
                out[i] = out[i] - c
        return Poly(out, self.var)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            if other.var != self.var and other.coeffs and self.coeffs:
                raise TypeError(
                    f"mixed variables {self.var!r} and {other.var!r}")
            return self._mul_coeffs(other.coeffs)
        if not other:
            return Poly((), self.var)
        return Poly(tuple(c * other for c in self.coeffs), self.var)

    __rmul__ = __mul__

    def _mul_coeffs(self, oc):
        a, b = self.coeffs, oc
        if not a or not b:
            return Poly((), self.var)
        kron = _kronecker_mul(a, b)
        if kron is not None:
            return Poly(kron, self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if not ci:
                continue
            for j, cj in enumerate(b):
                if cj:
                    out[i + j] = out[i + j] + ci * cj
        return Poly(out, self.var)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly((1,), self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            if self.var == other.var:
                return self.coeffs == other.coeffs
            # constants compare across variables
            if len(self.coeffs) <= 1 and len(other.coeffs) <= 1:
                return self.coeffs == other.coeffs
            return False
        if not self.coeffs:
            return not other and not isinstance(other, Poly)
        if len(self.coeffs) == 1:
            return self.coeffs[0] == other
        return False

    def __hash__(self):
        # constants hash like their value so eq/hash stay consistent
        if not self.coeffs:
            return hash(0)
        if len(self.coeffs) == 1:
            return hash(self.coeffs[0])
        return hash((self.var, self.coeffs))

    def __call__(self, value):
        """Evaluate at a ring element (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def map_coefficients(self, fn):
        return Poly(tuple(fn(c) for c in self.coeffs), self.var)

    def exact_div(self, divisor):
        return Poly(tuple(exact_div(c, divisor) for c in self.coeffs),
                    self.var)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            sign, body = _term_string(c, self.var, d)
            if not parts:
                parts.append(body if sign > 0 else "-" + body)
            else:
                parts.append(("+ " if sign > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self.coeffs!r}, var={self.var!r})"


def indeterminate(var="x"):
    """The polynomial `var` itself."""
    return Poly((0, 1), var)


def exact_div(value, divisor):
    """Divide a ring element by an integer; non-exact division is an error."""
    if isinstance(value, Poly):
        return value.exact_div(divisor)
    if isinstance(value, Fraction):
        return value / divisor
    q, r = divmod(value, divisor)
    if r:
        raise ArithmeticError(f"non-exact division of {value} by {divisor}")
    return q


def _power_string(var, deg):
    if deg == 0:
        return ""
    if deg == 1:
        return var
    return f"{var}^{deg}"


def _term_string(coeff, var, deg):
    """(sign, body) for one printed term; sign is +1 or -1."""
    power = _power_string(var, deg)
    if isinstance(coeff, Poly):
        live = [(d, c) for d, c in enumerate(coeff.coeffs) if c]
        if len(live) == 1:
            d2, c2 = live[0]
            sign, inner = _term_string(c2, coeff.var, d2)
            if not power:
                return sign, inner
            if inner == "1":
                return sign, power
            return sign, f"{inner}*{power}"
        body = f"({coeff})"
        return 1, body if not power else f"{body}*{power}"
    sign = -1 if coeff < 0 else 1
    mag = -coeff if sign < 0 else coeff
    if not power:
        return sign, str(mag)
    if mag == 1:
        return sign, power
    return sign, f"{mag}*{power}"


# -- Kronecker-substitution multiplication ---------------------------------
#
# Large integer-coefficient products are packed into single big integers and
# multiplied once, which rides on the subquadratic bigint multiply instead of
# the quadratic schoolbook loop.  Exactness is unaffected: slot width is
# chosen so convolution coefficients can never carry between slots.

try:
    from gmpy2 import mpz as _mpz
except ImportError:
    _mpz = None

_KRON_MIN_OPS = 4096
_INT_TYPES = (int,) if _mpz is None else (int, type(_mpz(0)))


def _pack(coeffs, width):
    buf = bytearray(len(coeffs) * width)
    for i, c in enumerate(coeffs):
        if c:
            nb = (c.bit_length() + 7) // 8
            off = i * width
            buf[off:off + nb] = int(c).to_bytes(nb, "little")
    return int.from_bytes(buf, "little")


def _unpack(value, width, count):
    data = int(value).to_bytes(count * width, "little")
    return [int.from_bytes(data[i * width:(i + 1) * width], "little")
            for i in range(count)]


def _kronecker_mul(a, b):
    """Exact convolution of two int tuples, or None when not applicable."""
    if len(a) * len(b) < _KRON_MIN_OPS:
        return None
    if not all(isinstance(c, _INT_TYPES) for c in a):
        return None
    if not all(isinstance(c, _INT_TYPES) for c in b):
        return None
    amax = max(abs(c) for c in a)
    bmax = max(abs(c) for c in b)
    if not amax or not bmax:
        return None
    bound = amax * bmax * min(len(a), len(b))
    width = bound.bit_length() // 8 + 1
    apos = _pack([c if c > 0 else 0 for c in a], width)
    aneg = _pack([-c if c < 0 else 0 for c in a], width)
    bpos = _pack([c if c > 0 else 0 for c in b], width)
    bneg = _pack([-c if c < 0 else 0 for c in b], width)
    if _mpz is not None:
        apos, aneg = _mpz(apos), _mpz(aneg)
        bpos, bneg = _mpz(bpos), _mpz(bneg)
    count = len(a) + len(b) - 1
    pp = _unpack(apos * bpos, width, count)
    pn = _unpack(apos * bneg, width, count)
    np_ = _unpack(aneg * bpos, width, count)
    nn = _unpack(aneg * bneg, width, count)
    return [pp[i] - pn[i] - np_[i] + nn[i] for i in range(count)]
