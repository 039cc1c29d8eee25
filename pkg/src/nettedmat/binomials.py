"""Binomial coefficients, including the negative-upper-index extension."""

from math import comb


def binom(top, k):
    """C(top, k) for integer arguments.

    Zero for k < 0.  For top >= 0 this is the ordinary coefficient (zero when
    k > top).  For top < 0 it follows the falling-factorial extension
    C(top, k) = (-1)^k * C(-top + k - 1, k), so e.g. C(-1, k) = (-1)^k.
    """
    if k < 0:
        return 0
    if top >= 0:
        return comb(top, k) if k <= top else 0
    mag = comb(-top + k - 1, k)
    return -mag if k & 1 else mag
