"""Second-order recurrences x_{k+1} = m*x_k + x_{k-1} and mod-p structure.

fibonacci(1, k) is the Fibonacci sequence, fibonacci(2, k) the Pell numbers;
lucas gives the companion sequence (2, m, ...).  The weight m may be an int
or a Poly, so the same code serves numeric and symbolic callers.
"""


def fibonacci(m, k):
    """U_k with U_0 = 0, U_1 = 1; k = -1 gives 1, anything lower is an error."""
    if k < -1:
        raise ValueError("index must be at least -1")
    if k == -1:
        return 1
    if k == 0:
        return 0
    a, b = 0, 1
    for _ in range(k - 1):
        a, b = b, m * b + a
    return b


def lucas(m, k):
    """V_k with V_0 = 2, V_1 = m; negative indices are an error."""
    if k < 0:
        raise ValueError("index must be nonnegative")
    if k == 0:
        return 2
    a, b = 2, m
    for _ in range(k - 1):
        a, b = b, m * b + a
    return b


def fibonacci_pair(m, k, p):
    """(U_k mod p, U_{k+1} mod p) for k >= 0 in O(k) additions."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    m %= p
    a, b = 0, 1 % p
    for _ in range(k):
        a, b = b, (m * b + a) % p
    return a, b


def entry_point(m, p):
    """Least e >= 1 with p dividing U_e."""
    m %= p
    a, b = 0, 1 % p
    e = 0
    while True:
        a, b = b, (m * b + a) % p
        e += 1
        if a == 0:
            return e


def pair_period(m, p):
    """Least k >= 1 with (U_k, U_{k+1}) congruent to (0, 1) mod p."""
    m %= p
    start = (0, 1 % p)
    a, b = start
    k = 0
    while True:
        a, b = b, (m * b + a) % p
        k += 1
        if (a, b) == start:
            return k
