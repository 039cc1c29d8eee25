"""Generalized Fibonacci matrices: construction, powers, closed forms."""

from fractions import Fraction

import pytest

from nettedmat.binomials import binom
from nettedmat.fibmat import (build_T, build_T_inverse, build_w,
                              closed_form_entry, verify_closed_forms,
                              verify_corollary_identities, verify_inverse,
                              verify_power_vector)
from nettedmat.matrices import Matrix
from nettedmat.polynomials import indeterminate
from nettedmat.sequences import fibonacci

M = indeterminate("m")


def test_build_T_frozen():
    assert build_T(1, 7).rows == ((1,),)
    assert str(build_T(2, M)) == "[[0,1],[1,m]]"
    assert build_T(3, 2).rows == ((0, 0, 1), (0, 1, 2), (1, 4, 4))
    assert str(build_T(3, M)) == "[[0,0,1],[0,1,m],[1,2*m,m^2]]"


def test_build_T_squared_symbolic_frozen():
    assert str(build_T(3, M) ** 2) == (
        "[[1,2*m,m^2],"
        "[m,2*m^2 + 1,m^3 + m],"
        "[m^2,2*m^3 + 2*m,m^4 + 2*m^2 + 1]]")


def test_build_T_cubed_symbolic_frozen():
    assert str(build_T(3, M) ** 3) == (
        "[[m^2,2*m^3 + 2*m,m^4 + 2*m^2 + 1],"
        "[m^3 + m,2*m^4 + 4*m^2 + 1,m^5 + 3*m^3 + 2*m],"
        "[m^4 + 2*m^2 + 1,2*m^5 + 6*m^3 + 4*m,m^6 + 4*m^4 + 4*m^2]]")


def bordered(n, m):
    """Oracle construction: zero-extend the previous matrix into columns
    2..n, set the first column to (0,...,0,1), and generate the last row by
    a[n][j] = m*a[n-1][j] + a[n-1][j+1]."""
    rows = [[1]]
    for k in range(2, n + 1):
        rows = [[0] + r for r in rows]
        last = rows[-1]
        rows.append([m * last[j] + (last[j + 1] if j + 1 < k else 0)
                     for j in range(k)])
    return Matrix(rows)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_bordering_oracle_matches(m):
    for n in range(1, 13):
        assert bordered(n, m) == build_T(n, m)


def test_bordering_oracle_matches_symbolic():
    for n in range(1, 7):
        assert bordered(n, M) == build_T(n, M)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_uniqueness_invariants(m):
    # first row is the last standard basis vector, last column is the
    # geometric column m^(i-1), interior follows a two-term recurrence
    for n in range(2, 13):
        rows = build_T(n, m).rows
        assert rows[0] == tuple([0] * (n - 1) + [1])
        for i in range(n):
            assert rows[i][n - 1] == m ** i
        for i in range(1, n):
            for j in range(n):
                up_right = rows[i - 1][j + 1] if j + 1 < n else 0
                assert rows[i][j] == m * rows[i - 1][j] + up_right


def test_build_w_frozen():
    assert build_w(2, 1) == (1, 0)
    assert build_w(3, 1) == (-1, 1, 0)
    assert build_w(4, 2) == (5, -2, 1, 0)


def test_seed_vector_walks_the_sequence():
    t = build_T(3, 1)
    v1 = t * build_w(3, 1)
    assert v1 == (0, 1, 1)
    assert t * v1 == (1, 2, 3)


def test_verify_power_vector_grids():
    for n in range(2, 6):
        for m in (1, 2, 3):
            assert verify_power_vector(n, m, 4).status == "pass"
    for n in range(2, 6):
        assert verify_power_vector(n, M, 3).status == "pass"


def test_construction_rejects_bad_n():
    for fn in (build_T, build_w, build_T_inverse):
        with pytest.raises(ValueError):
            fn(0)


def test_closed_form_frozen():
    assert closed_form_entry(3, 1, 2, 1, 2) == 2
    assert closed_form_entry(3, 2, 3, 2, 2) == 49


def test_closed_form_matches_powers_directly():
    n, m = 4, 2
    pw = build_T(n, m) ** 3
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i in (1, 2, n) or j in (1, 2, n):
                assert closed_form_entry(n, m, 3, i, j) == pw[i - 1, j - 1]


def test_verify_closed_forms_grid():
    for n in range(2, 7):
        for m in (1, 2, 3):
            rep = verify_closed_forms(n, m, 4)
            assert rep.status == "pass", (n, m)


def test_closed_form_errors():
    with pytest.raises(ValueError):
        closed_form_entry(5, 1, 2, 3, 3)
    with pytest.raises(ValueError):
        closed_form_entry(3, 1, 0, 1, 1)
    with pytest.raises(ValueError):
        closed_form_entry(3, 1, 2, 4, 1)


def test_last_line_shift():
    # last row and column of T^e coincide with first row and column of
    # T^(e+1); cross-checked against raw powers
    n, m = 4, 2
    t = build_T(n, m)
    for e in (1, 2, 3):
        lo, hi = t ** e, t ** (e + 1)
        for j in range(n):
            assert lo[n - 1, j] == hi[0, j]
            assert lo[j, n - 1] == hi[j, 0]


def column2_variant(n, m, e, i):
    """Nearby exponent arrangement with the weight shifted onto U_{e-1};
    kept as documentation that the implemented exponents are the right ones."""
    u_prev, u_cur, u_next = (fibonacci(m, e - 1), fibonacci(m, e),
                             fibonacci(m, e + 1))
    first = (n - i) * u_prev ** (n - i) * u_cur ** (i - 1)
    second = 0
    if i >= 2:
        second = (i - 1) * u_prev ** (n - i + 1) * u_cur ** (i - 2) * u_next
    return first + second


def test_column2_variant_is_wrong():
    n, m, e = 3, 2, 3
    pw = build_T(n, m) ** e
    actual = [pw[i - 1, 1] for i in (1, 2, 3)]
    assert actual == [20, 49, 120]
    assert [closed_form_entry(n, m, e, i, 2) for i in (1, 2, 3)] == actual
    assert [column2_variant(n, m, e, i) for i in (1, 2, 3)] == [8, 58, 240]


def test_inverse_frozen():
    assert str(build_T_inverse(2, M)) == "[[-m,1],[1,0]]"
    assert build_T_inverse(2, 3).rows == ((-3, 1), (1, 0))
    assert build_T_inverse(1, 5).rows == ((1,),)


def test_inverse_is_two_sided():
    for n, m in ((2, 1), (5, 3), (12, 5)):
        t, ti = build_T(n, m), build_T_inverse(n, m)
        ident = Matrix.identity(n)
        assert t * ti == ident
        assert ti * t == ident
        assert verify_inverse(n, m).status == "pass"
    for n in (2, 5, 8):
        assert verify_inverse(n, M).status == "pass"


def test_corollaries_pass_and_are_ordered():
    for n in range(2, 6):
        for m in (1, 2):
            reps = verify_corollary_identities(n, m, 3)
            assert [r.claim_id for r in reps] == [
                "cor3.4.1", "cor3.4.2", "cor3.4.3", "cor3.4.4", "rem3.5"]
            for r in reps:
                assert r.status == "pass", (n, m, r.claim_id)


def test_corollaries_reject_small_n():
    with pytest.raises(ValueError):
        verify_corollary_identities(1, 1, 2)


def test_first_row_window_instance():
    # n=2, m=1, l=2, p=1: the first-row contraction sums to U_3 = 2
    n, m, l, p = 2, 1, 2, 1
    u = lambda k: fibonacci(m, k)
    lhs = sum(binom(n - 1, j - 1) * u(l - 1) ** (n - j) * u(l) ** (j - 1)
              * u((n - 1) * p + j - 1)
              for j in range(1, n + 1))
    assert lhs == 2 == u((n - 1) * (l + p))


def test_row_contraction_instance():
    # n=3, m=2, l=2, p=1, i=2 against the explicit second row of T^2
    row = (build_T(3, 2) ** 2).row(1)
    assert row == (2, 9, 10)
    u = lambda k: fibonacci(2, k)
    lhs = sum(u(2 * 1 + j - 1) * row[j - 1] for j in (1, 2, 3))
    assert lhs == 169 == u(2 * (2 + 1) + 1)


def test_second_row_window_fraction_oracle():
    # the uniform one-formula version of the second-row contraction: every
    # j term carries U_{l-1}^(n-j-1) * U_l^(j-2), negative exponents and
    # all, evaluated over Fraction; defined only for l >= 2 where both
    # denominators are nonzero
    for n in range(2, 6):
        for m in (1, 2):
            u = lambda k: fibonacci(m, k)
            for l in (2, 3, 4):
                sign = 1 if l % 2 == 0 else -1
                for p in range(4):
                    lhs = Fraction(0)
                    for j in range(1, n + 1):
                        mixed = (u(l) ** 2 * binom(n - 1, j - 1)
                                 + sign * binom(n - 2, j - 2))
                        lhs += (Fraction(u(l - 1)) ** (n - j - 1)
                                * Fraction(u(l)) ** (j - 2)
                                * mixed * u((n - 1) * p + j - 1))
                    assert lhs == u((n - 1) * (l + p) + 1), (n, m, l, p)
