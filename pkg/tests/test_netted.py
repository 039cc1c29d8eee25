"""Netted stencils: coefficient quads, binomial families, tableau sampling."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nettedmat.binomials import binom
from nettedmat.matrices import Matrix
from nettedmat.netted import (FAMILY_KINDS, CoeffQuad, NettedParams, Tableau,
                              boundary_check, build_family, coeff_sequences,
                              sample_tableau, scalar_recurrence_check,
                              tableau_violations, verify_power_netted,
                              verify_sample)
from nettedmat.sequences import fibonacci

small_int = st.integers(min_value=-4, max_value=4)
params_st = st.tuples(small_int, small_int, small_int, small_int).filter(any)

STENCILS = (
    NettedParams(1, 1, 0, 1),
    NettedParams(1, 1, -1, 0),
    NettedParams(0, 1, -1, 1),
    NettedParams(1, 2, -1, 0),
    NettedParams(2, 1, 1, 1),
)


def stencil_violations(mat, params):
    """Independent interior-cell check, written directly from the defining
    equation rather than through verify_power_netted."""
    a, b, g, d = params
    bad = []
    for i in range(1, mat.nrows):
        for j in range(1, mat.ncols):
            lhs = d * mat[i, j]
            rhs = a * mat[i - 1, j] + b * mat[i - 1, j - 1] + g * mat[i, j - 1]
            if lhs != rhs:
                bad.append((i + 1, j + 1, lhs, rhs))
    return bad


def test_family_kind_enumeration():
    assert len(FAMILY_KINDS) == 12
    assert "a1" in FAMILY_KINDS
    assert "a2.altij" in FAMILY_KINDS


def test_family_frozen_matrices():
    m1, p1 = build_family("a1", 3, 2)
    assert m1.rows == ((1, 0, 0), (2, 1, 0), (4, 4, 1))
    assert p1 == NettedParams(2, 1, 0, 1)

    m2, p2 = build_family("a2", 3, 2)
    assert m2.rows == ((0, 0, 1), (0, 1, 2), (1, 4, 4))
    assert p2 == NettedParams(1, 2, -1, 0)

    m3, p3 = build_family("a3", 3, 1)
    assert m3.rows == ((1, 2, 1), (0, 1, 1), (0, 0, 1))
    assert p3 == NettedParams(0, 1, -1, 1)

    m3b, _ = build_family("a3", 2, 1)
    assert m3b.rows == ((1, 1), (0, 1))

    m3w, p3w = build_family("a3", 3, 2)
    assert m3w.rows == ((1, 4, 4), (0, 1, 2), (0, 0, 1))
    assert p3w == NettedParams(0, 1, -2, 1)

    mt, pt = build_family("a1.alti", 3, 1)
    assert mt.rows == ((1, 0, 0), (-1, -1, 0), (1, 2, 1))
    assert pt == NettedParams(-1, -1, 0, 1)


def test_family_rejects_bad_input():
    with pytest.raises(ValueError):
        build_family("a4", 3)
    with pytest.raises(ValueError):
        build_family("a1.alt", 3)
    with pytest.raises(ValueError):
        build_family("a1", 0)


def test_all_kinds_satisfy_their_stencil_under_powers():
    # independent of verify_power_netted: raw ** powers, direct cell loop
    for kind in FAMILY_KINDS:
        for n in (2, 3, 4, 5):
            for m in (1, 2):
                mat, params = build_family(kind, n, m)
                quads = coeff_sequences(params, 3)
                for q in quads:
                    assert stencil_violations(mat ** q.e, q[1:]) == []
                rep = verify_power_netted(mat, params, 3)
                assert rep.status == "pass"
                assert rep.params["cells"] == str(3 * (n - 1) * (n - 1))


def test_a3_sign_variant_breaks():
    # the nearby sign pattern (0,-1,1,1) fails at the first interior cell;
    # (0,1,-m,1) is the stencil this family actually satisfies
    mat, _ = build_family("a3", 3, 1)
    rep = verify_power_netted(mat, NettedParams(0, -1, 1, 1), 1)
    assert rep.status == "fail"
    assert rep.witnesses[0][0] == "e=1,i=2,j=2"


def test_identity_matrix_is_netted():
    rep = verify_power_netted(Matrix.identity(4), NettedParams(0, 1, 0, 1), 5)
    assert rep.status == "pass"


def test_coeff_sequences_frozen_pell():
    quads = coeff_sequences(NettedParams(1, 2, -1, 0), 3)
    assert quads[0] == CoeffQuad(1, 1, 2, -1, 0)
    assert quads[1] == CoeffQuad(2, 2, 5, -2, 1)
    assert quads[2] == CoeffQuad(3, 5, 12, -5, 2)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_coeff_sequences_fibonacci_form(m):
    # for (1, m, -1, 0) the quad at power e is (U_e, U_{e+1}, -U_e, U_{e-1})
    quads = coeff_sequences(NettedParams(1, m, -1, 0), 50)
    for q in quads:
        u = fibonacci(m, q.e)
        assert q == CoeffQuad(q.e, u, fibonacci(m, q.e + 1), -u,
                              fibonacci(m, q.e - 1))


@given(params=params_st)
def test_second_quad_closed_form(params):
    a, b, g, d = params
    q = coeff_sequences(NettedParams(*params), 2)[1]
    assert q == CoeffQuad(2, a * (d + b), b * b - a * g, g * (b + d),
                          d * d - a * g)


@given(params=params_st)
@settings(max_examples=60)
def test_scalar_recurrence_always_passes(params):
    rep = scalar_recurrence_check(NettedParams(*params), e_max=12)
    assert rep.status == "pass"


def test_scalar_variant_multiplier():
    # the (beta+gamma) multiplier coincides with (beta+delta) when
    # gamma == delta and is recorded as a difference otherwise
    agree = scalar_recurrence_check(NettedParams(1, 2, 1, 1))
    assert agree.params["variant_multiplier"] == "agrees"
    differ = scalar_recurrence_check(NettedParams(1, 2, -1, 0))
    assert differ.params["variant_multiplier"].startswith("differs@")
    ident = scalar_recurrence_check(NettedParams(0, 1, 0, 1))
    assert ident.params["variant_multiplier"].startswith("differs@")


@given(params=params_st.filter(lambda p: p[2] == p[3]))
@settings(max_examples=30)
def test_scalar_variant_agrees_when_gamma_equals_delta(params):
    rep = scalar_recurrence_check(NettedParams(*params), e_max=10)
    assert rep.params["variant_multiplier"] == "agrees"


def test_input_validation():
    with pytest.raises(ValueError):
        coeff_sequences(NettedParams(0, 0, 0, 0), 3)
    with pytest.raises(ValueError):
        coeff_sequences(NettedParams(1, 1, 0, 1), 0)
    with pytest.raises(ValueError):
        verify_power_netted(Matrix.identity(2), NettedParams(0, 0, 0, 0), 2)
    with pytest.raises(ValueError):
        sample_tableau(NettedParams(1, 1, 0, 1), 1, seed=0)
    with pytest.raises(TypeError):
        sample_tableau(NettedParams(1, 1, 0, "1"), 3, seed=0)


def test_sample_determinism():
    params = NettedParams(1, 1, -1, 0)
    t1 = sample_tableau(params, 4, seed=7)
    t2 = sample_tableau(params, 4, seed=7)
    assert t1.grid == t2.grid
    grids = {sample_tableau(params, 4, seed=s).grid for s in range(6)}
    assert len(grids) > 1


def test_sampled_tableaux_verify():
    for params in STENCILS:
        for n in (3, 4, 5):
            for seed in (0, 1, 2):
                rep = verify_sample(params, n, seed)
                assert rep.status == "pass", (params, n, seed)
                t = sample_tableau(params, n, seed)
                assert boundary_check(t).status == "pass"


def test_tableau_inner_matrix():
    t = sample_tableau(NettedParams(1, 1, 0, 1), 3, seed=1)
    inner = t.inner_matrix()
    assert inner.nrows == inner.ncols == 3
    assert inner[0, 0] == t.grid[1][1]
    assert inner[2, 2] == t.grid[3][3]


def test_corrupted_tableau_is_caught():
    t = sample_tableau(NettedParams(1, 1, -1, 0), 4, seed=3)
    assert tableau_violations(t) == []
    grid = [list(r) for r in t.grid]
    grid[2][2] += 1
    bad = Tableau(t.n, tuple(tuple(r) for r in grid), t.params)
    wit = tableau_violations(bad)
    assert wit
    # the flipped cell sits in four stencil equations; every witness must
    # point at one of them
    incident = {"i=2,j=2", "i=2,j=3", "i=3,j=2", "i=3,j=3"}
    for w in wit:
        assert w[0].startswith("stencil,")
        assert w[0].split(",", 1)[1] in incident


def test_extended_binomial_grid_is_in_kernel():
    # the full (n+2)-square extension of the column-mirrored family, built
    # from binomials with negative upper index, satisfies every constraint;
    # note its column 0 is not identically zero
    n = 4
    grid = tuple(tuple(binom(i - 1, n - j) for j in range(n + 2))
                 for i in range(n + 2))
    t = Tableau(n, grid, NettedParams(1, 1, -1, 0))
    assert tableau_violations(t) == []
    assert grid[n + 1][0] == 1


def test_trivial_kernel_reports_hypothesis():
    # generic coprime coefficients leave only the zero tableau
    rep = verify_sample(NettedParams(2, 3, 5, 7), 3, seed=0)
    assert rep.status in ("hypothesis-not-satisfied", "pass")
    if rep.status == "hypothesis-not-satisfied":
        assert rep.witnesses == [("kernel", "nontrivial", "trivial")]
